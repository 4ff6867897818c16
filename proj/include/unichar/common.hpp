#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace unichar {

// Exact integer type for character sums and inner products. Accumulators over
// full group sweeps exceed 32-bit range, so we keep everything arbitrary
// precision and never touch floating point.
using BigInt = boost::multiprecision::cpp_int;

// Thrown on domain violations (zero inversion, mismatched fields, malformed
// descriptors). Verification *findings* are never exceptions; they go into
// reports.
class MathError : public std::runtime_error {
public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an enumeration would exceed the configured budget.
class BudgetError : public std::runtime_error {
public:
  BudgetError(const std::string& what, std::uint64_t required)
      : std::runtime_error(what + " (required budget " +
                           std::to_string(required) + ")"),
        required_budget(required) {}
  std::uint64_t required_budget;
};

// Deterministic splittable RNG: a fixed seed plus a textual tag fully
// determines every sampled check, independently of thread count.
std::uint64_t derive_seed(std::uint64_t seed, const std::string& tag);

}  // namespace unichar
