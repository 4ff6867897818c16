#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unichar/common.hpp"

namespace unichar {

// Exact element of Z[zeta_p] in the basis {1, zeta, ..., zeta^{p-2}}, with
// zeta^{p-1} eliminated through 1 + zeta + ... + zeta^{p-1} = 0 at
// construction time. All character values and inner products live here; for
// p = 2 the ring degenerates to plain integers.
class CycInt {
public:
  explicit CycInt(int p) : p_(p), c_(p - 1) {}
  static CycInt integer(int p, BigInt n);
  static CycInt zeta_pow(int p, long e);  // zeta_p^{e mod p}

  int p() const { return p_; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  CycInt add(const CycInt& o) const;
  CycInt sub(const CycInt& o) const;
  CycInt mul(const CycInt& o) const;
  CycInt neg() const;
  CycInt conj() const;  // zeta^i -> zeta^{-i}
  CycInt scale(const BigInt& n) const;

  bool operator==(const CycInt& o) const { return p_ == o.p_ && c_ == o.c_; }
  bool is_zero() const;
  bool is_rational() const;          // lies in Z
  BigInt rational_value() const;     // requires is_rational()

  // a/n when a is a rational integer divisible by n, else nullopt.
  static std::optional<BigInt> as_integer_multiple(const CycInt& a,
                                                   const BigInt& n);

  // |a|^2 = a * conj(a); rational and nonnegative by construction.
  BigInt norm_squared() const;

  std::string to_string() const;
  std::string to_json() const;  // {"p": p, "coeffs": [...]}

private:
  int p_;
  std::vector<BigInt> c_;

  void check_same(const CycInt& o) const {
    if (p_ != o.p_) throw MathError("cyclotomic arithmetic across different p");
  }
};

}  // namespace unichar
