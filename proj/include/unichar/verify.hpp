#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "unichar/scenarios.hpp"

namespace unichar {

struct Check {
  std::string id;        // stable machine id, e.g. "d4.stab.s124"
  std::string claim;     // what is being verified, in words
  bool pass = false;
  std::string measured;
  std::string expected;
  std::string witness;   // failure detail
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  double wall_ms = 0;

  bool pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }
  Check& add(const std::string& id, const std::string& claim, bool pass,
             const std::string& measured = "", const std::string& expected = "",
             const std::string& witness = "");
  std::string to_text() const;
  std::string to_json() const;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  int threads = 1;
  std::uint64_t enum_budget = SubgroupDescriptor::kDefaultEnumBudget;
  std::uint64_t orbit_budget = 1u << 20;
  bool extended = false;  // optional extra sweeps
};

// Field propositions: the factorization identity, the index-p subgroup
// property of T_a, existence/uniqueness of the kernel multiplier, and the
// identification of {T_a} with the additive-character kernels. Exhaustive.
SuiteReport verify_prop_fq(int p, int f);

// The induction-bijectivity lemma, brute-force certified on three explicit
// instances inside the D4 quotient at q = 2 (one with trivial branching, one
// with the four-way branching, one hypothesis-violating mutant that must be
// detected).
SuiteReport verify_reduction_lemma(const SuiteOptions& opt = {});

SuiteReport suite_d4(int q, const SuiteOptions& opt = {});
SuiteReport suite_e6(int q, const SuiteOptions& opt = {});
SuiteReport suite_e8(int q, const SuiteOptions& opt = {});

// Cross-cutting exactness properties: collection associativity, inverse
// round trips, conjugation-action composition, domain homomorphism
// certification, orbit-stabilizer integrality.
SuiteReport suite_properties(const SuiteOptions& opt = {});

// Designated single-sign table mutations per kind must each trip at least
// one check.
SuiteReport suite_mutation(const SuiteOptions& opt = {});

// Good-prime control runs: the same engine on a kind/characteristic pair
// where the degree drop disappears (E6 or E8 at p = 2). D4 has no control
// run: its relation table is the characteristic-2 one.
SuiteReport suite_good_prime(RootKind kind, int p, int f,
                             const SuiteOptions& opt = {});

// Census data for count_family.
struct CensusRow {
  std::string degree;       // e.g. "q^7" or "q^7/3"
  BigInt degree_value;
  BigInt per_central;       // characters per fixed central character
  BigInt torus_orbit;       // number of central tuples
  BigInt total;             // per_central * torus_orbit
  std::string formula;      // closed form from the statement being checked
  BigInt formula_value;     // its value (negative = not integral)
  bool matches_formula;
  std::string note;
};

struct CensusResult {
  RootKind kind;
  int q;
  std::vector<CensusRow> rows;
  SuiteReport report;
};

CensusResult count_family(RootKind kind, int q, const SuiteOptions& opt = {});

std::string census_to_csv(const CensusResult& c);
std::string census_to_json(const CensusResult& c);

}  // namespace unichar
