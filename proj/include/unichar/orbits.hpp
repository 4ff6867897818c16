#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "unichar/characters.hpp"

namespace unichar {

// Conjugation action of a fixed generator set on the coefficient data of a
// character restriction. The state is the coefficient vector on
// `state_roots`; every strictly higher root of the ambient abelian domain
// carries a frozen coefficient (phi on the center, zero between). The frozen
// part must be preserved by every generator, which is checked once per
// generator, and the commutator elements driving the action are precomputed
// per (generator, root, parameter), so BFS edges reduce to exponent sums.
class LevelAction {
public:
  LevelAction(const GroupContext& ctx, std::vector<int> state_roots,
              std::vector<std::pair<int, FqElem>> frozen,
              std::vector<UniElem> generators);

  const GroupContext& ctx() const { return *ctx_; }
  const std::vector<int>& state_roots() const { return state_roots_; }
  const std::vector<std::pair<int, FqElem>>& frozen() const { return frozen_; }
  int num_generators() const { return static_cast<int>(gens_.size()); }

  using State = std::vector<FqElem>;  // one coefficient per state root

  State apply(int gen, const State& s) const;
  std::uint64_t key(const State& s) const;
  State state_from_key(std::uint64_t k) const;

private:
  const GroupContext* ctx_;
  std::vector<int> state_roots_;
  std::vector<std::pair<int, FqElem>> frozen_;
  std::vector<UniElem> gens_;
  // comm_[g][r][t-index] = [x_r(t), g], letters split into state and frozen
  // exponent contributions
  struct CommData {
    std::vector<std::pair<int, FqElem>> state_letters;  // (state slot, coeff)
    int frozen_exponent;  // contribution from frozen coefficients
  };
  std::vector<std::vector<std::vector<CommData>>> comm_;

  void precompute();
};

struct OrbitResult {
  std::uint64_t orbit_size = 0;
  BigInt stabilizer_order = 0;     // acting_order / orbit_size
  bool product_identity = false;   // acting_order divisible by orbit size
  bool invariant_constant = true;  // optional invariant stayed constant
  std::vector<std::uint64_t> orbit_keys;  // sorted
};

// BFS closure of `start` under the action; `acting_order` is the order of the
// group the generators generate. An optional invariant function is evaluated
// on every state and checked constant across the orbit.
OrbitResult orbit_stabilizer_bfs(
    const LevelAction& action, const LevelAction::State& start,
    const BigInt& acting_order,
    const std::function<FqElem(const LevelAction::State&)>& invariant = nullptr,
    std::uint64_t budget = 1u << 20);

struct StabilizerCheck {
  bool claimed_fixes = true;   // every claimed generator fixes the state
  bool order_matches = false;  // |claimed| equals acting_order / orbit
  std::string witness;
};

// Two-sided stabilizer certification: the claimed subgroup's generators fix
// the restricted character, and the measured orbit size forces equality of
// orders.
StabilizerCheck claimed_stabilizer_check(const LevelAction& action,
                                         const LevelAction::State& state,
                                         const SubgroupDescriptor& claimed,
                                         const OrbitResult& orbit,
                                         const BigInt& acting_order);

// --- scalar locus ---------------------------------------------------------

struct ScalarLocusReport {
  bool pass = true;
  std::uint64_t kernel_size = 0;   // number of scalar points found
  bool curve_contained = false;    // claimed curve lies in the locus
  bool value_matches = false;      // lambda(r(t)) = phi(B t) for all t
  std::string witness;
};

// The scalar locus {x in level-span : |lambda^G(x)| = lambda^G(1)} equals
// {x : lambda([x,y]) = 1 for all y in the transversal}. Exponents are linear
// in x (verified), so the locus is the kernel of an F_p-linear map assembled
// from the sweep elements; the report certifies kernel == the claimed curve
// and the phi_B restriction value.
ScalarLocusReport scalar_locus_check(
    const GroupContext& ctx, const std::vector<int>& level_roots,
    const std::vector<std::pair<int, FqElem>>& coeffs,  // full lambda data
    const OneParamCurve& claimed_curve, const FqElem& claimed_B,
    const std::vector<UniElem>& sweep);

// Size of the scalar locus alone (1 means only the identity is scalar, the
// good-prime situation). Throws if the exponent fails to be additive.
std::uint64_t scalar_locus_size(
    const GroupContext& ctx, const std::vector<int>& level_roots,
    const std::vector<std::pair<int, FqElem>>& coeffs,
    const std::vector<UniElem>& sweep);

// Table-scan helper: every commutator between the two root sets leaves the
// quotient (so the corresponding group parts commute elementwise).
bool roots_commute(const RootSystemTable& table, const std::vector<int>& a,
                   const std::vector<int>& b);

// --- torus ----------------------------------------------------------------

// Action of a torus element with simple-root parameters t on a tuple of
// central-character coefficients: a_i -> a_i * alpha_i(t).
std::vector<FqElem> torus_conjugate_tuple(const RootSystemTable& table,
                                          const FieldSpec& F,
                                          const std::vector<FqElem>& t,
                                          const std::vector<FqElem>& tuple);

// Orbit of the all-ones tuple in (F_q^x)^m under the rank generators
// h_j(g), g a fixed primitive element, acting by a_i -> a_i * g^{m_ij}.
struct TorusOrbitResult {
  std::uint64_t orbit_size = 0;
  std::uint64_t full_size = 0;
  bool transitive = false;
};
TorusOrbitResult torus_orbit_on_central(const RootSystemTable& table,
                                        const FieldSpec& F);

}  // namespace unichar
