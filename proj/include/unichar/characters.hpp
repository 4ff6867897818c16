#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unichar/cyclotomic.hpp"
#include "unichar/unipotent.hpp"

namespace unichar {

// Degree-1 character on a subgroup descriptor: the value on the element with
// factor parameters (t_1, ..., t_k) is phi(sum b_i t_i) = zeta_p^{Tr(sum)}.
// Well-definedness (that this is a homomorphism on the descriptor's set) is
// certified separately, not assumed.
class LinearCharacter {
public:
  LinearCharacter(std::shared_ptr<const SubgroupDescriptor> domain,
                  std::vector<FqElem> coeffs);

  const SubgroupDescriptor& domain() const { return *domain_; }
  std::shared_ptr<const SubgroupDescriptor> domain_ptr() const { return domain_; }
  const std::vector<FqElem>& coeffs() const { return coeffs_; }
  FqElem coeff_of(const std::string& factor_name) const;

  int exponent(const GroupContext& ctx, const UniElem& u) const;  // throws
  std::optional<int> try_exponent(const GroupContext& ctx,
                                  const UniElem& u) const;
  CycInt eval(const GroupContext& ctx, const UniElem& u) const;
  // lambda-dot: value with zero extension outside the domain
  CycInt eval_zero_extended(const GroupContext& ctx, const UniElem& u) const;

  // Values on each factor's parameter set, a canonical label: two characters
  // agree on the domain iff their keys agree.
  std::vector<int> canonical_key(const GroupContext& ctx) const;

  bool equal_values(const GroupContext& ctx, const LinearCharacter& o) const;

private:
  std::shared_ptr<const SubgroupDescriptor> domain_;
  std::vector<FqElem> coeffs_;  // one per factor
};

struct HomomorphismReport {
  bool pass = true;
  bool exhaustive = false;
  std::string witness;
};

// lambda(uv) = lambda(u) lambda(v), exhaustively when |domain|^2 <= pair
// budget, else on seeded random pairs. This simultaneously certifies the
// domain is abelian enough for the coefficient data to define a character.
HomomorphismReport certify_homomorphism(const GroupContext& ctx,
                                        const LinearCharacter& lambda,
                                        std::uint64_t seed,
                                        int samples = 400);

// ^x lambda : h -> lambda(x^-1 h x), same domain. Coefficients are recovered
// per factor by solving the trace system on the parameter values (dual
// basis), then checked against every parameter value, so linearity of the
// conjugated character is verified, not assumed. Throws when x fails to
// normalize the domain.
LinearCharacter conjugate_character(const GroupContext& ctx,
                                    const LinearCharacter& lambda,
                                    const UniElem& x);

// --- extensions ---------------------------------------------------------

struct ExtensionResult {
  bool obstructed = false;
  std::string witness;  // generator pair violating [T,T] <= ker(lambda)
  std::vector<LinearCharacter> extensions;
};

// Extends `base` to `target`, whose factor list must begin or end with the
// base factors; `new_factor_coeffs[i]` lists the allowed coefficient values
// on the i-th new factor. Checks the commutator obstruction
// [target,target] <= ker(base) on factor pairs over all parameter values
// before building extensions; each produced extension is
// homomorphism-certified.
ExtensionResult extension_set(
    const GroupContext& ctx, const LinearCharacter& base,
    std::shared_ptr<const SubgroupDescriptor> target,
    const std::vector<std::vector<FqElem>>& new_factor_coeffs,
    std::uint64_t seed);

// --- induction ----------------------------------------------------------

// chi(u) = sum over the transversal x of lambda-dot(x u x^-1), exact.
CycInt induce_value(const GroupContext& ctx, const LinearCharacter& lambda,
                    const std::vector<UniElem>& transversal, const UniElem& u);

// Left transversal of `subgroup` inside `group` (both descriptors),
// deterministic order. Requires |group| / |subgroup| * |subgroup| == |group|
// and that enumeration fits the budget.
std::vector<UniElem> make_transversal(const GroupContext& ctx,
                                      const SubgroupDescriptor& group,
                                      const SubgroupDescriptor& subgroup);

// Dense value table indexed by the element key (mixed-radix coordinates).
struct ValueTable {
  std::vector<CycInt> values;
  BigInt degree() const;  // value at the identity
};

std::uint64_t element_key(const GroupContext& ctx, const UniElem& u);
UniElem element_from_key(const GroupContext& ctx, std::uint64_t key);

ValueTable induced_table(const GroupContext& ctx, const LinearCharacter& lambda,
                         const std::vector<UniElem>& transversal,
                         int threads = 1);

// <f1, f2> * |G|: the raw inner-product sum over the whole group. The caller
// divides via CycInt::as_integer_multiple; a non-integral quotient for two
// characters signals an engine bug and is treated as a hard error by the
// suites.
CycInt inner_product_sum(const GroupContext& ctx, const ValueTable& f1,
                         const ValueTable& f2, int threads = 1);
BigInt inner_product(const GroupContext& ctx, const ValueTable& f1,
                     const ValueTable& f2, int threads = 1);

// --- b-invariants and closed forms ---------------------------------------

struct D4Invariants {
  FqElem A;
  FqElem t0;
};
D4Invariants d4_invariants(const FieldSpec& F, const FqElem& a8,
                           const FqElem& a9, const FqElem& a10,
                           const FqElem& b5, const FqElem& b6,
                           const FqElem& b7);

FqElem e6_B3(const FieldSpec& F, const std::vector<FqElem>& b12_to_b16);
FqElem e6_B2(const FieldSpec& F, const FqElem& b8, const FqElem& b9,
             const FqElem& b10);
FqElem e8_B5(const FieldSpec& F, const std::vector<FqElem>& b30_to_b36);
FqElem e8_B4(const FieldSpec& F, const std::vector<FqElem>& b24_to_b29);
FqElem e8_B3(const FieldSpec& F, const std::vector<FqElem>& b18_to_b21);
FqElem e8_B2(const FieldSpec& F, const FqElem& b12, const FqElem& b13);

// Closed-form generic values of the two character shapes over D4 with
// central character (a8, a9, a10); characteristic 2 only.
struct D4TheoremParams {
  FqElem a8, a9, a10;
  FqElem t0;       // zero selects the full-degree shape
  FqElem b124;     // coefficient on the x124 direction, in {0, a_124}
  FqElem b3;       // coefficient on the x3 direction, in {0, a_3}
};
CycInt theorem_d4_value(const GroupContext& ctx, const D4TheoremParams& P,
                        const UniElem& u);

}  // namespace unichar
