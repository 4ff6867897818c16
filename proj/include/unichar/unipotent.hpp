#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "unichar/fq.hpp"
#include "unichar/root_data.hpp"

namespace unichar {

struct Letter {
  int root;
  FqElem t;
};

// Element of the unipotent quotient in normal form: the product
// prod x_i(t_i) over the table's fixed order, stored sparsely (zero
// coordinates omitted). Canonical, so equality is vector equality.
class UniElem {
public:
  UniElem() = default;
  const std::vector<Letter>& letters() const { return w_; }
  bool is_identity() const { return w_.empty(); }
  FqElem coord(int root) const;
  bool operator==(const UniElem& o) const;

private:
  friend class GroupContext;
  std::vector<Letter> w_;
};

// The group engine for one (table, field) pair. Multiplication is collection:
// out-of-order adjacent letters are swapped past each other, inserting the
// commutator letter from the table; letters whose root leaves the quotient
// vanish. Commutators strictly increase height, so this terminates.
class GroupContext {
public:
  GroupContext(const RootSystemTable& table, const FieldSpec& field);

  const RootSystemTable& table() const { return *table_; }
  const FieldSpec& field() const { return *field_; }
  int num_coords() const { return ncoords_; }
  BigInt group_order() const;  // q^{#quotient roots}

  UniElem identity() const { return UniElem(); }
  UniElem generator(int root, const FqElem& t) const;  // x_root(t)
  UniElem from_letters(const std::vector<Letter>& word) const;
  UniElem from_coords(const std::vector<std::pair<int, FqElem>>& coords) const;

  UniElem multiply(const UniElem& a, const UniElem& b) const;
  UniElem inverse(const UniElem& a) const;
  // a^-1 b^-1 a b
  UniElem commutator(const UniElem& a, const UniElem& b) const;
  UniElem conjugate(const UniElem& a, const UniElem& x) const;  // x^-1 a x

  // Word syntax: factors "xI(c)" joined by '*', optional "^-1" per factor;
  // coefficients in the field's short string format.
  UniElem parse_word(const std::string& word) const;
  std::string format(const UniElem& u) const;

  // Report on Z(U): each claimed central root commutes with every generator
  // (table scan), and every non-central root has a witness partner.
  struct CenterReport {
    bool pass;
    std::vector<int> center;
    std::vector<std::string> failures;
  };
  CenterReport center_verify() const;

private:
  const RootSystemTable* table_;
  const FieldSpec* field_;
  int ncoords_;

  void collect(std::vector<Letter>& w) const;
};

// One-parameter curve t -> prod x_root(coeff * t^exp) in the listed order,
// e.g. the s_1/l_k/r_k families. Closure may hold only modulo a tail.
struct CurveTerm {
  int root;
  FqElem coeff;
  int exp;  // 1..4
};

class SubgroupDescriptor;

struct OneParamCurve {
  std::string name;
  std::vector<CurveTerm> terms;

  UniElem eval(const GroupContext& ctx, const FqElem& t) const;
};

struct ClosureReport {
  bool pass = true;
  std::string witness;  // violating pair when failing
};

// eval(t) eval(u) eval(t+u)^-1 must lie in the tail (identity when absent);
// exhaustive when q^2 <= 10^4, else sampled.
ClosureReport curve_closure_check(const GroupContext& ctx,
                                  const OneParamCurve& curve,
                                  const SubgroupDescriptor* tail,
                                  std::uint64_t seed = 0);

// Ordered product of parametrized factors. Each factor carries a designated
// coordinate from which its parameter is read back; factorization peels
// factors left to right, so a factor's designated coordinate must not be
// touched by later factors (validated at construction).
class SubgroupDescriptor {
public:
  struct Factor {
    enum class Kind { Coord, Curve, FiniteCurve } kind;
    std::string name;
    OneParamCurve curve;             // Coord is a one-term curve
    int designated_root = 0;
    FqElem designated_coeff;         // parameter = coord / designated_coeff
    std::vector<FqElem> params;      // FiniteCurve: allowed parameter values
  };

  SubgroupDescriptor() = default;
  explicit SubgroupDescriptor(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  const std::vector<Factor>& factors() const { return factors_; }

  SubgroupDescriptor& add_coord(const GroupContext& ctx, int root);
  SubgroupDescriptor& add_coords(const GroupContext& ctx,
                                 const std::vector<int>& roots);
  // designated_root 0 = the curve's first linear term in normal-form order
  SubgroupDescriptor& add_curve(const GroupContext& ctx, OneParamCurve curve,
                                int designated_root = 0);
  SubgroupDescriptor& add_finite_curve(const GroupContext& ctx,
                                       OneParamCurve curve,
                                       std::vector<FqElem> params,
                                       int designated_root = 0);
  SubgroupDescriptor& append(const GroupContext& ctx,
                             const SubgroupDescriptor& other);

  BigInt size(const GroupContext& ctx) const;

  // Factor parameters of u, or nullopt when u is not in the subgroup.
  std::optional<std::vector<FqElem>> factorize(const GroupContext& ctx,
                                               const UniElem& u) const;
  UniElem assemble(const GroupContext& ctx,
                   const std::vector<FqElem>& params) const;

  // Visit every element exactly once, parameters in index order per factor,
  // factors odometer-style with the last factor fastest. Throws BudgetError
  // when size() exceeds the budget.
  void enumerate(const GroupContext& ctx,
                 const std::function<void(const UniElem&,
                                          const std::vector<FqElem>&)>& visit,
                 std::uint64_t budget = kDefaultEnumBudget) const;

  // One generator set: each factor contributes eval at every F_p-basis
  // element (finite factors contribute their nonzero parameter values).
  std::vector<UniElem> generators(const GroupContext& ctx) const;

  bool contains(const GroupContext& ctx, const UniElem& u) const {
    return factorize(ctx, u).has_value();
  }

  static constexpr std::uint64_t kDefaultEnumBudget = 1ull << 21;

private:
  std::string name_;
  std::vector<Factor> factors_;

  void validate_new_factor(const GroupContext& ctx, const Factor& f);
};

}  // namespace unichar
