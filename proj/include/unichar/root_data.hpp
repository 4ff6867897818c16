#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "unichar/common.hpp"
#include "unichar/fq.hpp"

namespace unichar {

enum class RootKind { D4, E6, E8 };

std::string kind_name(RootKind k);
RootKind kind_from_name(const std::string& s);

struct RootEntry {
  int height = 0;
  std::array<std::int8_t, 8> coeffs{};  // over the simple roots, rank entries
};

// One commutator relation as printed: [x_i(t), x_j(u)] = x_k(c * t * u).
struct CommEntry {
  int i, j, k, c;
};

struct ValidationReport {
  bool pass = true;
  std::vector<std::string> failures;
  int entry_count = 0;

  void fail(const std::string& msg) {
    pass = false;
    failures.push_back(msg);
  }
};

// Positive roots of height <= hmax plus (for D4) the two truncated roots, the
// commutator relations, the fixed normal-form order and the highest root of
// the untruncated system. The tables are embedded verbatim; validate()
// re-derives every structural invariant from scratch.
class RootSystemTable {
public:
  static const RootSystemTable& get(RootKind kind);  // validated, cached
  static RootSystemTable load(RootKind kind);        // fresh embedded copy
  // Copy with the sign of relation entries()[entry_index] flipped.
  RootSystemTable mutated(int entry_index) const;

  RootKind kind() const { return kind_; }
  int rank() const { return rank_; }
  int hmax() const { return hmax_; }
  int root_count() const { return static_cast<int>(roots_.size()); }

  const RootEntry& root(int i) const { return roots_.at(i - 1); }  // 1-based
  int height(int i) const { return root(i).height; }

  // Quotient = roots of height <= hmax, in the fixed normal-form order.
  const std::vector<int>& normal_order() const { return order_; }
  int position(int root_index) const { return pos_.at(root_index); }  // -1 if truncated
  std::vector<int> quotient_roots() const;  // ascending index
  std::vector<int> central_roots() const;   // height == hmax
  std::vector<int> roots_of_height(int h) const;

  // Table value for the ordered pair, with antisymmetric closure
  // (j,i) -> (k,-c). With truncate, pairs whose sum leaves the quotient
  // report nullopt (the commutator is the identity there).
  std::optional<std::pair<int, int>> commutator(int i, int j,
                                                bool truncate = true) const;

  const std::vector<CommEntry>& entries() const { return entries_; }
  const std::array<std::int8_t, 8>& highest_root() const { return highest_; }
  std::set<int> bad_primes() const;

  ValidationReport validate() const;
  std::string to_json() const;
  static RootSystemTable from_json(const std::string& text);

private:
  RootKind kind_;
  int rank_ = 0;
  int hmax_ = 0;
  std::vector<RootEntry> roots_;
  std::vector<CommEntry> entries_;
  std::vector<int> order_;
  std::vector<int> pos_;
  std::array<std::int8_t, 8> highest_{};

  void index_positions();
  int root_of_coeffs(const std::array<std::int8_t, 8>& c) const;  // 0 if none
};

// h x_alpha(u) h^-1 = x_alpha(alpha(h) u) for the torus element with simple
// root parameters t: the weight is prod t_j^{m_j} over root i's coefficients.
FqElem torus_weight(const RootSystemTable& table, const FieldSpec& field,
                    int root_index, const std::vector<FqElem>& t);

}  // namespace unichar
