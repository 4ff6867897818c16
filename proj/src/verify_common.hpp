#pragma once

#include <chrono>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "unichar/verify.hpp"

namespace unichar {
namespace detail {

class Timer {
public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

private:
  std::chrono::steady_clock::time_point start_;
};

inline std::string bstr(const BigInt& n) { return n.str(); }

inline std::set<std::uint64_t> element_set(const GroupContext& ctx,
                                           const SubgroupDescriptor& d) {
  std::set<std::uint64_t> keys;
  d.enumerate(ctx, [&](const UniElem& u, const std::vector<FqElem>&) {
    keys.insert(element_key(ctx, u));
  });
  return keys;
}

// N normalized by every generator of G (membership via factorization)
inline bool normalized_by(const GroupContext& ctx, const SubgroupDescriptor& N,
                          const std::vector<UniElem>& g_gens) {
  for (const UniElem& g : g_gens)
    for (const UniElem& n : N.generators(ctx))
      if (!N.contains(ctx, ctx.conjugate(n, g))) return false;
  return true;
}

// all commutators between the two generator sets are trivial
inline bool centralizes(const GroupContext& ctx,
                        const std::vector<UniElem>& a,
                        const std::vector<UniElem>& b) {
  for (const UniElem& x : a)
    for (const UniElem& y : b)
      if (!ctx.commutator(x, y).is_identity()) return false;
  return true;
}

// X is a transversal of N in G: |X| |N| = |G| and distinct cosets
inline bool is_transversal(const GroupContext& ctx,
                           const std::vector<UniElem>& X,
                           const SubgroupDescriptor& N, const BigInt& g_order) {
  if (BigInt(X.size()) * N.size(ctx) != g_order) return false;
  for (size_t i = 0; i < X.size(); ++i)
    for (size_t j = i + 1; j < X.size(); ++j)
      if (N.contains(ctx, ctx.multiply(ctx.inverse(X[i]), X[j]))) return false;
  return true;
}

// <f1, f2> over an enumerated subgroup, exact; throws on non-integral result
inline BigInt inner_product_over(
    const GroupContext& ctx, const SubgroupDescriptor& G,
    const std::function<CycInt(const UniElem&)>& f1,
    const std::function<CycInt(const UniElem&)>& f2) {
  CycInt sum(ctx.field().p());
  G.enumerate(ctx, [&](const UniElem& u, const std::vector<FqElem>&) {
    sum = sum.add(f1(u).mul(f2(u).conj()));
  });
  auto r = CycInt::as_integer_multiple(sum, G.size(ctx));
  if (!r)
    throw MathError("inner product over " + G.name() +
                    " is not an integer: engine bug");
  return *r;
}

// Orbit of a character under conjugation by the group generated by `gens`,
// keyed by the value data on the domain.
struct CharOrbit {
  std::uint64_t size = 0;
  std::set<std::vector<int>> keys;
};

inline CharOrbit char_orbit(const GroupContext& ctx, const LinearCharacter& lam,
                            const std::vector<UniElem>& gens,
                            std::uint64_t budget = 1 << 16) {
  CharOrbit orb;
  std::deque<LinearCharacter> queue{lam};
  orb.keys.insert(lam.canonical_key(ctx));
  while (!queue.empty()) {
    LinearCharacter cur = std::move(queue.front());
    queue.pop_front();
    for (const UniElem& g : gens) {
      LinearCharacter nxt = conjugate_character(ctx, cur, g);
      if (orb.keys.insert(nxt.canonical_key(ctx)).second) {
        if (orb.keys.size() > budget)
          throw BudgetError("character orbit exceeds budget", orb.keys.size());
        queue.push_back(std::move(nxt));
      }
    }
  }
  orb.size = orb.keys.size();
  return orb;
}

// Generator-only sweeps are sound for the scalar locus when every commutator
// letter spawned above the level commutes with the sweep inside the quotient:
// then y -> lambda([x,y]) is multiplicative on products of sweep generators.
inline bool generator_sweep_sufficient(const RootSystemTable& t,
                                       const std::vector<int>& level_roots,
                                       const std::vector<int>& sweep_roots) {
  int min_h = t.hmax();
  for (int l : level_roots) min_h = std::min(min_h, t.height(l));
  for (int k : t.quotient_roots()) {
    if (t.height(k) <= min_h) continue;
    for (int s2 : sweep_roots)
      if (t.commutator(k, s2))  // truncated lookup: height <= hmax
        return false;
  }
  return true;
}

}  // namespace detail
}  // namespace unichar
