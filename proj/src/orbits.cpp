#include "unichar/orbits.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace unichar {

LevelAction::LevelAction(const GroupContext& ctx, std::vector<int> state_roots,
                         std::vector<std::pair<int, FqElem>> frozen,
                         std::vector<UniElem> generators)
    : ctx_(&ctx),
      state_roots_(std::move(state_roots)),
      frozen_(std::move(frozen)),
      gens_(std::move(generators)) {
  precompute();
}

void LevelAction::precompute() {
  const GroupContext& G = *ctx_;
  const FieldSpec& F = G.field();
  std::map<int, int> slot;
  for (size_t i = 0; i < state_roots_.size(); ++i)
    slot[state_roots_[i]] = static_cast<int>(i);
  std::map<int, FqElem> frozen_map(frozen_.begin(), frozen_.end());

  comm_.resize(gens_.size());
  for (size_t g = 0; g < gens_.size(); ++g) {
    comm_[g].resize(state_roots_.size());
    for (size_t r = 0; r < state_roots_.size(); ++r) {
      comm_[g][r].resize(F.q());
      for (long ti = 0; ti < F.q(); ++ti) {
        UniElem x = G.generator(state_roots_[r], F.element(ti));
        UniElem c = G.commutator(x, gens_[g]);
        CommData d;
        d.frozen_exponent = 0;
        for (const Letter& l : c.letters()) {
          auto s = slot.find(l.root);
          if (s != slot.end()) {
            d.state_letters.push_back({s->second, l.t});
            continue;
          }
          auto fz = frozen_map.find(l.root);
          if (fz == frozen_map.end())
            throw MathError(
                "generator does not normalize the restriction domain (letter "
                "on root " +
                std::to_string(l.root) + ")");
          d.frozen_exponent =
              (d.frozen_exponent + F.phi_exponent(fz->second, l.t)) % F.p();
        }
        comm_[g][r][ti] = std::move(d);
      }
    }
    // frozen coefficients must be preserved by this generator
    for (const auto& [root, coeff] : frozen_) {
      for (long ti = 0; ti < F.q(); ++ti) {
        UniElem x = G.generator(root, F.element(ti));
        UniElem c = G.commutator(x, gens_[g]);
        int e = 0;
        for (const Letter& l : c.letters()) {
          auto fz = frozen_map.find(l.root);
          if (fz == frozen_map.end())
            throw MathError("frozen part is not preserved (letter on root " +
                            std::to_string(l.root) + ")");
          e = (e + F.phi_exponent(fz->second, l.t)) % F.p();
        }
        if (e != 0)
          throw MathError("generator moves the frozen coefficients at root " +
                          std::to_string(root));
      }
    }
  }
}

LevelAction::State LevelAction::apply(int gen, const State& s) const {
  const FieldSpec& F = ctx_->field();
  State out(s.size());
  for (size_t r = 0; r < state_roots_.size(); ++r) {
    // observed exponents of ^g(lambda) on x_r(t): phi(b_r t) + lambda([x_r(t),g])
    std::vector<int> traces(F.f());
    for (int j = 0; j < F.f(); ++j) {
      FqElem basis;
      basis.c[j] = 1;
      const CommData& d = comm_[gen][r][F.index(basis)];
      int e = F.phi_exponent(s[r], basis) + d.frozen_exponent;
      for (const auto& [sl, coeff] : d.state_letters)
        e += F.phi_exponent(s[sl], coeff);
      traces[j] = ((e % F.p()) + F.p()) % F.p();
    }
    FqElem b = F.from_trace_values(traces);
    // verify linearity on every parameter value
    for (long ti = 0; ti < F.q(); ++ti) {
      const CommData& d = comm_[gen][r][ti];
      int e = F.phi_exponent(s[r], F.element(ti)) + d.frozen_exponent;
      for (const auto& [sl, coeff] : d.state_letters)
        e += F.phi_exponent(s[sl], coeff);
      e = ((e % F.p()) + F.p()) % F.p();
      if (e != F.phi_exponent(b, F.element(ti)))
        throw MathError("conjugated restriction is not linear (root " +
                        std::to_string(state_roots_[r]) + ")");
    }
    out[r] = b;
  }
  return out;
}

std::uint64_t LevelAction::key(const State& s) const {
  const FieldSpec& F = ctx_->field();
  std::uint64_t k = 0;
  for (const FqElem& e : s)
    k = k * static_cast<std::uint64_t>(F.q()) +
        static_cast<std::uint64_t>(F.index(e));
  return k;
}

LevelAction::State LevelAction::state_from_key(std::uint64_t k) const {
  const FieldSpec& F = ctx_->field();
  State s(state_roots_.size());
  for (size_t i = state_roots_.size(); i-- > 0;) {
    s[i] = F.element(static_cast<long>(k % F.q()));
    k /= F.q();
  }
  return s;
}

OrbitResult orbit_stabilizer_bfs(
    const LevelAction& action, const LevelAction::State& start,
    const BigInt& acting_order,
    const std::function<FqElem(const LevelAction::State&)>& invariant,
    std::uint64_t budget) {
  OrbitResult res;
  FqElem inv0;
  if (invariant) inv0 = invariant(start);

  std::unordered_set<std::uint64_t> seen;
  std::deque<LevelAction::State> queue;
  seen.insert(action.key(start));
  queue.push_back(start);
  while (!queue.empty()) {
    LevelAction::State s = std::move(queue.front());
    queue.pop_front();
    for (int g = 0; g < action.num_generators(); ++g) {
      LevelAction::State t = action.apply(g, s);
      if (invariant && !(invariant(t) == inv0)) res.invariant_constant = false;
      std::uint64_t k = action.key(t);
      if (seen.insert(k).second) {
        if (seen.size() > budget)
          throw BudgetError("orbit exceeds budget", seen.size());
        queue.push_back(std::move(t));
      }
    }
  }
  res.orbit_size = seen.size();
  res.orbit_keys.assign(seen.begin(), seen.end());
  std::sort(res.orbit_keys.begin(), res.orbit_keys.end());
  res.product_identity = (acting_order % res.orbit_size == 0);
  res.stabilizer_order =
      res.product_identity ? acting_order / res.orbit_size : BigInt(0);
  return res;
}

StabilizerCheck claimed_stabilizer_check(const LevelAction& action,
                                         const LevelAction::State& state,
                                         const SubgroupDescriptor& claimed,
                                         const OrbitResult& orbit,
                                         const BigInt& acting_order) {
  StabilizerCheck chk;
  // membership direction: every claimed generator fixes the state; fixing is
  // a subgroup property, so generators suffice
  LevelAction ca(action.ctx(), action.state_roots(), action.frozen(),
                 claimed.generators(action.ctx()));
  for (int g = 0; g < ca.num_generators(); ++g) {
    if (!(ca.apply(g, state) == state)) {
      chk.claimed_fixes = false;
      chk.witness = "claimed generator #" + std::to_string(g) +
                    " moves the restricted character";
      break;
    }
  }
  // order direction: orbit counting pins the stabilizer order exactly
  chk.order_matches = orbit.product_identity &&
                      claimed.size(action.ctx()) == orbit.stabilizer_order;
  if (!chk.order_matches && chk.witness.empty())
    chk.witness = "claimed order != measured stabilizer order";
  (void)acting_order;
  return chk;
}

bool roots_commute(const RootSystemTable& table, const std::vector<int>& a,
                   const std::vector<int>& b) {
  for (int i : a)
    for (int j : b)
      if (i != j && table.commutator(i, j)) return false;
  return true;
}

std::uint64_t scalar_locus_size(
    const GroupContext& ctx, const std::vector<int>& level_roots,
    const std::vector<std::pair<int, FqElem>>& coeffs,
    const std::vector<UniElem>& sweep) {
  const FieldSpec& F = ctx.field();
  std::map<int, FqElem> cmap(coeffs.begin(), coeffs.end());
  auto exponent_of = [&](const UniElem& u) {
    int e = 0;
    for (const Letter& l : u.letters()) {
      auto it = cmap.find(l.root);
      if (it == cmap.end())
        throw MathError("commutator letter outside the character data (root " +
                        std::to_string(l.root) + ")");
      e = (e + F.phi_exponent(it->second, l.t)) % F.p();
    }
    return e;
  };

  // Exponent rows: for y in the sweep, the map x -> lambda([x, y]) on the
  // level span. Additivity in x holds because the ambient subgroup is
  // abelian; additivity in the root parameter is verified here.
  int d = static_cast<int>(level_roots.size());
  int f = F.f();
  int dim = d * f;
  std::vector<std::vector<int>> rows;
  for (const UniElem& y : sweep) {
    std::vector<int> row(dim);
    bool nonzero = false;
    for (int r = 0; r < d; ++r) {
      std::vector<int> by_param(F.q());
      for (long ti = 0; ti < F.q(); ++ti) {
        UniElem c = ctx.commutator(ctx.generator(level_roots[r], F.element(ti)), y);
        by_param[ti] = exponent_of(c);
      }
      for (long t1 = 0; t1 < F.q(); ++t1)
        for (long t2 = 0; t2 < F.q(); ++t2) {
          long t3 = F.index(F.add(F.element(t1), F.element(t2)));
          if ((by_param[t1] + by_param[t2]) % F.p() != by_param[t3])
            throw MathError("exponent not additive in the parameter at root " +
                            std::to_string(level_roots[r]));
        }
      for (int j = 0; j < f; ++j) {
        FqElem basis;
        basis.c[j] = 1;
        row[r * f + j] = by_param[F.index(basis)];
        nonzero |= (row[r * f + j] != 0);
      }
    }
    if (nonzero) rows.push_back(std::move(row));
  }

  // kernel of the row space over F_p
  std::vector<std::vector<int>> basis;
  std::vector<int> pivot;
  for (auto row : rows) {
    for (size_t b = 0; b < basis.size(); ++b) {
      int c = row[pivot[b]];
      if (c == 0) continue;
      for (int i = 0; i < dim; ++i)
        row[i] = ((row[i] - c * basis[b][i]) % F.p() + F.p()) % F.p();
    }
    int pv = -1;
    for (int i = 0; i < dim; ++i)
      if (row[i] != 0) {
        pv = i;
        break;
      }
    if (pv < 0) continue;
    int inv = 1;
    while ((inv * row[pv]) % F.p() != 1) ++inv;
    for (int i = 0; i < dim; ++i) row[i] = (row[i] * inv) % F.p();
    basis.push_back(row);
    pivot.push_back(pv);
  }
  int rank = static_cast<int>(basis.size());
  std::uint64_t kernel = 1;
  for (int i = 0; i < dim - rank; ++i) kernel *= F.p();
  return kernel;
}

ScalarLocusReport scalar_locus_check(
    const GroupContext& ctx, const std::vector<int>& level_roots,
    const std::vector<std::pair<int, FqElem>>& coeffs,
    const OneParamCurve& claimed_curve, const FqElem& claimed_B,
    const std::vector<UniElem>& sweep) {
  const FieldSpec& F = ctx.field();
  ScalarLocusReport rep;
  std::map<int, FqElem> cmap(coeffs.begin(), coeffs.end());

  auto exponent_of = [&](const UniElem& u) {
    int e = 0;
    for (const Letter& l : u.letters()) {
      auto it = cmap.find(l.root);
      if (it == cmap.end())
        throw MathError("commutator letter outside the character data (root " +
                        std::to_string(l.root) + ")");
      e = (e + F.phi_exponent(it->second, l.t)) % F.p();
    }
    return e;
  };

  try {
    rep.kernel_size = scalar_locus_size(ctx, level_roots, coeffs, sweep);
  } catch (const MathError& e) {
    rep.pass = false;
    rep.witness = e.what();
    return rep;
  }

  // the claimed curve lies in the kernel
  rep.curve_contained = true;
  for (long ti = 0; ti < F.q() && rep.curve_contained; ++ti) {
    UniElem x = claimed_curve.eval(ctx, F.element(ti));
    for (const UniElem& y : sweep) {
      if (exponent_of(ctx.commutator(x, y)) != 0) {
        rep.curve_contained = false;
        rep.witness = "claimed curve point t=" + F.to_string(F.element(ti)) +
                      " is moved by y=" + ctx.format(y);
        break;
      }
    }
  }

  // restriction value: lambda(curve(t)) = phi(B t)
  rep.value_matches = true;
  for (long ti = 0; ti < F.q(); ++ti) {
    FqElem t = F.element(ti);
    UniElem x = claimed_curve.eval(ctx, t);
    int e = exponent_of(x);
    if (e != F.phi_exponent(claimed_B, t)) {
      rep.value_matches = false;
      rep.witness = "curve value differs from phi_B at t=" + F.to_string(t);
      break;
    }
  }

  rep.pass = rep.curve_contained && rep.value_matches &&
             (rep.kernel_size == static_cast<std::uint64_t>(F.q()));
  if (rep.pass == false && rep.witness.empty())
    rep.witness = "scalar locus has size " + std::to_string(rep.kernel_size) +
                  ", expected " + std::to_string(F.q());
  return rep;
}

std::vector<FqElem> torus_conjugate_tuple(const RootSystemTable& table,
                                          const FieldSpec& F,
                                          const std::vector<FqElem>& t,
                                          const std::vector<FqElem>& tuple) {
  std::vector<int> central = table.central_roots();
  if (tuple.size() != central.size())
    throw MathError("tuple needs one value per central root");
  std::vector<FqElem> next(tuple.size());
  for (size_t i = 0; i < tuple.size(); ++i)
    next[i] = F.mul(tuple[i], torus_weight(table, F, central[i], t));
  return next;
}

TorusOrbitResult torus_orbit_on_central(const RootSystemTable& table,
                                        const FieldSpec& F) {
  TorusOrbitResult res;
  std::vector<int> central = table.central_roots();
  int m = static_cast<int>(central.size());
  long qm1 = F.q() - 1;
  res.full_size = 1;
  for (int i = 0; i < m; ++i) res.full_size *= qm1;

  FqElem g = F.primitive_element();
  // tuple key in base (q-1) over multiplicative indices
  std::vector<FqElem> units = F.nonzero_elements();
  std::map<long, int> unit_rank;
  for (size_t i = 0; i < units.size(); ++i)
    unit_rank[F.index(units[i])] = static_cast<int>(i);
  auto key_of = [&](const std::vector<FqElem>& tuple) {
    std::uint64_t k = 0;
    for (const FqElem& a : tuple)
      k = k * static_cast<std::uint64_t>(qm1) + unit_rank.at(F.index(a));
    return k;
  };

  std::vector<FqElem> start(m, F.one());
  std::unordered_set<std::uint64_t> seen{key_of(start)};
  std::deque<std::vector<FqElem>> queue{start};
  while (!queue.empty()) {
    auto tuple = std::move(queue.front());
    queue.pop_front();
    for (int j = 0; j < table.rank(); ++j) {
      std::vector<FqElem> t(table.rank(), F.one());
      t[j] = g;
      std::vector<FqElem> next = torus_conjugate_tuple(table, F, t, tuple);
      std::uint64_t k = key_of(next);
      if (seen.insert(k).second) queue.push_back(std::move(next));
    }
  }
  res.orbit_size = seen.size();
  res.transitive = (res.orbit_size == res.full_size);
  return res;
}

}  // namespace unichar
