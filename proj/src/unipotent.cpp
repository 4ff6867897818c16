#include "unichar/unipotent.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace unichar {

FqElem UniElem::coord(int root) const {
  for (const Letter& l : w_)
    if (l.root == root) return l.t;
  return FqElem{};
}

bool UniElem::operator==(const UniElem& o) const {
  if (w_.size() != o.w_.size()) return false;
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i].root != o.w_[i].root || !(w_[i].t == o.w_[i].t)) return false;
  return true;
}

GroupContext::GroupContext(const RootSystemTable& table, const FieldSpec& field)
    : table_(&table), field_(&field) {
  ncoords_ = 0;
  for (int r = 1; r <= table.root_count(); ++r)
    if (table.height(r) <= table.hmax()) ++ncoords_;
}

BigInt GroupContext::group_order() const {
  BigInt n = 1;
  for (int i = 0; i < ncoords_; ++i) n *= field_->q();
  return n;
}

UniElem GroupContext::generator(int root, const FqElem& t) const {
  if (table_->position(root) < 0)
    throw MathError("root " + std::to_string(root) + " is outside the quotient");
  UniElem u;
  if (!t.is_zero()) u.w_.push_back({root, t});
  return u;
}

void GroupContext::collect(std::vector<Letter>& w) const {
  const FieldSpec& F = *field_;
  // drop zero letters and letters truncated away up front
  w.erase(std::remove_if(w.begin(), w.end(),
                         [&](const Letter& l) {
                           return l.t.is_zero() || table_->position(l.root) < 0;
                         }),
          w.end());
  size_t i = 0;
  while (i + 1 < w.size()) {
    int pa = table_->position(w[i].root);
    int pb = table_->position(w[i + 1].root);
    if (pa < pb) {
      ++i;
      continue;
    }
    if (pa == pb) {  // same root: merge
      FqElem s = F.add(w[i].t, w[i + 1].t);
      w.erase(w.begin() + i + 1);
      if (s.is_zero())
        w.erase(w.begin() + i);
      else
        w[i].t = s;
      if (i > 0) --i;
      continue;
    }
    // out of order: x_a(t) x_b(u) = x_b(u) x_a(t) x_k(c t u)
    Letter a = w[i], b = w[i + 1];
    w[i] = b;
    w[i + 1] = a;
    auto rel = table_->commutator(a.root, b.root);
    if (rel) {
      FqElem coef = F.mul_int(rel->second, F.mul(a.t, b.t));
      if (!coef.is_zero())
        w.insert(w.begin() + i + 2, Letter{rel->first, coef});
    }
    if (i > 0) --i;
  }
}

UniElem GroupContext::from_letters(const std::vector<Letter>& word) const {
  std::vector<Letter> w = word;
  collect(w);
  UniElem u;
  u.w_ = std::move(w);
  return u;
}

UniElem GroupContext::from_coords(
    const std::vector<std::pair<int, FqElem>>& coords) const {
  std::vector<Letter> w;
  for (const auto& [r, t] : coords)
    if (!t.is_zero()) w.push_back({r, t});
  std::sort(w.begin(), w.end(), [&](const Letter& a, const Letter& b) {
    return table_->position(a.root) < table_->position(b.root);
  });
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i].root == w[i + 1].root) throw MathError("duplicate coordinate");
  UniElem u;
  u.w_ = std::move(w);
  return u;
}

UniElem GroupContext::multiply(const UniElem& a, const UniElem& b) const {
  std::vector<Letter> w;
  w.reserve(a.w_.size() + b.w_.size());
  w.insert(w.end(), a.w_.begin(), a.w_.end());
  w.insert(w.end(), b.w_.begin(), b.w_.end());
  collect(w);
  UniElem u;
  u.w_ = std::move(w);
  return u;
}

UniElem GroupContext::inverse(const UniElem& a) const {
  std::vector<Letter> w;
  w.reserve(a.w_.size());
  for (auto it = a.w_.rbegin(); it != a.w_.rend(); ++it)
    w.push_back({it->root, field_->neg(it->t)});
  collect(w);
  UniElem u;
  u.w_ = std::move(w);
  return u;
}

UniElem GroupContext::commutator(const UniElem& a, const UniElem& b) const {
  return multiply(multiply(inverse(a), inverse(b)), multiply(a, b));
}

UniElem GroupContext::conjugate(const UniElem& a, const UniElem& x) const {
  return multiply(multiply(inverse(x), a), x);
}

UniElem GroupContext::parse_word(const std::string& word) const {
  std::vector<Letter> w;
  size_t pos = 0;
  while (pos < word.size()) {
    if (word[pos] == '*') {
      ++pos;
      continue;
    }
    if (word[pos] != 'x')
      throw MathError("malformed word near '" + word.substr(pos) + "'");
    ++pos;
    size_t d0 = pos;
    while (pos < word.size() && isdigit(word[pos])) ++pos;
    if (d0 == pos) throw MathError("missing root index in word");
    int root = std::stoi(word.substr(d0, pos - d0));
    if (pos >= word.size() || word[pos] != '(')
      throw MathError("expected '(' in word");
    size_t close = word.find(')', pos);
    if (close == std::string::npos) throw MathError("unbalanced '(' in word");
    FqElem t = field_->parse(word.substr(pos + 1, close - pos - 1));
    pos = close + 1;
    bool inv = false;
    if (pos + 2 < word.size() + 1 && word.compare(pos, 3, "^-1") == 0) {
      inv = true;
      pos += 3;
    }
    if (root < 1 || root > table_->root_count())
      throw MathError("root index out of range in word");
    w.push_back({root, inv ? field_->neg(t) : t});
  }
  return from_letters(w);
}

std::string GroupContext::format(const UniElem& u) const {
  if (u.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : u.letters()) {
    if (!first) os << "*";
    first = false;
    os << "x" << l.root << "(" << field_->to_short_string(l.t) << ")";
  }
  return os.str();
}

GroupContext::CenterReport GroupContext::center_verify() const {
  CenterReport rep;
  rep.pass = true;
  rep.center = table_->central_roots();
  std::set<int> central(rep.center.begin(), rep.center.end());
  for (int i : table_->quotient_roots()) {
    bool claimed_central = central.count(i) > 0;
    bool has_partner = false;
    for (int j : table_->quotient_roots()) {
      if (j == i) continue;
      if (table_->commutator(i, j)) has_partner = true;
    }
    if (claimed_central && has_partner) {
      rep.pass = false;
      rep.failures.push_back("central root " + std::to_string(i) +
                             " has a nontrivial relation inside the quotient");
    }
    if (!claimed_central && !has_partner) {
      rep.pass = false;
      rep.failures.push_back("root " + std::to_string(i) +
                             " commutes with every generator but is not central");
    }
  }
  return rep;
}

UniElem OneParamCurve::eval(const GroupContext& ctx, const FqElem& t) const {
  const FieldSpec& F = ctx.field();
  std::vector<Letter> w;
  for (const CurveTerm& term : terms) {
    FqElem v = F.mul(term.coeff, F.pow(t, term.exp));
    if (!v.is_zero()) w.push_back({term.root, v});
  }
  return ctx.from_letters(w);
}

ClosureReport curve_closure_check(const GroupContext& ctx,
                                  const OneParamCurve& curve,
                                  const SubgroupDescriptor* tail,
                                  std::uint64_t seed) {
  ClosureReport rep;
  const FieldSpec& F = ctx.field();
  long q = F.q();
  auto check_pair = [&](const FqElem& t, const FqElem& u) {
    UniElem lhs = ctx.multiply(curve.eval(ctx, t), curve.eval(ctx, u));
    UniElem defect =
        ctx.multiply(lhs, ctx.inverse(curve.eval(ctx, F.add(t, u))));
    bool ok = tail ? tail->contains(ctx, defect) : defect.is_identity();
    if (!ok && rep.pass) {
      rep.pass = false;
      rep.witness = curve.name + ": t=" + F.to_string(t) +
                    ", u=" + F.to_string(u) + ", defect=" + ctx.format(defect);
    }
  };
  if (q * q <= 10000) {
    for (long i = 0; i < q; ++i)
      for (long j = 0; j < q; ++j) check_pair(F.element(i), F.element(j));
  } else {
    std::mt19937_64 rng(derive_seed(seed, "closure:" + curve.name));
    for (int n = 0; n < 1000; ++n) {
      FqElem t = F.element(static_cast<long>(rng() % q));
      FqElem u = F.element(static_cast<long>(rng() % q));
      check_pair(t, u);
    }
  }
  return rep;
}

SubgroupDescriptor& SubgroupDescriptor::add_coord(const GroupContext& ctx,
                                                  int root) {
  Factor f;
  f.kind = Factor::Kind::Coord;
  f.name = "x" + std::to_string(root);
  f.curve.name = f.name;
  f.curve.terms = {{root, ctx.field().one(), 1}};
  f.designated_root = root;
  f.designated_coeff = ctx.field().one();
  validate_new_factor(ctx, f);
  factors_.push_back(std::move(f));
  return *this;
}

SubgroupDescriptor& SubgroupDescriptor::add_coords(const GroupContext& ctx,
                                                   const std::vector<int>& roots) {
  std::vector<int> sorted = roots;
  std::sort(sorted.begin(), sorted.end(), [&](int a, int b) {
    return ctx.table().position(a) < ctx.table().position(b);
  });
  for (int r : sorted) add_coord(ctx, r);
  return *this;
}

SubgroupDescriptor& SubgroupDescriptor::add_curve(const GroupContext& ctx,
                                                  OneParamCurve curve,
                                                  int designated_root) {
  Factor f;
  f.kind = Factor::Kind::Curve;
  f.name = curve.name;
  f.curve = std::move(curve);
  int best = -1;
  for (size_t n = 0; n < f.curve.terms.size(); ++n) {
    const CurveTerm& t = f.curve.terms[n];
    if (t.exp != 1 || t.coeff.is_zero()) continue;
    if (designated_root != 0) {
      if (t.root == designated_root) best = static_cast<int>(n);
      continue;
    }
    if (best < 0 || ctx.table().position(t.root) <
                        ctx.table().position(f.curve.terms[best].root))
      best = static_cast<int>(n);
  }
  if (best < 0) throw MathError("curve has no usable linear term to read back");
  f.designated_root = f.curve.terms[best].root;
  f.designated_coeff = f.curve.terms[best].coeff;
  validate_new_factor(ctx, f);
  factors_.push_back(std::move(f));
  return *this;
}

SubgroupDescriptor& SubgroupDescriptor::add_finite_curve(
    const GroupContext& ctx, OneParamCurve curve, std::vector<FqElem> params,
    int designated_root) {
  add_curve(ctx, std::move(curve), designated_root);
  factors_.back().kind = Factor::Kind::FiniteCurve;
  factors_.back().params = std::move(params);
  return *this;
}

SubgroupDescriptor& SubgroupDescriptor::append(const GroupContext& ctx,
                                               const SubgroupDescriptor& other) {
  for (const Factor& f : other.factors_) {
    Factor copy = f;
    validate_new_factor(ctx, copy);
    factors_.push_back(std::move(copy));
  }
  return *this;
}

void SubgroupDescriptor::validate_new_factor(const GroupContext& ctx,
                                             const Factor& f) {
  if (f.designated_coeff.is_zero())
    throw MathError("descriptor factor with zero designated coefficient");
  // support of the new factor must avoid every earlier designated coordinate
  std::set<int> support;
  for (const CurveTerm& t : f.curve.terms) support.insert(t.root);
  // include collection corrections
  for (long i = 0; i < ctx.field().q(); ++i) {
    UniElem u = f.curve.eval(ctx, ctx.field().element(i));
    for (const Letter& l : u.letters()) support.insert(l.root);
  }
  for (const Factor& prev : factors_) {
    if (support.count(prev.designated_root))
      throw MathError("descriptor factor '" + f.name +
                      "' touches designated coordinate of '" + prev.name + "'");
  }
}

BigInt SubgroupDescriptor::size(const GroupContext& ctx) const {
  BigInt n = 1;
  for (const Factor& f : factors_)
    n *= (f.kind == Factor::Kind::FiniteCurve)
             ? BigInt(f.params.size())
             : BigInt(ctx.field().q());
  return n;
}

std::optional<std::vector<FqElem>> SubgroupDescriptor::factorize(
    const GroupContext& ctx, const UniElem& u) const {
  const FieldSpec& F = ctx.field();
  std::vector<FqElem> params;
  params.reserve(factors_.size());
  UniElem rest = u;
  for (const Factor& f : factors_) {
    FqElem t = F.div(rest.coord(f.designated_root), f.designated_coeff);
    if (f.kind == Factor::Kind::FiniteCurve) {
      bool allowed = false;
      for (const FqElem& p : f.params) allowed |= (p == t);
      if (!allowed) return std::nullopt;
    }
    params.push_back(t);
    rest = ctx.multiply(ctx.inverse(f.curve.eval(ctx, t)), rest);
  }
  if (!rest.is_identity()) return std::nullopt;
  return params;
}

UniElem SubgroupDescriptor::assemble(const GroupContext& ctx,
                                     const std::vector<FqElem>& params) const {
  if (params.size() != factors_.size())
    throw MathError("parameter count mismatch in assemble");
  UniElem u = ctx.identity();
  for (size_t i = 0; i < factors_.size(); ++i)
    u = ctx.multiply(u, factors_[i].curve.eval(ctx, params[i]));
  return u;
}

void SubgroupDescriptor::enumerate(
    const GroupContext& ctx,
    const std::function<void(const UniElem&, const std::vector<FqElem>&)>& visit,
    std::uint64_t budget) const {
  BigInt n = size(ctx);
  if (n > budget)
    throw BudgetError("enumeration of " + name_ + " exceeds budget",
                      static_cast<std::uint64_t>(n));
  size_t k = factors_.size();
  std::vector<long> counter(k, 0);
  std::vector<long> radix(k);
  for (size_t i = 0; i < k; ++i)
    radix[i] = (factors_[i].kind == Factor::Kind::FiniteCurve)
                   ? static_cast<long>(factors_[i].params.size())
                   : ctx.field().q();
  std::vector<FqElem> params(k);
  // prefix products so only the changed suffix is recomputed
  std::vector<UniElem> prefix(k + 1);
  prefix[0] = ctx.identity();
  auto param_of = [&](size_t i) {
    return factors_[i].kind == Factor::Kind::FiniteCurve
               ? factors_[i].params[counter[i]]
               : ctx.field().element(counter[i]);
  };
  size_t dirty = 0;
  while (true) {
    for (size_t i = dirty; i < k; ++i) {
      params[i] = param_of(i);
      prefix[i + 1] =
          ctx.multiply(prefix[i], factors_[i].curve.eval(ctx, params[i]));
    }
    visit(prefix[k], params);
    // odometer, last factor fastest
    size_t i = k;
    while (i > 0) {
      --i;
      if (++counter[i] < radix[i]) break;
      counter[i] = 0;
      if (i == 0) return;
    }
    if (k == 0) return;
    dirty = i;
  }
}

std::vector<UniElem> SubgroupDescriptor::generators(
    const GroupContext& ctx) const {
  const FieldSpec& F = ctx.field();
  std::vector<UniElem> gens;
  for (const Factor& f : factors_) {
    if (f.kind == Factor::Kind::FiniteCurve) {
      for (const FqElem& p : f.params)
        if (!p.is_zero()) gens.push_back(f.curve.eval(ctx, p));
    } else {
      for (int j = 0; j < F.f(); ++j) {
        FqElem basis;
        basis.c[j] = 1;
        gens.push_back(f.curve.eval(ctx, basis));
      }
    }
  }
  return gens;
}

}  // namespace unichar
