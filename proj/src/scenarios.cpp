#include "unichar/scenarios.hpp"

namespace unichar {

namespace {

std::shared_ptr<SubgroupDescriptor> coords_desc(const GroupContext& ctx,
                                                const std::string& name,
                                                const std::vector<int>& roots) {
  auto d = std::make_shared<SubgroupDescriptor>(name);
  d->add_coords(ctx, roots);
  return d;
}

FqElem least_nonvanishing(const FieldSpec& F, const FqElem& at) {
  // least a with phi(a * at) != 1
  for (long i = 1; i < F.q(); ++i) {
    FqElem a = F.element(i);
    if (F.phi_exponent(a, at) != 0) return a;
  }
  throw MathError("no nonvanishing multiplier (at = 0?)");
}

}  // namespace

LinearCharacter make_lambda(const GroupContext& ctx, DescPtr domain,
                            const std::map<int, FqElem>& coeffs) {
  const FieldSpec& F = ctx.field();
  std::vector<FqElem> cs;
  for (const auto& f : domain->factors()) {
    if (f.kind != SubgroupDescriptor::Factor::Kind::Coord)
      throw MathError("make_lambda expects a coordinate-product domain");
    int root = f.designated_root;
    auto it = coeffs.find(root);
    if (it != coeffs.end())
      cs.push_back(it->second);
    else if (ctx.table().height(root) == ctx.table().hmax())
      cs.push_back(F.one());
    else
      cs.push_back(F.zero());
  }
  return LinearCharacter(domain, std::move(cs));
}

// ----------------------------------------------------------------- D4 -----

D4Setup::D4Setup(const GroupContext& c, FqElem a8_, FqElem a9_, FqElem a10_)
    : ctx(c), a8(a8_), a9(a9_), a10(a10_) {
  const FieldSpec& F = ctx.field();
  A = F.mul(F.mul(a8, a9), a10);
  if (a8.is_zero() || a9.is_zero() || a10.is_zero())
    throw MathError("central character parameters must be nonzero");

  x124_curve = {"x124", {{1, a10, 1}, {2, a9, 1}, {4, a8, 1}}};
  x567_curve = {"x567", {{5, a10, 1}, {6, a9, 1}, {7, a8, 1}}};

  H = coords_desc(ctx, "H", {5, 6, 7, 8, 9, 10});
  T = coords_desc(ctx, "T", {1, 2, 4});
  full = coords_desc(ctx, "U", {1, 2, 4, 3, 5, 6, 7, 8, 9, 10});
  X3H = coords_desc(ctx, "HX3", {3, 5, 6, 7, 8, 9, 10});
  TX3 = coords_desc(ctx, "TX3", {1, 2, 4, 3});
  {
    auto d = std::make_shared<SubgroupDescriptor>("S124");
    d->add_curve(ctx, x124_curve);
    S124 = d;
  }
  {
    auto d = std::make_shared<SubgroupDescriptor>("S567");
    d->add_curve(ctx, x567_curve);
    S567 = d;
  }
}

LinearCharacter D4Setup::lambda(const FqElem& b5, const FqElem& b6,
                                const FqElem& b7) const {
  return make_lambda(ctx, H,
                     {{5, b5}, {6, b6}, {7, b7}, {8, a8}, {9, a9}, {10, a10}});
}

D4Invariants D4Setup::invariants(const LinearCharacter& lam) const {
  return d4_invariants(ctx.field(), a8, a9, a10, lam.coeff_of("x5"),
                       lam.coeff_of("x6"), lam.coeff_of("x7"));
}

std::vector<FqElem> D4Setup::f124_params(const FqElem& t0) const {
  return {ctx.field().zero(), t0};
}

FqElem D4Setup::f3_point(const FqElem& t0) const {
  const FieldSpec& F = ctx.field();
  return F.div(F.find_a_phi(t0), A);
}

FqElem D4Setup::a124(const FqElem& t0) const {
  return least_nonvanishing(ctx.field(), t0);
}

FqElem D4Setup::a3(const FqElem& t0) const {
  return least_nonvanishing(ctx.field(), f3_point(t0));
}

DescPtr D4Setup::K1(const FqElem& t0) const {
  auto d = std::make_shared<SubgroupDescriptor>("K1");
  d->add_finite_curve(ctx, x124_curve, f124_params(t0));
  d->add_coords(ctx, {3, 5, 6, 7, 8, 9, 10});
  return d;
}

DescPtr D4Setup::K2(const FqElem& t0) const {
  const FieldSpec& F = ctx.field();
  auto d = std::make_shared<SubgroupDescriptor>("K2");
  d->add_curve(ctx, x124_curve);
  OneParamCurve f3{"f3", {{3, F.one(), 1}}};
  d->add_finite_curve(ctx, f3, {F.zero(), f3_point(t0)});
  d->add_coords(ctx, {5, 6, 7, 8, 9, 10});
  return d;
}

LevelAction D4Setup::level_h(std::vector<UniElem> gens) const {
  return LevelAction(ctx, {5, 6, 7}, {{8, a8}, {9, a9}, {10, a10}},
                     std::move(gens));
}

LevelAction D4Setup::level_hx3(std::vector<UniElem> gens) const {
  return LevelAction(ctx, {3, 5, 6, 7}, {{8, a8}, {9, a9}, {10, a10}},
                     std::move(gens));
}

// ----------------------------------------------------------------- E6 -----

const std::vector<int> E6Setup::kHRoots = {8,  9,  10, 12, 13, 14, 15,
                                           16, 17, 18, 19, 20, 21};

E6Setup::E6Setup(const GroupContext& c) : ctx(c) {
  const FieldSpec& F = ctx.field();
  FqElem one = F.one();
  FqElem m1 = F.from_int(-1);
  FqElem two = F.from_int(2);

  s1t = {"s1t", {{2, one, 1}, {1, one, 1}, {3, m1, 1}, {5, one, 1}, {6, m1, 1}}};
  s2 = {"s2",
        {{2, one, 1},
         {1, one, 1},
         {3, m1, 1},
         {5, one, 1},
         {6, m1, 1},
         {7, two, 2},
         {11, two, 2}}};
  r3 = {"r3", {{12, one, 1}, {13, m1, 1}, {14, m1, 1}, {15, one, 1}, {16, one, 1}}};
  r2 = {"r2", {{8, m1, 1}, {9, one, 1}, {10, one, 1}}};

  H = coords_desc(ctx, "H", kHRoots);
  T = coords_desc(ctx, "T", {2, 1, 3, 7, 5, 6, 11});
  {
    auto d = std::make_shared<SubgroupDescriptor>("HX4");
    d->add_coord(ctx, 4);
    d->add_coords(ctx, kHRoots);
    X4H = d;
  }
  TX4 = coords_desc(ctx, "TX4", {2, 1, 3, 4, 5, 6, 7, 11});
  {
    auto d = std::make_shared<SubgroupDescriptor>("S1");
    d->add_curve(ctx, s1t);
    d->add_coord(ctx, 7);
    d->add_coord(ctx, 11);
    S1 = d;
  }
  {
    auto d = std::make_shared<SubgroupDescriptor>("S2");
    d->add_curve(ctx, s2);
    S2 = d;
  }
  {
    auto d = std::make_shared<SubgroupDescriptor>("HX4S1");
    d->add_curve(ctx, s1t);
    d->add_coord(ctx, 7);
    d->add_coord(ctx, 11);
    d->add_coord(ctx, 4);
    d->add_coords(ctx, kHRoots);
    HX4S1 = d;
  }
  Xcompl = coords_desc(ctx, "X1X3X5X6", {1, 3, 5, 6});
}

LinearCharacter E6Setup::lambda(const std::map<int, FqElem>& coeffs) const {
  return make_lambda(ctx, H, coeffs);
}

std::vector<FqElem> E6Setup::f2_params(const FqElem& c) const {
  const FieldSpec& F = ctx.field();
  return {F.zero(), c, F.neg(c)};
}

std::vector<FqElem> E6Setup::f4_params(const FqElem& c) const {
  const FieldSpec& F = ctx.field();
  FqElem cphi = F.find_a_phi(c);
  return {F.zero(), cphi, F.neg(cphi)};
}

DescPtr E6Setup::HX4F2(const FqElem& c) const {
  auto d = std::make_shared<SubgroupDescriptor>("HX4F2");
  d->add_finite_curve(ctx, s2, f2_params(c));
  d->add_coord(ctx, 4);
  d->add_coords(ctx, kHRoots);
  return d;
}

DescPtr E6Setup::HF4S2(const FqElem& c) const {
  auto d = std::make_shared<SubgroupDescriptor>("HF4S2");
  d->add_curve(ctx, s2);
  OneParamCurve x4{"x4", {{4, ctx.field().one(), 1}}};
  d->add_finite_curve(ctx, x4, f4_params(c));
  d->add_coords(ctx, kHRoots);
  return d;
}

DescPtr E6Setup::HX4S2() const {
  auto d = std::make_shared<SubgroupDescriptor>("HX4S2");
  d->add_curve(ctx, s2);
  d->add_coord(ctx, 4);
  d->add_coords(ctx, kHRoots);
  return d;
}

LevelAction E6Setup::level_h(std::vector<UniElem> gens) const {
  const FieldSpec& F = ctx.field();
  std::vector<std::pair<int, FqElem>> frozen;
  for (int r = 17; r <= 21; ++r) frozen.push_back({r, F.one()});
  return LevelAction(ctx, {8, 9, 10, 12, 13, 14, 15, 16}, frozen,
                     std::move(gens));
}

LevelAction E6Setup::level_h4h3(std::vector<UniElem> gens) const {
  const FieldSpec& F = ctx.field();
  std::vector<std::pair<int, FqElem>> frozen;
  for (int r = 17; r <= 21; ++r) frozen.push_back({r, F.one()});
  return LevelAction(ctx, {12, 13, 14, 15, 16}, frozen, std::move(gens));
}

LevelAction E6Setup::level_h2(std::vector<UniElem> gens) const {
  const FieldSpec& F = ctx.field();
  std::vector<std::pair<int, FqElem>> frozen;
  for (int r = 12; r <= 16; ++r) frozen.push_back({r, F.zero()});
  for (int r = 17; r <= 21; ++r) frozen.push_back({r, F.one()});
  return LevelAction(ctx, {8, 9, 10}, frozen, std::move(gens));
}

// ----------------------------------------------------------------- E8 -----

const std::vector<int> E8Setup::kHRoots = {
    12, 13, 18, 19, 20, 21, 24, 25, 26, 27, 28, 29, 30,
    31, 32, 33, 34, 35, 36, 37, 38, 39, 40, 41, 42, 43};
const std::vector<int> E8Setup::kH5 = {30, 31, 32, 33, 34, 35, 36};
const std::vector<int> E8Setup::kH4 = {24, 25, 26, 27, 28, 29};
const std::vector<int> E8Setup::kH3 = {18, 19, 20, 21};
const std::vector<int> E8Setup::kH2 = {12, 13};

E8Setup::E8Setup(const GroupContext& c) : ctx(c) {
  const FieldSpec& F = ctx.field();
  auto e = [&](int n) { return F.from_int(n); };

  l1 = {"l1",
        {{2, e(2), 1},
         {1, e(1), 1},
         {3, e(-2), 1},
         {4, e(1), 1},
         {6, e(1), 1},
         {7, e(2), 1},
         {8, e(-2), 1}}};
  l2 = l1;
  l2.name = "l2";
  for (auto [root, coef] : std::initializer_list<std::pair<int, int>>{
           {9, 1}, {10, -1}, {11, 1}, {14, -1}, {15, 2}})
    l2.terms.push_back({root, e(coef), 2});
  l3 = l2;
  l3.name = "l3";
  for (auto [root, coef] :
       std::initializer_list<std::pair<int, int>>{{16, 4}, {17, 2}, {22, 3}})
    l3.terms.push_back({root, e(coef), 3});
  l4 = l3;
  l4.name = "l4";
  l4.terms.push_back({23, e(3), 4});

  r5 = {"r5",
        {{30, e(1), 1},
         {31, e(1), 1},
         {32, e(-1), 1},
         {33, e(-1), 1},
         {34, e(-2), 1},
         {35, e(2), 1},
         {36, e(2), 1}}};
  r4 = {"r4",
        {{24, e(2), 1},
         {25, e(-2), 1},
         {26, e(1), 1},
         {27, e(-1), 1},
         {28, e(-1), 1},
         {29, e(1), 1}}};
  r3 = {"r3", {{18, e(1), 1}, {19, e(-1), 1}, {20, e(-1), 1}, {21, e(1), 1}}};
  r2 = {"r2", {{12, e(1), 1}, {13, e(-1), 1}}};

  H = coords_desc(ctx, "H", kHRoots);
  T = coords_desc(ctx, "T",
                  {2, 1, 3, 4, 6, 7, 8, 9, 10, 11, 14, 15, 16, 17, 22, 23});
  T2d = coords_desc(ctx, "T2", {9, 10, 11, 14, 15});
  T3d = coords_desc(ctx, "T3", {16, 17, 22});
  T4d = coords_desc(ctx, "T4", {23});
  {
    auto d = std::make_shared<SubgroupDescriptor>("S1");
    d->add_curve(ctx, l1);
    d->add_coords(ctx, {9, 10, 11, 14, 15});
    d->add_coords(ctx, {16, 17, 22});
    d->add_coord(ctx, 23);
    S1 = d;
  }
  {
    auto d = std::make_shared<SubgroupDescriptor>("S2");
    d->add_curve(ctx, l2);
    d->add_coords(ctx, {16, 17, 22});
    d->add_coord(ctx, 23);
    S2 = d;
  }
  {
    auto d = std::make_shared<SubgroupDescriptor>("S3");
    d->add_curve(ctx, l3);
    d->add_coord(ctx, 23);
    S3 = d;
  }
  {
    auto d = std::make_shared<SubgroupDescriptor>("S4");
    d->add_curve(ctx, l4);
    S4 = d;
  }
  {
    auto d = std::make_shared<SubgroupDescriptor>("HX5");
    d->add_coord(ctx, 5);
    d->add_coords(ctx, kHRoots);
    X5H = d;
  }
  {
    auto d = std::make_shared<SubgroupDescriptor>("TX5");
    d->add_coords(ctx, {2, 1, 3, 4, 5, 6, 7, 8, 9, 10, 11, 14, 15, 16, 17, 22, 23});
    TX5 = d;
  }
}

LinearCharacter E8Setup::lambda(const std::map<int, FqElem>& coeffs) const {
  return make_lambda(ctx, H, coeffs);
}

std::vector<FqElem> E8Setup::f4_params(const FqElem& c) const {
  const FieldSpec& F = ctx.field();
  std::vector<FqElem> out;
  for (int u = 0; u < F.p(); ++u) out.push_back(F.mul(F.from_int(u), c));
  return out;
}

std::vector<FqElem> E8Setup::f5_params(const FqElem& c) const {
  const FieldSpec& F = ctx.field();
  FqElem cphi = F.find_a_phi(c);
  std::vector<FqElem> out;
  for (int v = 0; v < F.p(); ++v) out.push_back(F.mul(F.from_int(v), cphi));
  return out;
}

DescPtr E8Setup::HX5F4(const FqElem& c) const {
  auto d = std::make_shared<SubgroupDescriptor>("HX5F4");
  d->add_finite_curve(ctx, l4, f4_params(c));
  d->add_coord(ctx, 5);
  d->add_coords(ctx, kHRoots);
  return d;
}

DescPtr E8Setup::HF5S4(const FqElem& c) const {
  auto d = std::make_shared<SubgroupDescriptor>("HF5S4");
  d->add_curve(ctx, l4);
  OneParamCurve x5{"x5", {{5, ctx.field().one(), 1}}};
  d->add_finite_curve(ctx, x5, f5_params(c));
  d->add_coords(ctx, kHRoots);
  return d;
}

DescPtr E8Setup::HX5S4() const {
  auto d = std::make_shared<SubgroupDescriptor>("HX5S4");
  d->add_curve(ctx, l4);
  d->add_coord(ctx, 5);
  d->add_coords(ctx, kHRoots);
  return d;
}

namespace {

LevelAction make_e8_level(const GroupContext& ctx, const std::vector<int>& state,
                          int min_frozen_root,
                          std::vector<std::pair<int, FqElem>> background,
                          std::vector<UniElem> gens) {
  const FieldSpec& F = ctx.field();
  std::map<int, FqElem> frozen;
  for (int r : E8Setup::kHRoots) {
    if (r < min_frozen_root) continue;
    frozen[r] = (ctx.table().height(r) == 6) ? F.one() : F.zero();
  }
  for (const auto& [r, v] : background) frozen[r] = v;
  std::vector<std::pair<int, FqElem>> fz(frozen.begin(), frozen.end());
  return LevelAction(ctx, state, fz, std::move(gens));
}

}  // namespace

LevelAction E8Setup::level_h5(std::vector<UniElem> gens,
                              std::vector<std::pair<int, FqElem>> background) const {
  return make_e8_level(ctx, kH5, 37, std::move(background), std::move(gens));
}

LevelAction E8Setup::level_h4(std::vector<UniElem> gens,
                              std::vector<std::pair<int, FqElem>> background) const {
  return make_e8_level(ctx, kH4, 30, std::move(background), std::move(gens));
}

LevelAction E8Setup::level_h3(std::vector<UniElem> gens,
                              std::vector<std::pair<int, FqElem>> background) const {
  return make_e8_level(ctx, kH3, 24, std::move(background), std::move(gens));
}

LevelAction E8Setup::level_h2(std::vector<UniElem> gens,
                              std::vector<std::pair<int, FqElem>> background) const {
  return make_e8_level(ctx, kH2, 18, std::move(background), std::move(gens));
}

}  // namespace unichar
