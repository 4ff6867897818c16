#include <doctest.h>

#include <random>

#include "unichar/orbits.hpp"
#include "unichar/scenarios.hpp"

using namespace unichar;

TEST_CASE("character evaluation on H") {
  FieldSpec F = FieldSpec::conway(2, 1);
  GroupContext ctx(RootSystemTable::get(RootKind::D4), F);
  D4Setup s(ctx, F.one(), F.one(), F.one());
  LinearCharacter lam = s.lambda(F.one(), F.zero(), F.zero());

  CHECK(lam.eval(ctx, ctx.identity()) == CycInt::integer(2, 1));
  // a8 = 1: value on x8(1) is phi(1) = -1
  CHECK(lam.eval(ctx, ctx.generator(8, F.one())) == CycInt::integer(2, -1));
  CHECK(lam.eval(ctx, ctx.generator(5, F.one())) == CycInt::integer(2, -1));
  CHECK(lam.eval(ctx, ctx.generator(6, F.one())) == CycInt::integer(2, 1));
  CHECK_THROWS_AS(lam.eval(ctx, ctx.generator(1, F.one())), MathError);
  CHECK(lam.eval_zero_extended(ctx, ctx.generator(1, F.one())).is_zero());
}

TEST_CASE("D4 conjugation matches the displayed action on coefficients") {
  for (int f : {1, 2}) {
    FieldSpec F = FieldSpec::conway(2, f);
    GroupContext ctx(RootSystemTable::get(RootKind::D4), F);
    // generic nonzero central character
    FqElem a8 = F.element(1), a9 = F.element(F.q() - 1), a10 = F.element(F.q() > 2 ? 2 : 1);
    D4Setup s(ctx, a8, a9, a10);
    std::mt19937_64 rng(42);
    for (int n = 0; n < 30; ++n) {
      FqElem b5 = F.element(static_cast<long>(rng() % F.q()));
      FqElem b6 = F.element(static_cast<long>(rng() % F.q()));
      FqElem b7 = F.element(static_cast<long>(rng() % F.q()));
      FqElem t1 = F.element(static_cast<long>(rng() % F.q()));
      FqElem t2 = F.element(static_cast<long>(rng() % F.q()));
      FqElem t4 = F.element(static_cast<long>(rng() % F.q()));
      LinearCharacter lam = s.lambda(b5, b6, b7);
      UniElem x = s.T->assemble(ctx, {t1, t2, t4});
      LinearCharacter conj = conjugate_character(ctx, lam, x);
      // b5 + a8 t2 + a9 t4 ; b6 + a8 t1 + a10 t4 ; b7 + a9 t1 + a10 t2
      CHECK(conj.coeff_of("x5") ==
            F.add(b5, F.add(F.mul(a8, t2), F.mul(a9, t4))));
      CHECK(conj.coeff_of("x6") ==
            F.add(b6, F.add(F.mul(a8, t1), F.mul(a10, t4))));
      CHECK(conj.coeff_of("x7") ==
            F.add(b7, F.add(F.mul(a9, t1), F.mul(a10, t2))));
      // central part unchanged
      CHECK(conj.coeff_of("x8") == a8);
      // t0 is invariant under the action
      CHECK(s.invariants(conj).t0 == s.invariants(lam).t0);
    }
  }
}

TEST_CASE("b-invariant formulas") {
  FieldSpec F = FieldSpec::conway(3, 1);
  // E6, b12..b16 = (1,1,1,1,1): B3 = 1 - 1 - 1 + 1 + 1 = 1
  std::vector<FqElem> ones(5, F.one());
  CHECK(e6_B3(F, ones) == F.one());
  CHECK(e6_B2(F, F.zero(), F.zero(), F.zero()).is_zero());

  FieldSpec F2 = FieldSpec::conway(2, 1);
  // D4, a = (1,1,1), b = (1,0,0): A = 1, t0 = 1
  auto inv = d4_invariants(F2, F2.one(), F2.one(), F2.one(), F2.one(),
                           F2.zero(), F2.zero());
  CHECK(inv.A == F2.one());
  CHECK(inv.t0 == F2.one());

  FieldSpec F5 = FieldSpec::conway(5, 1);
  std::vector<FqElem> b5v(7, F5.zero());
  CHECK(e8_B5(F5, b5v).is_zero());
  b5v[0] = F5.one();  // b30 = 1
  CHECK(e8_B5(F5, b5v) == F5.one());
  b5v[4] = F5.one();  // b34 = 1: B5 = 1 - 2 = -1
  CHECK(e8_B5(F5, b5v) == F5.from_int(-1));
}

TEST_CASE("E6 character value on r3 is phi(B3 t)") {
  FieldSpec F = FieldSpec::conway(3, 1);
  GroupContext ctx(RootSystemTable::get(RootKind::E6), F);
  E6Setup s(ctx);
  std::mt19937_64 rng(5);
  for (int n = 0; n < 20; ++n) {
    std::map<int, FqElem> coeffs;
    for (int r : {8, 9, 10, 12, 13, 14, 15, 16})
      coeffs[r] = F.element(static_cast<long>(rng() % 3));
    LinearCharacter lam = s.lambda(coeffs);
    FqElem B3 = e6_B3(F, {coeffs[12], coeffs[13], coeffs[14], coeffs[15],
                          coeffs[16]});
    for (long ti = 0; ti < 3; ++ti) {
      FqElem t = F.element(ti);
      CHECK(lam.exponent(ctx, s.r3.eval(ctx, t)) == F.phi_exponent(B3, t));
    }
  }
}

TEST_CASE("D4 level-h orbits: q orbits of size q^2") {
  FieldSpec F = FieldSpec::conway(2, 1);
  GroupContext ctx(RootSystemTable::get(RootKind::D4), F);
  D4Setup s(ctx, F.one(), F.one(), F.one());
  LevelAction act = s.level_h(s.T->generators(ctx));

  std::set<std::uint64_t> seen;
  int orbits = 0;
  for (std::uint64_t k = 0; k < 8; ++k) {
    if (seen.count(k)) continue;
    auto inv = [&](const LevelAction::State& st) {
      return d4_invariants(F, s.a8, s.a9, s.a10, st[0], st[1], st[2]).t0;
    };
    OrbitResult orb =
        orbit_stabilizer_bfs(act, act.state_from_key(k), s.T->size(ctx), inv);
    CHECK(orb.orbit_size == 4);
    CHECK(orb.stabilizer_order == 2);
    CHECK(orb.product_identity);
    CHECK(orb.invariant_constant);
    for (std::uint64_t kk : orb.orbit_keys) seen.insert(kk);
    ++orbits;
  }
  CHECK(orbits == 2);
}

TEST_CASE("claimed stabilizer certification for S124") {
  FieldSpec F = FieldSpec::conway(2, 1);
  GroupContext ctx(RootSystemTable::get(RootKind::D4), F);
  D4Setup s(ctx, F.one(), F.one(), F.one());
  LevelAction act = s.level_h(s.T->generators(ctx));
  LevelAction::State st = {F.one(), F.zero(), F.zero()};  // t0 = 1
  OrbitResult orb = orbit_stabilizer_bfs(act, st, s.T->size(ctx));
  StabilizerCheck chk =
      claimed_stabilizer_check(act, st, *s.S124, orb, s.T->size(ctx));
  CHECK(chk.claimed_fixes);
  CHECK(chk.order_matches);
}

TEST_CASE("theorem values at the identity and spot points") {
  FieldSpec F = FieldSpec::conway(2, 1);
  GroupContext ctx(RootSystemTable::get(RootKind::D4), F);
  D4TheoremParams P{F.one(), F.one(), F.one(), F.zero(), F.zero(), F.zero()};

  // full-degree shape at the identity: q^3
  CHECK(theorem_d4_value(ctx, P, ctx.identity()) == CycInt::integer(2, 8));
  // value at x8(1): q^3 * phi(1) = -8
  CHECK(theorem_d4_value(ctx, P, ctx.generator(8, F.one())) ==
        CycInt::integer(2, -8));
  // u = x5(a10) x6(a9) x7(a8): deltas hold, phi part trivial
  UniElem u = ctx.from_coords({{5, F.one()}, {6, F.one()}, {7, F.one()}});
  CHECK(theorem_d4_value(ctx, P, u) == CycInt::integer(2, 8));
  // vanishes off the support
  CHECK(theorem_d4_value(ctx, P, ctx.generator(1, F.one())).is_zero());

  // half-degree shape at the identity: q^3/2
  D4TheoremParams Q{F.one(), F.one(), F.one(), F.one(), F.zero(), F.zero()};
  CHECK(theorem_d4_value(ctx, Q, ctx.identity()) == CycInt::integer(2, 4));
}

TEST_CASE("induction: degree at the identity and zero off K1-classes") {
  FieldSpec F = FieldSpec::conway(2, 1);
  GroupContext ctx(RootSystemTable::get(RootKind::D4), F);
  D4Setup s(ctx, F.one(), F.one(), F.one());
  // t0 = 0 character, extended to HX3 with b3 = 0
  auto HX3 = s.X3H;
  LinearCharacter eta = make_lambda(
      ctx, HX3, {{3, F.zero()}, {5, F.zero()}, {6, F.zero()}, {7, F.zero()}});
  auto trans = make_transversal(ctx, *s.full, *HX3);
  CHECK(trans.size() == 8);
  CHECK(induce_value(ctx, eta, trans, ctx.identity()) ==
        CycInt::integer(2, 8));
  // chi(x1(1)) = 0 for the full-degree character
  CHECK(induce_value(ctx, eta, trans, ctx.generator(1, F.one())).is_zero());
}

TEST_CASE("torus transitivity on central tuples") {
  {
    FieldSpec F = FieldSpec::conway(3, 1);
    auto res = torus_orbit_on_central(RootSystemTable::get(RootKind::E6), F);
    CHECK(res.full_size == 32);
    CHECK(res.transitive);
    // identity torus element fixes the tuple
    std::vector<FqElem> ones6(6, F.one());
    std::vector<FqElem> tuple(5, F.from_int(2));
    CHECK(torus_conjugate_tuple(RootSystemTable::get(RootKind::E6), F, ones6,
                                tuple) == tuple);
  }
  {
    FieldSpec F = FieldSpec::conway(2, 1);
    auto res = torus_orbit_on_central(RootSystemTable::get(RootKind::D4), F);
    CHECK(res.full_size == 1);
    CHECK(res.transitive);
  }
}

TEST_CASE("inner product of the trivial character with itself is 1") {
  FieldSpec F = FieldSpec::conway(2, 1);
  GroupContext ctx(RootSystemTable::get(RootKind::D4), F);
  ValueTable triv;
  triv.values.assign(1024, CycInt::integer(2, 1));
  CHECK(inner_product(ctx, triv, triv) == 1);
}

TEST_CASE("descriptor sizes from the definitions") {
  {
    FieldSpec F = FieldSpec::conway(3, 1);
    GroupContext ctx(RootSystemTable::get(RootKind::E6), F);
    E6Setup s(ctx);
    CHECK(s.S1->size(ctx) == 27);   // parameters t, r, s
    CHECK(s.S2->size(ctx) == 3);
    CHECK(s.H->size(ctx) == BigInt("1594323"));  // q^13
    CHECK(s.T->size(ctx) == 2187);               // q^7
  }
  {
    FieldSpec F = FieldSpec::conway(5, 1);
    GroupContext ctx(RootSystemTable::get(RootKind::E8), F);
    E8Setup s(ctx);
    CHECK(s.S1->size(ctx) == BigInt("9765625"));  // q^10
    CHECK(s.S2->size(ctx) == 3125);               // q^5
    CHECK(s.S3->size(ctx) == 25);                 // q^2
    CHECK(s.S4->size(ctx) == 5);                  // q
    CHECK(s.T->size(ctx) == BigInt("152587890625"));  // q^16
  }
  {
    FieldSpec F = FieldSpec::conway(2, 1);
    GroupContext ctx(RootSystemTable::get(RootKind::D4), F);
    D4Setup s(ctx, F.one(), F.one(), F.one());
    SubgroupDescriptor f124("F124");
    f124.add_finite_curve(ctx, s.x124_curve, s.f124_params(F.one()));
    CHECK(f124.size(ctx) == 2);
  }
}

TEST_CASE("cyclotomic json") {
  CHECK(CycInt::zeta_pow(3, 1).to_json() ==
        std::string("{\"p\": 3, \"coeffs\": [0, 1]}"));
}

TEST_CASE("level action agrees with direct character conjugation") {
  // the BFS fast path precomputes commutators; it must match conjugating the
  // full restriction character factor by factor
  {
    FieldSpec F = FieldSpec::conway(3, 1);
    GroupContext ctx(RootSystemTable::get(RootKind::E6), F);
    E6Setup s(ctx);
    auto domain = std::make_shared<SubgroupDescriptor>("Hlevel");
    domain->add_coords(ctx, E6Setup::kHRoots);
    std::vector<UniElem> gens = s.T->generators(ctx);
    LevelAction act = s.level_h(gens);
    std::mt19937_64 rng(31337);
    for (int n = 0; n < 25; ++n) {
      LevelAction::State st(8);
      for (auto& x : st) x = F.element(static_cast<long>(rng() % 3));
      std::map<int, FqElem> coeffs = {{8, st[0]}, {9, st[1]}, {10, st[2]}};
      for (int i = 0; i < 5; ++i) coeffs[12 + i] = st[3 + i];
      LinearCharacter lam = make_lambda(ctx, domain, coeffs);
      int g = static_cast<int>(rng() % gens.size());
      LevelAction::State moved = act.apply(g, st);
      LinearCharacter conj = conjugate_character(ctx, lam, gens[g]);
      CHECK(conj.coeff_of("x8") == moved[0]);
      CHECK(conj.coeff_of("x9") == moved[1]);
      CHECK(conj.coeff_of("x10") == moved[2]);
      for (int i = 0; i < 5; ++i)
        CHECK(conj.coeff_of("x" + std::to_string(12 + i)) == moved[3 + i]);
    }
  }
  {
    FieldSpec F = FieldSpec::conway(5, 1);
    GroupContext ctx(RootSystemTable::get(RootKind::E8), F);
    E8Setup s(ctx);
    auto domain = std::make_shared<SubgroupDescriptor>("H5level");
    std::vector<int> roots = E8Setup::kH5;
    for (int r = 37; r <= 43; ++r) roots.push_back(r);
    domain->add_coords(ctx, roots);
    std::vector<UniElem> gens = s.T->generators(ctx);
    LevelAction act = s.level_h5(gens);
    std::mt19937_64 rng(777);
    for (int n = 0; n < 25; ++n) {
      LevelAction::State st(7);
      for (auto& x : st) x = F.element(static_cast<long>(rng() % 5));
      std::map<int, FqElem> coeffs;
      for (int i = 0; i < 7; ++i) coeffs[30 + i] = st[i];
      LinearCharacter lam = make_lambda(ctx, domain, coeffs);
      int g = static_cast<int>(rng() % gens.size());
      LevelAction::State moved = act.apply(g, st);
      LinearCharacter conj = conjugate_character(ctx, lam, gens[g]);
      for (int i = 0; i < 7; ++i)
        CHECK(conj.coeff_of("x" + std::to_string(30 + i)) == moved[i]);
    }
  }
}

TEST_CASE("extension obstruction: X3 against S124 when t0 != 0") {
  // At q = 2 the curve S124 degenerates to F124 = {1, x124(t0)}, so the
  // HX3S124 target coincides with K1 and the extension exists; the
  // obstruction is genuine from q = 4 on.
  {
    FieldSpec F = FieldSpec::conway(2, 2);
    GroupContext ctx(RootSystemTable::get(RootKind::D4), F);
    D4Setup s(ctx, F.one(), F.one(), F.one());
    LinearCharacter lam = s.lambda(F.gen(), F.zero(), F.zero());  // t0 = w
    auto bad = std::make_shared<SubgroupDescriptor>("HX3S124");
    bad->add_curve(ctx, s.x124_curve, /*designated_root=*/2);
    bad->add_coord(ctx, 3);
    bad->add_coords(ctx, {5, 6, 7, 8, 9, 10});
    auto res = extension_set(ctx, lam, bad, {{F.zero()}, {F.zero()}}, 0);
    CHECK(res.obstructed);
  }
  {
    FieldSpec F = FieldSpec::conway(2, 1);
    GroupContext ctx(RootSystemTable::get(RootKind::D4), F);
    D4Setup s(ctx, F.one(), F.one(), F.one());
    LinearCharacter lam = s.lambda(F.one(), F.zero(), F.zero());  // t0 = 1
    // K1 = HX3F124: unobstructed, 2q = 4 extensions
    auto K1 = s.K1(F.one());
    FqElem a124 = s.a124(F.one());
    auto ok = extension_set(ctx, lam, K1,
                            {{F.zero(), F.one()}, {F.zero(), a124}}, 0);
    CHECK_FALSE(ok.obstructed);
    CHECK(ok.extensions.size() == 4);
  }
}
