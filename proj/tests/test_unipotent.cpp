#include <doctest.h>

#include <random>
#include <set>

#include "unichar/scenarios.hpp"
#include "unichar/unipotent.hpp"

using namespace unichar;

namespace {

UniElem rand_elem(const GroupContext& ctx, std::mt19937_64& rng) {
  const FieldSpec& F = ctx.field();
  std::vector<std::pair<int, FqElem>> coords;
  for (int r : ctx.table().quotient_roots())
    if (rng() % 2)
      coords.push_back({r, F.element(static_cast<long>(rng() % F.q()))});
  return ctx.from_coords(coords);
}

}  // namespace

TEST_CASE("basic collection in D4") {
  FieldSpec F = FieldSpec::conway(2, 1);
  GroupContext ctx(RootSystemTable::get(RootKind::D4), F);

  CHECK(ctx.multiply(ctx.identity(), ctx.identity()).is_identity());
  UniElem u = ctx.parse_word("x3(1)*x1(1)");
  // x3 x1 = x1 x3 x5 in characteristic 2
  CHECK(ctx.format(u) == "x1(1)*x3(1)*x5(1)");
  CHECK(u.coord(5) == F.one());

  // single letters collect to themselves
  CHECK(ctx.format(ctx.parse_word("x1(1)*x3(1)")) == "x1(1)*x3(1)");
  // inverse of a single-root element
  CHECK(ctx.inverse(ctx.generator(3, F.one())) == ctx.generator(3, F.one()));
}

TEST_CASE("collection respects the D4 normal-form quirk") {
  FieldSpec F = FieldSpec::conway(2, 2);
  GroupContext ctx(RootSystemTable::get(RootKind::D4), F);
  UniElem u = ctx.parse_word("x3(1)*x4(1)");
  // normal order puts x4 first, so a x7 correction appears
  CHECK(u.coord(4) == F.one());
  CHECK(u.coord(3) == F.one());
  CHECK(u.coord(7) == F.one());
  UniElem v = ctx.parse_word("x4(1)*x3(1)");
  CHECK(v.coord(7).is_zero());
}

TEST_CASE("associativity and inverses, random sweeps") {
  std::mt19937_64 rng(12345);
  for (auto [kind, p] : {std::pair{RootKind::D4, 2},
                         {RootKind::E6, 3},
                         {RootKind::E8, 5}}) {
    FieldSpec F = FieldSpec::conway(p, 1);
    GroupContext ctx(RootSystemTable::get(kind), F);
    for (int i = 0; i < 500; ++i) {
      UniElem a = rand_elem(ctx, rng), b = rand_elem(ctx, rng),
              c = rand_elem(ctx, rng);
      CHECK(ctx.multiply(ctx.multiply(a, b), c) ==
            ctx.multiply(a, ctx.multiply(b, c)));
      CHECK(ctx.multiply(a, ctx.inverse(a)).is_identity());
    }
  }
}

TEST_CASE("E6 commutator [x8(t8), s1(t,r,s)] matches the hand expansion") {
  FieldSpec F = FieldSpec::conway(3, 1);
  GroupContext ctx(RootSystemTable::get(RootKind::E6), F);
  E6Setup s(ctx);
  for (long t8i = 1; t8i < 3; ++t8i)
    for (long ti = 0; ti < 3; ++ti)
      for (long ri = 0; ri < 3; ++ri)
        for (long si = 0; si < 3; ++si) {
          FqElem t8 = F.element(t8i), t = F.element(ti), r = F.element(ri),
                 sp = F.element(si);
          UniElem s1 = ctx.multiply(
              ctx.multiply(s.s1t.eval(ctx, t), ctx.generator(7, r)),
              ctx.generator(11, sp));
          UniElem c = ctx.commutator(ctx.generator(8, t8), s1);
          // x20(t8 s) x17(-t8 r) x14(t8 t) x20(-t8 t^2) x13(t8 t) x19(t8 t^2)
          FqElem t2 = F.mul(t, t);
          CHECK(c.coord(13) == F.mul(t8, t));
          CHECK(c.coord(14) == F.mul(t8, t));
          CHECK(c.coord(17) == F.neg(F.mul(t8, r)));
          CHECK(c.coord(19) == F.mul(t8, t2));
          CHECK(c.coord(20) == F.sub(F.mul(t8, sp), F.mul(t8, t2)));
          CHECK(c.coord(12).is_zero());
        }
}

TEST_CASE("E8 commutator [x5(v5), l4(u)] has the stated height-2 part") {
  FieldSpec F = FieldSpec::conway(5, 1);
  GroupContext ctx(RootSystemTable::get(RootKind::E8), F);
  E8Setup s(ctx);
  for (long vi = 1; vi < 5; ++vi)
    for (long ui = 0; ui < 5; ++ui) {
      FqElem v5 = F.element(vi), u = F.element(ui);
      UniElem c = ctx.commutator(ctx.generator(5, v5), s.l4.eval(ctx, u));
      CHECK(c.coord(12) == F.neg(F.mul(v5, u)));
      CHECK(c.coord(13) == F.mul(v5, u));
    }
}

TEST_CASE("curve closure checks") {
  {
    FieldSpec F = FieldSpec::conway(3, 1);
    GroupContext ctx(RootSystemTable::get(RootKind::E6), F);
    E6Setup s(ctx);
    CHECK(curve_closure_check(ctx, s.s2, nullptr).pass);
    CHECK(curve_closure_check(ctx, s.r3, nullptr).pass);
    CHECK(curve_closure_check(ctx, s.r2, nullptr).pass);
    // s1t closes only modulo X7 X11
    SubgroupDescriptor tail("X7X11");
    tail.add_coord(ctx, 7);
    tail.add_coord(ctx, 11);
    CHECK_FALSE(curve_closure_check(ctx, s.s1t, nullptr).pass);
    CHECK(curve_closure_check(ctx, s.s1t, &tail).pass);
  }
  {
    FieldSpec F = FieldSpec::conway(5, 1);
    GroupContext ctx(RootSystemTable::get(RootKind::E8), F);
    E8Setup s(ctx);
    CHECK(curve_closure_check(ctx, s.l4, nullptr).pass);  // S4 is a group
    for (const OneParamCurve* c : {&s.r5, &s.r4, &s.r3, &s.r2})
      CHECK(curve_closure_check(ctx, *c, nullptr).pass);
    SubgroupDescriptor t234("T2T3T4");
    t234.add_coords(ctx, {9, 10, 11, 14, 15, 16, 17, 22, 23});
    SubgroupDescriptor t34("T3T4");
    t34.add_coords(ctx, {16, 17, 22, 23});
    SubgroupDescriptor t4("T4");
    t4.add_coord(ctx, 23);
    CHECK(curve_closure_check(ctx, s.l1, &t234).pass);
    CHECK(curve_closure_check(ctx, s.l2, &t34).pass);
    CHECK(curve_closure_check(ctx, s.l3, &t4).pass);
  }
  {
    FieldSpec F = FieldSpec::conway(2, 2);
    GroupContext ctx(RootSystemTable::get(RootKind::D4), F);
    D4Setup s(ctx, F.one(), F.one(), F.one());
    CHECK(curve_closure_check(ctx, s.x124_curve, nullptr).pass);
    CHECK(curve_closure_check(ctx, s.x567_curve, nullptr).pass);
  }
}

TEST_CASE("descriptor enumeration and factorization") {
  FieldSpec F = FieldSpec::conway(2, 1);
  GroupContext ctx(RootSystemTable::get(RootKind::D4), F);
  D4Setup s(ctx, F.one(), F.one(), F.one());

  CHECK(s.H->size(ctx) == 64);
  int count = 0;
  std::set<std::uint64_t> keys;
  s.H->enumerate(ctx, [&](const UniElem& u, const std::vector<FqElem>&) {
    ++count;
    keys.insert(element_key(ctx, u));
  });
  CHECK(count == 64);
  CHECK(keys.size() == 64);  // each element exactly once

  // factorize round trip on K1 with t0 = 1
  FqElem t0 = F.one();
  auto K1 = s.K1(t0);
  CHECK(K1->size(ctx) == 256);
  K1->enumerate(ctx, [&](const UniElem& u, const std::vector<FqElem>& params) {
    auto back = K1->factorize(ctx, u);
    REQUIRE(back);
    CHECK(*back == params);
  });

  // identity factorizes with all-zero parameters
  auto idp = s.H->factorize(ctx, ctx.identity());
  REQUIRE(idp);
  for (const FqElem& t : *idp) CHECK(t.is_zero());

  // x1(1) is not in H
  CHECK_FALSE(s.H->contains(ctx, ctx.generator(1, F.one())));

  // budget refusal
  CHECK_THROWS_AS(
      s.full->enumerate(ctx, [](const UniElem&, const std::vector<FqElem>&) {},
                        /*budget=*/512),
      BudgetError);
}

TEST_CASE("element keys round trip") {
  FieldSpec F = FieldSpec::conway(2, 2);
  GroupContext ctx(RootSystemTable::get(RootKind::D4), F);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    UniElem u = rand_elem(ctx, rng);
    CHECK(element_from_key(ctx, element_key(ctx, u)) == u);
  }
}

TEST_CASE("multiplication restricted to the center is coordinate addition") {
  for (auto [kind, p] : {std::pair{RootKind::D4, 2},
                         {RootKind::E6, 3},
                         {RootKind::E8, 5}}) {
    FieldSpec F = FieldSpec::conway(p, 1);
    GroupContext ctx(RootSystemTable::get(kind), F);
    std::mt19937_64 rng(99);
    auto central = ctx.table().central_roots();
    for (int i = 0; i < 200; ++i) {
      std::vector<std::pair<int, FqElem>> ca, cb;
      for (int r : central) {
        ca.push_back({r, F.element(static_cast<long>(rng() % F.q()))});
        cb.push_back({r, F.element(static_cast<long>(rng() % F.q()))});
      }
      UniElem a = ctx.from_coords(ca), b = ctx.from_coords(cb);
      UniElem ab = ctx.multiply(a, b);
      for (int r : central) CHECK(ab.coord(r) == F.add(a.coord(r), b.coord(r)));
      // and central elements commute with everything
      UniElem x = rand_elem(ctx, rng);
      CHECK(ctx.commutator(a, x).is_identity());
    }
  }
}

TEST_CASE("factorization round trips on the deep towers") {
  FieldSpec F = FieldSpec::conway(5, 1);
  GroupContext ctx(RootSystemTable::get(RootKind::E8), F);
  E8Setup s(ctx);
  std::mt19937_64 rng(4242);
  auto roundtrip = [&](const SubgroupDescriptor& d, int n) {
    for (int i = 0; i < n; ++i) {
      std::vector<FqElem> params;
      for (const auto& fac : d.factors()) {
        if (fac.kind == SubgroupDescriptor::Factor::Kind::FiniteCurve)
          params.push_back(fac.params[rng() % fac.params.size()]);
        else
          params.push_back(F.element(static_cast<long>(rng() % 5)));
      }
      UniElem u = d.assemble(ctx, params);
      auto back = d.factorize(ctx, u);
      REQUIRE(back);
      CHECK(*back == params);
    }
  };
  roundtrip(*s.S1, 100);
  roundtrip(*s.HX5F4(F.one()), 60);
  roundtrip(*s.HF5S4(F.one()), 60);
  // membership refusal: a torus-side coordinate never factors through H
  CHECK_FALSE(s.H->contains(ctx, ctx.generator(9, F.one())));
}

TEST_CASE("word parser handles inverses and rejects junk") {
  FieldSpec F = FieldSpec::conway(3, 1);
  GroupContext ctx(RootSystemTable::get(RootKind::E6), F);
  UniElem u = ctx.parse_word("x4(2)^-1");
  CHECK(u.coord(4) == F.one());
  CHECK_THROWS_AS(ctx.parse_word("y1(1)"), MathError);
  CHECK_THROWS_AS(ctx.parse_word("x1(1"), MathError);
  CHECK_THROWS_AS(ctx.parse_word("x99(1)"), MathError);
}
