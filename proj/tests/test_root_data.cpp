#include <doctest.h>

#include "unichar/root_data.hpp"

using namespace unichar;

TEST_CASE("root counts and heights") {
  const auto& d4 = RootSystemTable::get(RootKind::D4);
  CHECK(d4.root_count() == 12);
  CHECK(d4.hmax() == 3);
  CHECK(d4.roots_of_height(1).size() == 4);
  CHECK(d4.quotient_roots().size() == 10);

  const auto& e6 = RootSystemTable::get(RootKind::E6);
  CHECK(e6.root_count() == 21);
  CHECK(e6.hmax() == 4);

  const auto& e8 = RootSystemTable::get(RootKind::E8);
  CHECK(e8.root_count() == 43);
  CHECK(e8.hmax() == 6);
}

TEST_CASE("tables validate, including integer Jacobi identities") {
  for (RootKind k : {RootKind::D4, RootKind::E6, RootKind::E8}) {
    ValidationReport rep = RootSystemTable::load(k).validate();
    for (const auto& f : rep.failures) MESSAGE(f);
    CHECK(rep.pass);
  }
  CHECK(RootSystemTable::load(RootKind::D4).validate().entry_count == 16);
  CHECK(RootSystemTable::load(RootKind::E6).validate().entry_count == 30);
  CHECK(RootSystemTable::load(RootKind::E8).validate().entry_count == 105);
}

TEST_CASE("commutator lookups match the tables") {
  const auto& d4 = RootSystemTable::get(RootKind::D4);
  auto r = d4.commutator(1, 3);
  REQUIRE(r);
  CHECK(r->first == 5);
  CHECK(r->second == 1);
  // antisymmetric closure
  auto ri = d4.commutator(3, 1);
  REQUIRE(ri);
  CHECK(ri->first == 5);
  CHECK(ri->second == -1);
  // truncation: results above the height bound vanish
  CHECK_FALSE(d4.commutator(1, 10));                // -> root 11, height 4
  CHECK(d4.commutator(1, 10, /*truncate=*/false));  // still in the table

  const auto& e6 = RootSystemTable::get(RootKind::E6);
  auto s = e6.commutator(4, 7);
  REQUIRE(s);
  CHECK(s->first == 12);
  CHECK(s->second == -1);
  CHECK_FALSE(e6.commutator(1, 2));  // alpha_1 + alpha_2 is not a root

  const auto& e8 = RootSystemTable::get(RootKind::E8);
  auto t = e8.commutator(12, 23);
  REQUIRE(t);
  CHECK(t->first == 37);
  CHECK(t->second == -1);
}

TEST_CASE("central roots") {
  CHECK(RootSystemTable::get(RootKind::D4).central_roots() ==
        std::vector<int>{8, 9, 10});
  CHECK(RootSystemTable::get(RootKind::E6).central_roots() ==
        std::vector<int>{17, 18, 19, 20, 21});
  CHECK(RootSystemTable::get(RootKind::E8).central_roots() ==
        std::vector<int>{37, 38, 39, 40, 41, 42, 43});
}

TEST_CASE("bad primes from the highest root") {
  CHECK(RootSystemTable::get(RootKind::D4).bad_primes() == std::set<int>{2});
  CHECK(RootSystemTable::get(RootKind::E6).bad_primes() == std::set<int>{2, 3});
  CHECK(RootSystemTable::get(RootKind::E8).bad_primes() ==
        std::set<int>{2, 3, 5});
}

TEST_CASE("normal-form order quirks") {
  const auto& d4 = RootSystemTable::get(RootKind::D4);
  CHECK(d4.position(4) < d4.position(3));  // x4 before x3
  const auto& e6 = RootSystemTable::get(RootKind::E6);
  CHECK(e6.position(2) == 0);  // x2 first
  CHECK(e6.position(1) == 1);
}

TEST_CASE("torus weights") {
  const auto& d4 = RootSystemTable::get(RootKind::D4);
  FieldSpec F = FieldSpec::conway(2, 2);
  std::vector<FqElem> ones(4, F.one());
  CHECK(torus_weight(d4, F, 12, ones) == F.one());
  // root 5 = alpha_1 + alpha_3: weight is t1 * t3
  FqElem a = F.gen(), b = F.add(F.gen(), F.one());
  std::vector<FqElem> t = {a, F.one(), b, F.one()};
  CHECK(torus_weight(d4, F, 5, t) == F.mul(a, b));
  t[0] = F.zero();
  CHECK_THROWS_AS(torus_weight(d4, F, 5, t), MathError);

  // E6 root 19 has coefficients 011110
  const auto& e6 = RootSystemTable::get(RootKind::E6);
  FieldSpec F3 = FieldSpec::conway(3, 1);
  FqElem g = F3.from_int(2);
  std::vector<FqElem> t6 = {F3.one(), g, F3.one(), F3.one(), F3.one(), F3.one()};
  CHECK(torus_weight(e6, F3, 19, t6) == g);
}

TEST_CASE("designated mutations break validation") {
  // the structural net the mutation suite relies on: flipping these specific
  // signs must already fail validate()
  for (auto [kind, entry] : {std::pair{RootKind::D4, 0},
                             {RootKind::E6, 0},
                             {RootKind::E6, 6},
                             {RootKind::E6, 29},
                             {RootKind::E8, 0},
                             {RootKind::E8, 52},
                             {RootKind::E8, 104}}) {
    RootSystemTable mut = RootSystemTable::load(kind).mutated(entry);
    CHECK_FALSE(mut.validate().pass);
  }
}

TEST_CASE("json export round trip") {
  RootSystemTable t = RootSystemTable::load(RootKind::E6);
  RootSystemTable back = RootSystemTable::from_json(t.to_json());
  CHECK(back.validate().pass);
  CHECK(back.root_count() == 21);
  auto r = back.commutator(5, 12);
  REQUIRE(r);
  CHECK(r->first == 18);
  CHECK(r->second == -1);
}
