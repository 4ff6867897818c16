#include <doctest.h>

#include "unichar/fq.hpp"

using namespace unichar;

TEST_CASE("F_4 arithmetic against the hand table") {
  FieldSpec F = FieldSpec::conway(2, 2);  // x^2 + x + 1
  FqElem w = F.gen();
  CHECK(F.q() == 4);
  CHECK(F.add(w, F.zero()) == w);
  // w * w = w + 1
  CHECK(F.mul(w, w) == F.add(w, F.one()));
  CHECK(F.mul(w, F.inv(w)) == F.one());
  CHECK_THROWS_AS(F.inv(F.zero()), MathError);
}

TEST_CASE("multiplicative order q-1 in F_9") {
  FieldSpec F = FieldSpec::conway(3, 2);
  for (long i = 1; i < F.q(); ++i)
    CHECK(F.pow(F.element(i), 8) == F.one());
}

TEST_CASE("trace values") {
  FieldSpec F4 = FieldSpec::conway(2, 2);
  CHECK(F4.trace(F4.zero()) == 0);
  CHECK(F4.trace(F4.one()) == 0);
  CHECK(F4.trace(F4.gen()) == 1);  // w + w^2 = 1

  // F_9 with modulus x^2 + 1: x + x^3 = 0
  FieldSpec F9(3, 2, {1, 0, 1});
  CHECK(F9.trace(F9.gen()) == 0);

  // prime field: trace is the identity
  FieldSpec F2 = FieldSpec::conway(2, 1);
  CHECK(F2.phi_exponent(F2.one(), F2.one()) == 1);
}

TEST_CASE("phi_a basics") {
  FieldSpec F = FieldSpec::conway(2, 2);
  CHECK(F.phi_exponent(F.one(), F.zero()) == 0);
  CHECK(F.phi_exponent(F.one(), F.gen()) == 1);
  // phi_a nontrivial iff a != 0
  for (long ai = 0; ai < F.q(); ++ai) {
    FqElem a = F.element(ai);
    bool nontrivial = false;
    for (long xi = 0; xi < F.q(); ++xi)
      nontrivial |= (F.phi_exponent(a, F.element(xi)) != 0);
    CHECK(nontrivial == !a.is_zero());
  }
}

TEST_CASE("T_a sets") {
  FieldSpec F3 = FieldSpec::conway(3, 1);
  auto t1 = F3.t_a_set(F3.one());
  REQUIRE(t1.size() == 1);  // t^3 - t vanishes on F_3
  CHECK(t1[0].is_zero());

  FieldSpec F4 = FieldSpec::conway(2, 2);
  auto t = F4.t_a_set(F4.one());
  REQUIRE(t.size() == 2);  // {0, 1}
  CHECK(t[0] == F4.zero());
  CHECK(t[1] == F4.one());

  CHECK(F4.t_a_set(F4.zero()).size() == 4);  // T_0 = F_q
}

TEST_CASE("find_a_phi") {
  FieldSpec F4 = FieldSpec::conway(2, 2);
  CHECK(F4.find_a_phi(F4.one()) == F4.one());  // ker phi = {0,1} = T_1
  CHECK_THROWS_AS(F4.find_a_phi(F4.zero()), MathError);

  // f = 1: T_a = {0}, so the least nonzero element works
  FieldSpec F5 = FieldSpec::conway(5, 1);
  for (long i = 1; i < 5; ++i)
    CHECK(F5.find_a_phi(F5.element(i)) == F5.one());

  // p=3, f=2: trace(b * (t^3 - a^2 t)) = 0 for all t
  FieldSpec F9 = FieldSpec::conway(3, 2);
  for (long ai = 1; ai < 9; ++ai) {
    FqElem a = F9.element(ai);
    FqElem b = F9.find_a_phi(a);
    FqElem a2 = F9.pow(a, 2);
    for (long ti = 0; ti < 9; ++ti) {
      FqElem t = F9.element(ti);
      FqElem v = F9.sub(F9.pow(t, 3), F9.mul(a2, t));
      CHECK(F9.phi_exponent(b, v) == 0);
    }
  }
}

TEST_CASE("dual basis recovery") {
  for (auto [p, f] : {std::pair{2, 4}, {3, 3}, {5, 2}}) {
    FieldSpec F = FieldSpec::conway(p, f);
    for (long bi = 0; bi < std::min(F.q(), 30L); ++bi) {
      FqElem b = F.element(bi);
      std::vector<int> traces(f);
      for (int j = 0; j < f; ++j) {
        FqElem basis;
        basis.c[j] = 1;
        traces[j] = F.phi_exponent(b, basis);
      }
      CHECK(F.from_trace_values(traces) == b);
    }
  }
}

TEST_CASE("string round trip") {
  FieldSpec F = FieldSpec::conway(5, 2);
  for (long i = 0; i < F.q(); ++i) {
    FqElem a = F.element(i);
    CHECK(F.parse(F.to_string(a)) == a);
    CHECK(F.parse(F.to_short_string(a)) == a);
  }
  CHECK_THROWS_AS(F.parse("2^2:1,1"), MathError);
}

TEST_CASE("irreducibility is enforced") {
  CHECK_THROWS_AS(FieldSpec(2, 2, {1, 0, 1}), MathError);   // x^2+1 = (x+1)^2
  CHECK_THROWS_AS(FieldSpec(2, 4, {1, 1, 1, 0, 1}), MathError);
  CHECK_NOTHROW(FieldSpec(2, 4, {1, 1, 0, 0, 1}));
}
