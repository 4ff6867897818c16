#include <doctest.h>

#include "unichar/cyclotomic.hpp"
#include "unichar/fq.hpp"

using namespace unichar;

TEST_CASE("zeta relations") {
  // zeta_5 * zeta_5^4 = 1
  CHECK(CycInt::zeta_pow(5, 1).mul(CycInt::zeta_pow(5, 4)) ==
        CycInt::integer(5, 1));
  // p=3: zeta + zeta^2 = -1
  CHECK(CycInt::zeta_pow(3, 1).add(CycInt::zeta_pow(3, 2)) ==
        CycInt::integer(3, -1));
  // p=2: zeta = -1, zeta^2 = 1
  CHECK(CycInt::zeta_pow(2, 1) == CycInt::integer(2, -1));
  CHECK(CycInt::zeta_pow(2, 1).mul(CycInt::zeta_pow(2, 1)) ==
        CycInt::integer(2, 1));
}

TEST_CASE("exponent homomorphism") {
  for (int p : {2, 3, 5})
    for (int e1 = 0; e1 < p; ++e1)
      for (int e2 = 0; e2 < p; ++e2)
        CHECK(CycInt::zeta_pow(p, e1).mul(CycInt::zeta_pow(p, e2)) ==
              CycInt::zeta_pow(p, (e1 + e2) % p));
}

TEST_CASE("conjugation") {
  CHECK(CycInt::integer(5, 7).conj() == CycInt::integer(5, 7));
  CHECK(CycInt::zeta_pow(5, 1).conj() == CycInt::zeta_pow(5, 4));
  // p=3: conj(2 + zeta) = 2 + zeta^2 = 1 - zeta
  CycInt a = CycInt::integer(3, 2).add(CycInt::zeta_pow(3, 1));
  CycInt expect = CycInt::integer(3, 1).sub(CycInt::zeta_pow(3, 1));
  CHECK(a.conj() == expect);
  // involution
  for (int p : {3, 5}) {
    CycInt x = CycInt::zeta_pow(p, 1).scale(3).add(CycInt::integer(p, -2));
    CHECK(x.conj().conj() == x);
  }
}

TEST_CASE("integer multiples") {
  CHECK(*CycInt::as_integer_multiple(CycInt::integer(3, 1024), 1024) == 1);
  CHECK(*CycInt::as_integer_multiple(CycInt::integer(3, 2048), 1024) == 2);
  CHECK_FALSE(CycInt::as_integer_multiple(CycInt::zeta_pow(3, 1), 1));
  CHECK_FALSE(CycInt::as_integer_multiple(CycInt::integer(3, 5), 2));
}

TEST_CASE("full character sum vanishes exactly") {
  for (auto [p, f] : {std::pair{2, 2}, {3, 2}, {5, 1}, {5, 2}}) {
    FieldSpec F = FieldSpec::conway(p, f);
    CycInt sum(p);
    for (long i = 0; i < F.q(); ++i)
      sum = sum.add(CycInt::zeta_pow(p, F.trace(F.element(i))));
    CHECK(sum.is_zero());
    CHECK(sum.norm_squared() == 0);
  }
}

TEST_CASE("mismatched p is rejected") {
  CHECK_THROWS_AS(CycInt::zeta_pow(3, 1).add(CycInt::zeta_pow(5, 1)), MathError);
}
