#include <doctest.h>

#include "unichar/verify.hpp"

using namespace unichar;

TEST_CASE("field propositions at each characteristic") {
  CHECK(verify_prop_fq(2, 2).pass());
  CHECK(verify_prop_fq(3, 1).pass());
  CHECK(verify_prop_fq(5, 2).pass());
}

TEST_CASE("prop report carries the subgroup count") {
  SuiteReport rep = verify_prop_fq(2, 2);
  bool found = false;
  for (const Check& c : rep.checks)
    if (c.id == "prop.d") {
      found = true;
      CHECK(c.measured == "3");  // (q-1)/(p-1) = 3 for q = 4
    }
  CHECK(found);
}

TEST_CASE("census formulas for D4 at q=2") {
  CensusResult c = count_family(RootKind::D4, 2);
  CHECK(c.report.pass());
  REQUIRE(c.rows.size() == 2);
  CHECK(c.rows[0].total == 1);
  CHECK(c.rows[1].total == 4);
  CHECK(c.rows[1].matches_formula);
  // serializers don't throw and carry the rows
  CHECK(census_to_csv(c).find("q^3/2") != std::string::npos);
  CHECK(census_to_json(c).find("\"q\": 2") != std::string::npos);
}

TEST_CASE("good-prime control rejects the bad characteristic") {
  CHECK_THROWS_AS(suite_good_prime(RootKind::E6, 3, 1), MathError);
  CHECK_THROWS_AS(suite_good_prime(RootKind::D4, 3, 1), MathError);
}

TEST_CASE("good-prime control run for E6 at q=2") {
  SuiteReport rep = suite_good_prime(RootKind::E6, 2, 1);
  CHECK(rep.pass());
}

TEST_CASE("suite reports serialize") {
  SuiteReport rep = verify_prop_fq(3, 1);
  std::string j = rep.to_json();
  CHECK(j.find("\"suite\"") != std::string::npos);
  CHECK(rep.to_text().find("PASS") != std::string::npos);
}
