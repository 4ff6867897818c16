// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Every tolerance is exact (integer/cyclotomic arithmetic); the time limits
// are asserted against wall-clock measurements.

#include <chrono>
#include <cstdio>
#include <iostream>

#include "unichar/verify.hpp"

using namespace unichar;

namespace {

int failures = 0;

double run_ms(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  auto d = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double, std::milli>(d).count();
}

void line(const std::string& id, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("[%s] %s: %s\n", pass ? "PASS" : "FAIL", id.c_str(),
              detail.c_str());
  std::fflush(stdout);
}

void report_failures(const SuiteReport& rep) {
  for (const Check& c : rep.checks)
    if (!c.pass)
      std::printf("         failed check %s: %s (%s)\n", c.id.c_str(),
                  c.claim.c_str(), c.witness.c_str());
}

}  // namespace

int main() {
  SuiteOptions opt;

  // AC1: field propositions, exhaustive over all twelve (p, f) pairs
  {
    bool pass = true;
    double ms = run_ms([&] {
      for (int p : {2, 3, 5})
        for (int f = 1; f <= 4; ++f) {
          SuiteReport rep = verify_prop_fq(p, f);
          if (!rep.pass()) {
            pass = false;
            report_failures(rep);
          }
        }
    });
    pass = pass && ms < 10000;
    line("AC1", pass,
         "field propositions exhaustive for p in {2,3,5}, f in 1..4 (" +
             std::to_string(static_cast<long>(ms)) + " ms, budget 10 s)");
  }

  // AC2: D4 at q=2, full brute force against the closed forms
  {
    SuiteReport rep;
    double ms = run_ms([&] { rep = suite_d4(2, opt); });
    bool pass = rep.pass() && ms < 60000;
    if (!rep.pass()) report_failures(rep);
    line("AC2", pass,
         "D4 q=2: census {8:1, 4:4}, exact norms and orthogonality, "
         "pointwise closed-form equality on all 1024 elements (" +
             std::to_string(static_cast<long>(ms)) + " ms, budget 1 min)");
  }

  // AC3: D4 at q=4, full exact norm plus seeded sampling
  {
    SuiteReport rep;
    double ms = run_ms([&] { rep = suite_d4(4, opt); });
    bool pass = rep.pass() && ms < 300000;
    if (!rep.pass()) report_failures(rep);
    line("AC3", pass,
         "D4 q=4: exact norm 1 over all 4^10 elements, closed form vs brute "
         "force on 10^4 seeded points (" +
             std::to_string(static_cast<long>(ms)) + " ms, budget 5 min)");
  }

  // AC4: E6 tower at q=3
  {
    SuiteReport rep;
    double ms = run_ms([&] { rep = suite_e6(3, opt); });
    bool pass = rep.pass() && ms < 300000;
    if (!rep.pass()) report_failures(rep);
    line("AC4", pass,
         "E6 q=3: tower stabilizers q^3 and q, B-invariance, extension "
         "strata, census {2187:8, 729:9}, totals 256/288 over 32 central "
         "tuples (" +
             std::to_string(static_cast<long>(ms)) + " ms, budget 5 min)");
  }

  // AC5: E8 tower at q=5
  {
    SuiteReport rep;
    double ms = run_ms([&] { rep = suite_e8(5, opt); });
    bool pass = rep.pass() && ms < 1800000;
    if (!rep.pass()) report_failures(rep);
    line("AC5", pass,
         "E8 q=5: curve closures, tower stabilizers q^10/q^5/q^2/q, census "
         "{q^16/5: 25}, strata 500/100/20, fourth stratum measured = 4 with "
         "the stated 3 vs 2.4 discrepancy flagged, torus transitive on 16384 "
         "tuples (" +
             std::to_string(static_cast<long>(ms)) + " ms, budget 30 min)");
  }

  // AC6: the induction-bijectivity lemma, brute-force certified
  {
    SuiteReport rep;
    double ms = run_ms([&] { rep = verify_reduction_lemma(opt); });
    bool pass = rep.pass();
    if (!pass) report_failures(rep);
    line("AC6", pass,
         "reduction lemma certified exactly on the D4 q=2 instances: "
         "bijectivity, norm 1, surjectivity, mutant detected (" +
             std::to_string(static_cast<long>(ms)) + " ms)");
  }

  // AC7: property suites
  {
    SuiteReport rep;
    double ms = run_ms([&] { rep = suite_properties(opt); });
    bool pass = rep.pass() && ms < 120000;
    if (!rep.pass()) report_failures(rep);
    line("AC7", pass,
         "associativity (random + exhaustive generating set), inverses, "
         "action composition, domain homomorphisms, orbit-stabilizer "
         "integrality (" +
             std::to_string(static_cast<long>(ms)) + " ms, budget 2 min)");
  }

  // AC8: designated table mutations are detected
  {
    SuiteReport rep;
    double ms = run_ms([&] { rep = suite_mutation(opt); });
    bool pass = rep.pass();
    if (!pass) report_failures(rep);
    line("AC8", pass,
         "three designated single-sign mutations per kind all detected (" +
             std::to_string(static_cast<long>(ms)) + " ms)");
  }

  if (failures == 0)
    std::printf("acceptance: all 8 criteria PASS\n");
  else
    std::printf("acceptance: %d criterion(s) FAILED\n", failures);
  return failures == 0 ? 0 : 1;
}
