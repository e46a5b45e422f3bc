#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "taut0/blowups.hpp"
#include "taut0/covers.hpp"
#include "taut0/errors.hpp"

using taut0::Errc;
using taut0::Error;
using namespace taut0::blowups;
using taut0::covers::CoverData;
using taut0::covers::validate;

namespace {

taut0::Errc thrown_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a taut0::Error");
  return Errc::DomainError;
}

}  // namespace

TEST_CASE("ms reference values") {
  for (std::int64_t e = 0; e <= 300; ++e) {
    CHECK(ms(e, 0) == 0);
    CHECK(ms(e, 1) == 0);
  }
  CHECK(ms(30, 25) == 50);
  CHECK(ms(25, 30) == 50);
  CHECK(ms(30, 3) == 30);
  CHECK(ms(30, 2) == 30);
  CHECK(ms(5, 3) == 5);
  CHECK(ms(2, 2) == 2);
  CHECK(ms(3, 2) == 2);
}

TEST_CASE("ms axioms hold up to 300") {
  MsAxiomReport report = verify_ms_axioms(300);
  CHECK(report.pass());
  CHECK(report.cases_checked == 301 * 302 / 2);
}

TEST_CASE("ms bound with the sharp constant holds up to 200") {
  MsBoundReport report = verify_ms_bound(200);
  CHECK(report.pass());
  // pairs 1 <= f <= e <= 200 minus the excluded corner
  CHECK(report.cases_checked == 200 * 201 / 2 - 1);
}

TEST_CASE("ms rejects negative input") {
  CHECK(thrown_code([] { ms(-1, 2); }) == Errc::DomainError);
  CHECK(thrown_code([] { blowup_trace(3, -2); }) == Errc::DomainError);
}

TEST_CASE("blowup trace walks the subtractive descent") {
  BlowupTrace trace = blowup_trace(30, 25);
  REQUIRE(!trace.steps.empty());
  CHECK(trace.steps.front() == BlowupStep{30, 25, 25});
  CHECK(trace.ms_total == 50);
  CHECK(trace.steps.back().mult <= 1);
  for (const BlowupStep& step : trace.steps) {
    CHECK(step.e >= step.f);
    CHECK(step.mult == step.f);
  }
}

TEST_CASE("trace totals and step counts agree with the plain Euclidean descent") {
  for (std::int64_t e = 0; e <= 120; ++e) {
    for (std::int64_t f = 0; f <= e; ++f) {
      BlowupTrace trace = blowup_trace(e, f);
      CHECK(trace.ms_total == ms(e, f));
      std::int64_t active = std::count_if(trace.steps.begin(), trace.steps.end(),
                                          [](const BlowupStep& s) { return s.mult >= 2; });
      CHECK(active == oracles::subtractive_step_count(e, f));
      // one terminal step with multiplicity <= 1 closes every trace
      CHECK(static_cast<std::int64_t>(trace.steps.size()) == active + 1);
    }
  }
}

TEST_CASE("r_bound values and domain") {
  CHECK(r_bound(30, 25) == 5);
  CHECK(r_bound(5, 3) == 3);
  CHECK(r_bound(4, 2) == 2);
  CHECK(thrown_code([] { r_bound(1, 1); }) == Errc::DomainError);
  CHECK(thrown_code([] { r_bound(0, 3); }) == Errc::DomainError);
}

TEST_CASE("c1 after desingularization") {
  CHECK(c1_after_desingularization(validate(5, {1, 1, 3})) == 10);
  CHECK(c1_after_desingularization(validate(30, {2, 3, 25})) == -20);
  CHECK(c1_after_desingularization(validate(3, {1, 1, 1})) == 9);
}

TEST_CASE("decide_tautological certifies the totally ramified examples") {
  TautDecision five = decide_tautological(validate(5, {1, 1, 3}));
  CHECK(five.verdict == Verdict::TautologicalCertified);
  CHECK(five.c1 == 10);
  CHECK(five.genus == 2);
  CHECK(five.vdim == 11);
  CHECK(five.n_ram == 3);
  REQUIRE(five.witness.has_value());
  CHECK(*five.witness == validate(5, {1, 1, 3}));

  TautDecision three = decide_tautological(validate(3, {1, 1, 1}));
  CHECK(three.verdict == Verdict::TautologicalCertified);
  CHECK(three.genus == 1);
  CHECK(three.vdim == 9);
}

TEST_CASE("decide_tautological is inconclusive on the k=30 datum") {
  CoverData c = validate(30, {2, 3, 25});
  TautDecision d = decide_tautological(c);
  CHECK(d.verdict == Verdict::Inconclusive);
  CHECK(d.c1 == -20);
  CHECK(d.genus == 11);
  CHECK(d.n_ram == 10);
  CHECK_FALSE(d.witness.has_value());

  // no unit twist rescues it: every representative has nonpositive c1
  auto orbit = taut0::covers::unit_orbit(c);
  CHECK(orbit.size() == 8);
  for (const CoverData& rep : orbit) CHECK(c1_after_desingularization(rep) <= 0);
}

TEST_CASE("vdim bookkeeping and witness consistency on small covers") {
  for (std::int64_t k = 2; k <= 30; ++k) {
    for (std::int64_t a = 1; a < k; ++a) {
      for (std::int64_t b = a; b < k; ++b) {
        std::int64_t c = (2 * k - a - b) % k;
        if (c == 0) continue;
        TautDecision d = decide_tautological(CoverData{k, {a, b, c}});
        CHECK(d.vdim == d.c1 + d.genus - 1);
        if (d.verdict == Verdict::TautologicalCertified) {
          REQUIRE(d.witness.has_value());
          CHECK(d.c1 > 0);
          CHECK(d.n_ram <= d.vdim);
          CHECK(2 * d.genus - 2 + d.n_ram > 0);
        }
      }
    }
  }
}

TEST_CASE("the verdict is a unit-orbit invariant") {
  for (std::int64_t k = 2; k <= 24; ++k) {
    for (std::int64_t a = 1; a < k; ++a) {
      for (std::int64_t b = a; b < k; ++b) {
        std::int64_t c = (2 * k - a - b) % k;
        if (c == 0) continue;
        CoverData datum{k, {a, b, c}};
        Verdict base = decide_tautological(datum).verdict;
        for (const CoverData& rep : taut0::covers::unit_orbit(datum))
          CHECK(decide_tautological(rep).verdict == base);
      }
    }
  }
}

TEST_CASE("decision inequality and positive c1 hold for all normalized data up to k=60") {
  InequalityReport report = verify_decision_inequality(60);
  CHECK(report.pass());
  CHECK(report.violations.empty());
  CHECK(report.c1_violations.empty());
  std::int64_t expected_cases = 0;
  for (std::int64_t k = 2; k <= 60; ++k) expected_cases += k - 2;  // b in 1..k-2
  CHECK(report.cases_checked == expected_cases);
}

TEST_CASE("parallel inequality scan matches the sequential one") {
  InequalityReport seq = verify_decision_inequality(45, 1);
  InequalityReport par = verify_decision_inequality(45, 4);
  CHECK(seq.cases_checked == par.cases_checked);
  CHECK(seq.pass() == par.pass());
  CHECK(seq.violations.size() == par.violations.size());
}
