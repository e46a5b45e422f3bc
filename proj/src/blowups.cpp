#include "taut0/blowups.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "taut0/checked.hpp"
#include "taut0/errors.hpp"
#include "taut0/parallel.hpp"

namespace taut0::blowups {

namespace {

constexpr std::int64_t kTraceStepCap = 1'000'000;

void require_nonnegative(std::int64_t e, std::int64_t f) {
  if (e < 0 || f < 0)
    fail(Errc::DomainError, "multiplicities must be nonnegative, got (" +
                                std::to_string(e) + ", " + std::to_string(f) + ")");
}

}  // namespace

std::int64_t ms(std::int64_t e, std::int64_t f) {
  require_nonnegative(e, f);
  std::int64_t hi = std::max(e, f), lo = std::min(e, f);
  std::int64_t total = 0;
  // Each division step batches hi/lo subtractive steps of multiplicity lo.
  while (lo >= 2) {
    std::int64_t q = hi / lo, r = hi % lo;
    total = checked_add(total, checked_mul(q, lo));
    hi = lo;
    lo = r;
  }
  return total;
}

BlowupTrace blowup_trace(std::int64_t e, std::int64_t f) {
  require_nonnegative(e, f);
  BlowupTrace trace;
  std::int64_t hi = std::max(e, f), lo = std::min(e, f);
  while (lo >= 2) {
    if (static_cast<std::int64_t>(trace.steps.size()) >= kTraceStepCap)
      fail(Errc::LimitExceeded, "blowup trace exceeds " + std::to_string(kTraceStepCap) + " steps");
    trace.steps.push_back(BlowupStep{hi, lo, lo});
    trace.ms_total = checked_add(trace.ms_total, lo);
    std::int64_t next = hi - lo;
    hi = std::max(next, lo);
    lo = std::min(next, lo);
  }
  // Terminal pair: the germ is already resolved, multiplicity <= 1.
  trace.steps.push_back(BlowupStep{hi, lo, lo});
  return trace;
}

std::int64_t r_bound(std::int64_t e, std::int64_t f) {
  if (e < 1 || f < 1)
    fail(Errc::DomainError, "r_bound needs positive multiplicities");
  if (e == 1 && f == 1)
    fail(Errc::DomainError, "r_bound is undefined at (1, 1)");
  std::int64_t d = std::gcd(e, f);
  return d > 1 ? d : 3;
}

std::int64_t c1_after_desingularization(const covers::CoverData& c) {
  std::int64_t total = checked_mul(3, c.k);
  for (int i = 0; i < 3; ++i) total = checked_sub(total, ms(c.k, c.mono[i]));
  return total;
}

namespace {

TautDecision evaluate(const covers::CoverData& c) {
  covers::CoverInvariants inv = covers::invariants(c);
  TautDecision d;
  d.c1 = c1_after_desingularization(c);
  d.genus = inv.genus;
  d.vdim = checked_sub(checked_add(d.c1, d.genus), 1);
  d.n_ram = inv.n_ram;
  bool stable = 2 * d.genus - 2 + d.n_ram > 0;
  d.verdict = (d.c1 > 0 && d.n_ram <= d.vdim && stable)
                  ? Verdict::TautologicalCertified
                  : Verdict::Inconclusive;
  return d;
}

}  // namespace

TautDecision decide_tautological(const covers::CoverData& c) {
  if (auto normalized = covers::normalize_total_ramification(c)) {
    TautDecision d = evaluate(*normalized);
    d.witness = *normalized;
    return d;
  }
  // No totally ramified representative: search the orbit for any certificate.
  for (const covers::CoverData& rep : covers::unit_orbit(c)) {
    TautDecision d = evaluate(rep);
    if (d.verdict == Verdict::TautologicalCertified) {
      d.witness = rep;
      return d;
    }
  }
  TautDecision d = evaluate(c);
  d.witness = std::nullopt;
  return d;
}

InequalityReport verify_decision_inequality(std::int64_t k_max, int jobs) {
  if (k_max < 2) fail(Errc::DomainError, "k_max must be at least 2");
  InequalityReport report;
  report.k_max = k_max;

  struct Chunk {
    std::int64_t cases = 0;
    std::vector<InequalityCase> violations, c1_violations;
  };
  int workers = jobs < 1 ? 1 : jobs;
  std::vector<Chunk> chunks(std::min<std::int64_t>(workers, k_max - 1));

  parallel_chunks(2, k_max + 1, workers, [&chunks](int w, std::int64_t lo, std::int64_t hi) {
    Chunk& chunk = chunks[w];
    for (std::int64_t k = lo; k < hi; ++k) {
      for (std::int64_t b = 1; b <= k - 2; ++b) {
        std::int64_t c = k - 1 - b;
        if (c < 1) continue;
        covers::CoverData datum{k, {1, b, c}};
        covers::CoverInvariants inv = covers::invariants(datum);
        InequalityCase row;
        row.k = k;
        row.b = b;
        row.c = c;
        row.c1 = c1_after_desingularization(datum);
        row.genus = inv.genus;
        row.vdim = row.c1 + row.genus - 1;
        row.n_ram = inv.n_ram;
        row.rhs = row.genus - 1 + (r_bound(k, b) - std::gcd(k, b)) +
                  (r_bound(k, c) - std::gcd(k, c));
        ++chunk.cases;
        if (row.vdim - row.n_ram < row.rhs) chunk.violations.push_back(row);
        if (row.c1 < 1) chunk.c1_violations.push_back(row);
      }
    }
  });

  for (const Chunk& chunk : chunks) {
    report.cases_checked += chunk.cases;
    report.violations.insert(report.violations.end(), chunk.violations.begin(),
                             chunk.violations.end());
    report.c1_violations.insert(report.c1_violations.end(), chunk.c1_violations.begin(),
                                chunk.c1_violations.end());
  }
  return report;
}

MsAxiomReport verify_ms_axioms(std::int64_t e_max) {
  if (e_max < 0) fail(Errc::DomainError, "e_max must be nonnegative");
  MsAxiomReport report;
  report.e_max = e_max;
  for (std::int64_t e = 0; e <= e_max; ++e) {
    for (std::int64_t f = 0; f <= e; ++f) {
      ++report.cases_checked;
      std::int64_t v = ms(e, f);
      if (ms(f, e) != v)
        report.violations.push_back({e, f, v, ms(f, e), "symmetry"});
      if (f <= 1 && v != 0)
        report.violations.push_back({e, f, v, 0, "base"});
      if (f >= 2) {
        std::int64_t rhs = f + ms(e - f, f);
        if (v != rhs) report.violations.push_back({e, f, v, rhs, "recursion"});
      }
    }
  }
  return report;
}

MsBoundReport verify_ms_bound(std::int64_t e_max) {
  if (e_max < 1) fail(Errc::DomainError, "e_max must be at least 1");
  MsBoundReport report;
  report.e_max = e_max;
  for (std::int64_t e = 1; e <= e_max; ++e) {
    for (std::int64_t f = 1; f <= e; ++f) {
      if (e == 1 && f == 1) continue;
      ++report.cases_checked;
      std::int64_t v = ms(e, f);
      std::int64_t bound = e + f - r_bound(e, f);
      if (v > bound) report.violations.push_back({e, f, v, bound});
    }
  }
  return report;
}

}  // namespace taut0::blowups
