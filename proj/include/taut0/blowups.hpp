#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "taut0/covers.hpp"

namespace taut0::blowups {

// One step of the embedded resolution of the plane curve germ z1^e = z2^f:
// the exceptional multiplicity of the step is min(e, f).
struct BlowupStep {
  std::int64_t e = 0;
  std::int64_t f = 0;
  std::int64_t mult = 0;  // min(e, f)

  friend bool operator==(const BlowupStep&, const BlowupStep&) = default;
};

struct BlowupTrace {
  std::vector<BlowupStep> steps;  // e >= f in every step; final step has f <= 1
  std::int64_t ms_total = 0;      // sum of mult over steps with mult >= 2
};

// Multiplicity sum of the resolution. Characterized by
//   ms(e, f) = ms(f, e),  ms(e, 0) = ms(e, 1) = 0,
//   ms(e, f) = f + ms(e - f, f) for e >= f >= 2.
// Computed by a division fast path; blowup_trace walks the subtractive
// descent step by step and must agree (tested against this function).
std::int64_t ms(std::int64_t e, std::int64_t f);

// Full subtractive descent. Steps are recorded with e >= f. Traces longer
// than an internal step cap (10^6) raise LimitExceeded; ms() itself has no
// such cap. Errors: DomainError (negative input).
BlowupTrace blowup_trace(std::int64_t e, std::int64_t f);

// r(e, f) = gcd(e, f) if gcd > 1, else 3; the sharp constant in
// ms(e, f) <= e + f - r(e, f). DomainError on (1, 1) and nonpositive input.
std::int64_t r_bound(std::int64_t e, std::int64_t f);

// First Chern number of the resolved cyclic-cover surface:
//   3k - ms(k, a) - ms(k, b) - ms(k, c).
// When a residue is 1 its ms term vanishes, giving the totally ramified
// formula 3k - ms(k, b) - ms(k, c).
std::int64_t c1_after_desingularization(const covers::CoverData& c);

enum class Verdict { TautologicalCertified, Inconclusive };

inline const char* verdict_name(Verdict v) {
  return v == Verdict::TautologicalCertified ? "TautologicalCertified" : "Inconclusive";
}

// Decision data for one cover datum. vdim = c1 + genus - 1 always holds.
// TautologicalCertified needs c1 > 0, n_ram <= vdim and a stable pointed
// curve (2 genus - 2 + n_ram > 0); Inconclusive asserts nothing.
struct TautDecision {
  std::int64_t c1 = 0;
  std::int64_t genus = 0;
  std::int64_t vdim = 0;
  std::int64_t n_ram = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<covers::CoverData> witness;
};

// Decides via the normalized representative when one exists; otherwise
// scans the whole unit orbit for a certifying representative. The reported
// numbers belong to the witness if certified, else to the input datum.
TautDecision decide_tautological(const covers::CoverData& c);

struct InequalityCase {
  std::int64_t k = 0, b = 0, c = 0;
  std::int64_t c1 = 0, genus = 0, vdim = 0, n_ram = 0, rhs = 0;
};

struct InequalityReport {
  std::int64_t k_max = 0;
  std::int64_t cases_checked = 0;
  std::vector<InequalityCase> violations;     // vdim - n_ram < rhs
  std::vector<InequalityCase> c1_violations;  // c1 < 1

  bool pass() const { return violations.empty() && c1_violations.empty(); }
};

// Scans every normalized datum (1, b, c), b + c = k - 1, for 2 <= k <= k_max
// and checks vdim - n >= g - 1 + (r(k,b) - gcd(k,b)) + (r(k,c) - gcd(k,c))
// together with c1 >= 1. Errors: DomainError (k_max < 2).
InequalityReport verify_decision_inequality(std::int64_t k_max, int jobs = 1);

struct MsAxiomViolation {
  std::int64_t e = 0, f = 0;
  std::int64_t lhs = 0, rhs = 0;
  const char* axiom = "";
};

struct MsAxiomReport {
  std::int64_t e_max = 0;
  std::int64_t cases_checked = 0;
  std::vector<MsAxiomViolation> violations;

  bool pass() const { return violations.empty(); }
};

// Symmetry, the base values at f <= 1, and the subtraction recursion for
// e >= f >= 2, over 0 <= f <= e <= e_max.
MsAxiomReport verify_ms_axioms(std::int64_t e_max);

struct MsBoundViolation {
  std::int64_t e = 0, f = 0;
  std::int64_t ms_value = 0, bound = 0;
};

struct MsBoundReport {
  std::int64_t e_max = 0;
  std::int64_t cases_checked = 0;
  std::vector<MsBoundViolation> violations;

  bool pass() const { return violations.empty(); }
};

// ms(e, f) <= e + f - r_bound(e, f) over 1 <= f <= e <= e_max, (e, f) != (1, 1).
MsBoundReport verify_ms_bound(std::int64_t e_max);

}  // namespace taut0::blowups
