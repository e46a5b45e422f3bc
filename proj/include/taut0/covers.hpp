#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

namespace taut0::covers {

// Monodromy datum of a connected-or-not cyclic degree-k cover of the
// projective line branched over three points 0, 1, infinity: nonzero
// residues (a, b, c) mod k with a + b + c = 0 in Z/k.
struct CoverData {
  std::int64_t k = 0;
  std::array<std::int64_t, 3> mono{};

  friend bool operator==(const CoverData&, const CoverData&) = default;
  friend auto operator<=>(const CoverData&, const CoverData&) = default;
};

struct CoverInvariants {
  std::int64_t genus = 0;
  std::array<std::int64_t, 3> ram_counts{};  // gcd(k, a), gcd(k, b), gcd(k, c)
  std::int64_t n_ram = 0;                    // total points over the branch locus
  bool totally_ramified = false;             // some branch point has one preimage
};

// Reduces arbitrary integers into {1, ..., k-1} and checks the residue sum.
// Errors: InvalidDegree (k < 2), ZeroMonodromy, SumNotZero.
CoverData validate(std::int64_t k, std::array<std::int64_t, 3> mono);

// Genus from the Euler-characteristic count 2 - 2g = -k + sum of gcds.
// Valid data always yield genus >= 1, so this never fails.
CoverInvariants invariants(const CoverData& c);

// Least representative (1, b, c), b <= c, of the unit orbit among those with
// first residue 1, if any residue is coprime to k. A datum with no coprime
// residue has no totally ramified representative; that is a regular outcome,
// reported as nullopt, not an error.
std::optional<CoverData> normalize_total_ramification(const CoverData& c);

// Orbit of the datum under the unit group action u . (a, b, c) = (ua, ub, uc),
// listed for u = 1, 2, ... ascending; exactly phi(k) entries, repeats kept.
std::vector<CoverData> unit_orbit(const CoverData& c);

// Inverse of a mod k for gcd(a, k) = 1; DomainError otherwise.
std::int64_t mod_inverse(std::int64_t a, std::int64_t k);

}  // namespace taut0::covers
