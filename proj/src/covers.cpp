#include "taut0/covers.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "taut0/checked.hpp"
#include "taut0/errors.hpp"

namespace taut0::covers {

namespace {

// Residue of x in {0, ..., k-1}; safe for any int64 x.
std::int64_t reduce_mod(std::int64_t x, std::int64_t k) {
  std::int64_t r = x % k;
  return r < 0 ? r + k : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t k) {
  // Operands are already in {0, ..., k-1}; the product is checked, not wrapped.
  return reduce_mod(checked_mul(a, b), k);
}

}  // namespace

CoverData validate(std::int64_t k, std::array<std::int64_t, 3> mono) {
  if (k < 2) fail(Errc::InvalidDegree, "cover degree must be at least 2, got " + std::to_string(k));
  std::array<std::int64_t, 3> r{};
  for (int i = 0; i < 3; ++i) {
    r[i] = reduce_mod(mono[i], k);
    if (r[i] == 0)
      fail(Errc::ZeroMonodromy, "monodromy entry " + std::to_string(i) + " is 0 mod " + std::to_string(k));
  }
  if ((r[0] + r[1] + r[2]) % k != 0)
    fail(Errc::SumNotZero, "monodromy residues must sum to 0 mod " + std::to_string(k));
  return CoverData{k, r};
}

CoverInvariants invariants(const CoverData& c) {
  CoverInvariants inv;
  for (int i = 0; i < 3; ++i) inv.ram_counts[i] = std::gcd(c.k, c.mono[i]);
  inv.n_ram = inv.ram_counts[0] + inv.ram_counts[1] + inv.ram_counts[2];
  // 2 - 2g = -k + n_ram, and k - n_ram is even for every valid datum.
  std::int64_t chi_defect = c.k - inv.n_ram;
  if (chi_defect % 2 != 0)
    throw std::logic_error("odd Euler characteristic defect for a cyclic cover");
  inv.genus = chi_defect / 2 + 1;
  inv.totally_ramified =
      inv.ram_counts[0] == 1 || inv.ram_counts[1] == 1 || inv.ram_counts[2] == 1;
  return inv;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t k) {
  if (k < 2) fail(Errc::DomainError, "modulus must be at least 2");
  a = ((a % k) + k) % k;
  // Extended Euclid on (a, k); invariant: r = s*a + t*k for the tracked rows.
  std::int64_t r0 = a, r1 = k, s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    std::int64_t s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1)
    fail(Errc::DomainError, "no inverse: gcd(" + std::to_string(a) + ", " + std::to_string(k) + ") != 1");
  return ((s0 % k) + k) % k;
}

std::optional<CoverData> normalize_total_ramification(const CoverData& c) {
  std::optional<CoverData> best;
  for (int i = 0; i < 3; ++i) {
    if (std::gcd(c.k, c.mono[i]) != 1) continue;
    std::int64_t u = mod_inverse(c.mono[i], c.k);
    std::array<std::int64_t, 2> rest{};
    int w = 0;
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      rest[w++] = mul_mod(u, c.mono[j], c.k);
    }
    if (rest[0] > rest[1]) std::swap(rest[0], rest[1]);
    CoverData cand{c.k, {1, rest[0], rest[1]}};
    if (!best || cand < *best) best = cand;
  }
  return best;
}

std::vector<CoverData> unit_orbit(const CoverData& c) {
  std::vector<CoverData> orbit;
  for (std::int64_t u = 1; u < c.k; ++u) {
    if (std::gcd(u, c.k) != 1) continue;
    orbit.push_back(CoverData{
        c.k,
        {mul_mod(u, c.mono[0], c.k), mul_mod(u, c.mono[1], c.k), mul_mod(u, c.mono[2], c.k)}});
  }
  return orbit;
}

}  // namespace taut0::covers
