#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "taut0/covers.hpp"
#include "taut0/errors.hpp"

using taut0::Errc;
using taut0::Error;
using namespace taut0::covers;

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

// Every valid datum for a fixed k: residues a, b in {1, .., k-1} with
// c = -(a+b) mod k nonzero.
template <typename Fn>
void for_each_valid(std::int64_t k_max, Fn&& fn) {
  for (std::int64_t k = 2; k <= k_max; ++k) {
    for (std::int64_t a = 1; a < k; ++a) {
      for (std::int64_t b = 1; b < k; ++b) {
        std::int64_t c = (2 * k - a - b) % k;
        if (c == 0) continue;
        fn(CoverData{k, {a, b, c}});
      }
    }
  }
}

std::int64_t phi(std::int64_t k) {
  std::int64_t count = 0;
  for (std::int64_t u = 1; u < k; ++u)
    if (std::gcd(u, k) == 1) ++count;
  return count;
}

}  // namespace

TEST_CASE("validate accepts the canonical small data") {
  CoverData c = validate(3, {1, 1, 1});
  CHECK(c.k == 3);
  CHECK(c.mono == std::array<std::int64_t, 3>{1, 1, 1});

  CoverData big = validate(30, {2, 3, 25});
  CHECK(big.mono == std::array<std::int64_t, 3>{2, 3, 25});
}

TEST_CASE("validate reduces arbitrary integers into {1, ..., k-1}") {
  CoverData c = validate(5, {-4, 6, 3});
  CHECK(c.mono == std::array<std::int64_t, 3>{1, 1, 3});
}

TEST_CASE("validate rejects bad degrees, zero entries, bad sums") {
  CHECK(thrown_code([] { validate(1, {1, 1, 1}); }) == Errc::InvalidDegree);
  CHECK(thrown_code([] { validate(5, {0, 2, 3}); }) == Errc::ZeroMonodromy);
  CHECK(thrown_code([] { validate(5, {5, 2, 3}); }) == Errc::ZeroMonodromy);
  CHECK(thrown_code([] { validate(4, {1, 1, 1}); }) == Errc::SumNotZero);
}

TEST_CASE("invariants of the three reference covers") {
  CoverInvariants a = invariants(validate(3, {1, 1, 1}));
  CHECK(a.genus == 1);
  CHECK(a.n_ram == 3);
  CHECK(a.totally_ramified);

  CoverInvariants b = invariants(validate(5, {1, 1, 3}));
  CHECK(b.genus == 2);
  CHECK(b.n_ram == 3);
  CHECK(b.totally_ramified);

  CoverInvariants c = invariants(validate(30, {2, 3, 25}));
  CHECK(c.ram_counts == std::array<std::int64_t, 3>{2, 3, 5});
  CHECK(c.n_ram == 10);
  CHECK(c.genus == 11);
  CHECK_FALSE(c.totally_ramified);
}

TEST_CASE("genus agrees with the permutation-orbit Euler characteristic count") {
  for_each_valid(40, [](const CoverData& c) {
    CHECK(invariants(c).genus == oracles::cover_genus(c));
  });
}

TEST_CASE("every valid cover has genus at least 1") {
  for_each_valid(40, [](const CoverData& c) { CHECK(invariants(c).genus >= 1); });
}

TEST_CASE("normalize_total_ramification on the reference data") {
  CHECK(*normalize_total_ramification(validate(3, {1, 1, 1})) == validate(3, {1, 1, 1}));
  CHECK(*normalize_total_ramification(validate(5, {2, 2, 1})) == validate(5, {1, 1, 3}));
  CHECK_FALSE(normalize_total_ramification(validate(30, {2, 3, 25})).has_value());
}

TEST_CASE("normalization exists exactly when some residue is a unit") {
  for_each_valid(30, [](const CoverData& c) {
    bool has_unit = std::gcd(c.k, c.mono[0]) == 1 || std::gcd(c.k, c.mono[1]) == 1 ||
                    std::gcd(c.k, c.mono[2]) == 1;
    auto norm = normalize_total_ramification(c);
    CHECK(norm.has_value() == has_unit);
    if (norm) {
      CHECK(norm->mono[0] == 1);
      CHECK(norm->mono[1] <= norm->mono[2]);
      CHECK((1 + norm->mono[1] + norm->mono[2]) % c.k == 0);
    }
  });
}

TEST_CASE("normalization is constant on unit orbits") {
  for_each_valid(25, [](const CoverData& c) {
    auto norm = normalize_total_ramification(c);
    for (const CoverData& rep : unit_orbit(c)) {
      auto other = normalize_total_ramification(rep);
      CHECK(norm.has_value() == other.has_value());
      if (norm && other) CHECK(*norm == *other);
    }
  });
}

TEST_CASE("unit_orbit lists phi(k) representatives in unit order") {
  auto small = unit_orbit(validate(3, {1, 1, 1}));
  REQUIRE(small.size() == 2);
  CHECK(small[0] == validate(3, {1, 1, 1}));
  CHECK(small[1] == validate(3, {2, 2, 2}));

  auto five = unit_orbit(validate(5, {1, 1, 3}));
  CHECK(five.size() == 4);
  CHECK(std::find(five.begin(), five.end(), validate(5, {2, 2, 1})) != five.end());

  CHECK(unit_orbit(validate(30, {2, 3, 25})).size() == 8);

  for_each_valid(30, [](const CoverData& c) {
    CHECK(unit_orbit(c).size() == static_cast<std::size_t>(phi(c.k)));
  });
}

TEST_CASE("unit orbits are closed under the unit action") {
  for_each_valid(20, [](const CoverData& c) {
    auto orbit = unit_orbit(c);
    std::set<CoverData> orbit_set(orbit.begin(), orbit.end());
    for (const CoverData& rep : orbit) {
      for (const CoverData& image : unit_orbit(rep)) CHECK(orbit_set.count(image) == 1);
    }
  });
}

TEST_CASE("genus, ramification total, and total ramification are orbit invariants") {
  for_each_valid(25, [](const CoverData& c) {
    CoverInvariants base = invariants(c);
    for (const CoverData& rep : unit_orbit(c)) {
      CoverInvariants inv = invariants(rep);
      CHECK(inv.genus == base.genus);
      CHECK(inv.n_ram == base.n_ram);
      CHECK(inv.totally_ramified == base.totally_ramified);
      std::array<std::int64_t, 3> sorted_base = base.ram_counts, sorted_rep = inv.ram_counts;
      std::sort(sorted_base.begin(), sorted_base.end());
      std::sort(sorted_rep.begin(), sorted_rep.end());
      CHECK(sorted_base == sorted_rep);
    }
  });
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(3, 7) == 5);
  CHECK(mod_inverse(25, 30 + 1) == 5);  // 25 * 5 = 125 = 4*31 + 1
  CHECK(thrown_code([] { mod_inverse(6, 30); }) == Errc::DomainError);
  for (std::int64_t k = 2; k <= 60; ++k) {
    for (std::int64_t a = 1; a < k; ++a) {
      if (std::gcd(a, k) != 1) continue;
      CHECK(mod_inverse(a, k) * a % k == 1);
    }
  }
}
