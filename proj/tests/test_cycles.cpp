#include <cstdint>
#include <map>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "taut0/cycles.hpp"
#include "taut0/errors.hpp"

using taut0::Errc;
using taut0::Error;
using namespace taut0::cycles;

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

FormalCycle single(Tuple t, std::int64_t coeff = 1) {
  FormalCycle out(static_cast<int>(t.size()));
  out.add(t, coeff);
  return out;
}

// Permutation sum that tolerates repeated symbols: coefficients accumulate.
FormalCycle permutation_sum(const Tuple& p) {
  std::vector<std::size_t> idx(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) idx[i] = i;
  FormalCycle out(static_cast<int>(p.size()));
  auto walk = [&](auto&& self, std::size_t at) -> void {
    if (at == idx.size()) {
      Tuple t;
      for (std::size_t i : idx) t.push_back(p[i]);
      out.add(t, 1);
      return;
    }
    for (std::size_t i = at; i < idx.size(); ++i) {
      std::swap(idx[at], idx[i]);
      self(self, at + 1);
      std::swap(idx[at], idx[i]);
    }
  };
  walk(walk, 0);
  return out;
}

std::int64_t bell(int n) {
  // Bell triangle
  std::vector<std::vector<std::int64_t>> rows{{1}};
  for (int i = 1; i < n; ++i) {
    std::vector<std::int64_t> row{rows.back().back()};
    for (std::int64_t x : rows.back()) row.push_back(row.back() + x);
    rows.push_back(std::move(row));
  }
  return rows.back().back();
}

}  // namespace

TEST_CASE("formal cycles drop zero terms and check arity") {
  FormalCycle x(2);
  x.add({"a", "b"}, 3);
  x.add({"a", "b"}, -3);
  CHECK(x.zero());
  CHECK(thrown_code([&] { x.add({"a"}, 1); }) == Errc::ArityMismatch);

  FormalCycle y(1);
  y.add({"a"}, 2);
  CHECK(thrown_code([&] { x += y; }) == Errc::ArityMismatch);
}

TEST_CASE("products concatenate tuples and multiply coefficients") {
  FormalCycle theta = FormalCycle::point_sum({"a", "b"});
  FormalCycle sq = theta.power(2);
  CHECK(sq.arity() == 2);
  CHECK(sq.terms().size() == 4);
  CHECK(sq.terms().at({"a", "b"}) == 1);
  FormalCycle scaled = single({"a"}, 2);
  FormalCycle mixed = product(scaled, scaled);
  CHECK(mixed.terms().at({"a", "a"}) == 4);
  CHECK(FormalCycle::point_sum({"a"}).power(0).terms().at({}) == 1);
}

TEST_CASE("set partitions come in canonical block order with Bell counts") {
  for (int n = 1; n <= 6; ++n) {
    auto parts = set_partitions(n);
    CHECK(static_cast<std::int64_t>(parts.size()) == bell(n));
    for (const SetPartition& p : parts) {
      // blocks ordered by least element, entries ascending
      for (std::size_t b = 0; b < p.size(); ++b) {
        CHECK(std::is_sorted(p[b].begin(), p[b].end()));
        if (b + 1 < p.size()) CHECK(p[b].front() < p[b + 1].front());
      }
    }
  }
  CHECK(thrown_code([] { set_partitions(0); }) == Errc::DomainError);
}

TEST_CASE("diagonal pushforward places block coordinates") {
  CHECK(diagonal_pushforward({{1, 2}, {3}}, single({"a", "b"})) == single({"a", "a", "b"}));
  CHECK(diagonal_pushforward({{1, 2, 3}}, single({"a"})) == single({"a", "a", "a"}));
  CHECK(diagonal_pushforward({{1}, {2}}, single({"a", "b"})) == single({"a", "b"}));
  // interleaved blocks: {1,3} gets x1, {2} gets x2
  CHECK(diagonal_pushforward({{1, 3}, {2}}, single({"a", "b"})) == single({"a", "b", "a"}));

  CHECK(thrown_code([] { diagonal_pushforward({{1, 2}}, single({"a", "b"})); }) ==
        Errc::ArityMismatch);
  CHECK(thrown_code([] { diagonal_pushforward({{1}, {1, 2}}, single({"a", "b"})); }) ==
        Errc::DomainError);
  CHECK(thrown_code([] { diagonal_pushforward({{1}, {3}}, single({"a", "b"})); }) ==
        Errc::DomainError);
}

TEST_CASE("partition coefficients: closed form, order, reference values") {
  auto one = partition_coefficients(1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].partition == SetPartition{{1}});
  CHECK(one[0].coefficient == 1);

  auto three = partition_coefficients(3);
  REQUIRE(three.size() == 5);
  std::vector<std::int64_t> listed;
  for (const auto& entry : three) listed.push_back(entry.coefficient);
  CHECK(listed == std::vector<std::int64_t>{1, -1, -1, -1, 2});
  CHECK(three.front().partition.size() == 3);  // discrete first
  CHECK(three.back().partition.size() == 1);   // single block last

  for (const auto& entry : partition_coefficients(4)) {
    if (entry.partition.size() == 1) CHECK(entry.coefficient == -6);
    if (entry.partition.size() == 2 && entry.partition[0].size() == 2)
      CHECK(entry.coefficient == 1);  // both 2+2 partitions
  }
}

TEST_CASE("coefficients match the triangular-elimination oracle up to n=6") {
  for (int n = 1; n <= 6; ++n) {
    auto by_elimination = oracles::partition_coefficients_by_elimination(n);
    auto closed = partition_coefficients(n);
    REQUIRE(by_elimination.size() == closed.size());
    for (const auto& entry : closed) {
      REQUIRE(by_elimination.count(entry.partition) == 1);
      CHECK(by_elimination.at(entry.partition) == entry.coefficient);
    }
  }
}

TEST_CASE("single-block coefficient is the signed factorial") {
  for (int n = 1; n <= 8; ++n) {
    std::int64_t expected = 1;
    for (int i = 2; i < n; ++i) expected *= i;
    if (n % 2 == 0) expected = -expected;
    SetPartition full(1);
    for (int i = 1; i <= n; ++i) full[0].push_back(i);
    CHECK(partition_coefficient(full) == expected);
  }
}

TEST_CASE("symmetrize expands all permutations with unit coefficients") {
  CHECK(symmetrize({"a"}) == single({"a"}));

  FormalCycle two = symmetrize({"a", "b"});
  CHECK(two.terms().size() == 2);
  CHECK(two.terms().at({"a", "b"}) == 1);
  CHECK(two.terms().at({"b", "a"}) == 1);

  FormalCycle three = symmetrize({"a", "b", "c"});
  CHECK(three.terms().size() == 6);
  for (const auto& [t, coeff] : three.terms()) CHECK(coeff == 1);

  CHECK(thrown_code([] { symmetrize({"a", "a"}); }) == Errc::DuplicateSymbols);
}

TEST_CASE("blockwise identity holds for n = 1..6") {
  std::vector<Symbol> alphabet{"a", "b", "c", "d", "e", "f"};
  for (int n = 1; n <= 6; ++n) {
    Tuple p(alphabet.begin(), alphabet.begin() + n);
    CHECK(verify_blockwise_identity(p));
  }
  CHECK(thrown_code([] {
          verify_blockwise_identity({"a", "b", "c", "d", "e", "f", "g"});
        }) == Errc::LimitExceeded);
  CHECK(verify_blockwise_identity({"a", "b", "c", "d", "e", "f", "g"}, 7));
}

TEST_CASE("the expansion depends only on the point sum") {
  // repeated symbols: the same blockwise expansion still reproduces the
  // multiplicity-weighted permutation sum
  for (const Tuple& p : std::vector<Tuple>{{"a", "a"},
                                           {"a", "a", "b"},
                                           {"a", "a", "b", "b"},
                                           {"a", "a", "a", "b"},
                                           {"a", "a", "a"}}) {
    FormalCycle theta = FormalCycle::point_sum(p);
    CHECK(blockwise_expansion(theta, static_cast<int>(p.size())) == permutation_sum(p));
  }
  // equal point sums, different tuples: literally the same expansion
  FormalCycle left = FormalCycle::point_sum({"a", "b", "a"});
  FormalCycle right = FormalCycle::point_sum({"a", "a", "b"});
  REQUIRE(left == right);
  CHECK(blockwise_expansion(left, 3) == blockwise_expansion(right, 3));
}
