#include "taut0/cycles.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "taut0/checked.hpp"
#include "taut0/errors.hpp"

namespace taut0::cycles {

FormalCycle::FormalCycle(int arity) : arity_(arity) {
  if (arity < 0) fail(Errc::DomainError, "cycle arity must be nonnegative");
}

void FormalCycle::add(const Tuple& t, std::int64_t coeff) {
  if (static_cast<int>(t.size()) != arity_)
    fail(Errc::ArityMismatch, "tuple length " + std::to_string(t.size()) +
                                  " does not match cycle arity " + std::to_string(arity_));
  if (coeff == 0) return;
  auto it = terms_.find(t);
  if (it == terms_.end()) {
    terms_.emplace(t, coeff);
    return;
  }
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

FormalCycle& FormalCycle::operator+=(const FormalCycle& other) {
  if (other.arity_ != arity_)
    fail(Errc::ArityMismatch, "cannot add cycles of arities " + std::to_string(arity_) +
                                  " and " + std::to_string(other.arity_));
  for (const auto& [t, coeff] : other.terms_) add(t, coeff);
  return *this;
}

FormalCycle& FormalCycle::operator*=(std::int64_t scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [t, coeff] : terms_) coeff = checked_mul(coeff, scalar);
  return *this;
}

FormalCycle product(const FormalCycle& a, const FormalCycle& b) {
  FormalCycle out(a.arity_ + b.arity_);
  for (const auto& [ta, ca] : a.terms_) {
    for (const auto& [tb, cb] : b.terms_) {
      Tuple t = ta;
      t.insert(t.end(), tb.begin(), tb.end());
      out.add(t, checked_mul(ca, cb));
    }
  }
  return out;
}

FormalCycle FormalCycle::power(int exponent) const {
  if (exponent < 0) fail(Errc::DomainError, "cycle power needs a nonnegative exponent");
  FormalCycle out(0);
  out.add({}, 1);
  for (int i = 0; i < exponent; ++i) out = product(out, *this);
  return out;
}

FormalCycle FormalCycle::point_sum(const std::vector<Symbol>& symbols) {
  FormalCycle out(1);
  for (const Symbol& s : symbols) out.add({s}, 1);
  return out;
}

std::vector<SetPartition> set_partitions(int n) {
  if (n < 1) fail(Errc::DomainError, "set partitions need n >= 1");
  if (n > 20) fail(Errc::LimitExceeded, "set partitions capped at n = 20");
  std::vector<SetPartition> out;
  // Restricted growth strings: a[i] <= 1 + max(a[0..i-1]), a[0] = 0. Block
  // indices are first-occurrence ordered, which is exactly the canonical
  // least-element block order.
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  auto walk = [&](auto&& self, int i, int used) -> void {
    if (i == n) {
      SetPartition p(static_cast<std::size_t>(used));
      for (int j = 0; j < n; ++j) p[static_cast<std::size_t>(a[j])].push_back(j + 1);
      out.push_back(std::move(p));
      return;
    }
    for (int block = 0; block <= used; ++block) {
      a[i] = block;
      self(self, i + 1, std::max(used, block + 1));
    }
  };
  walk(walk, 0, 0);
  return out;
}

std::int64_t partition_coefficient(const SetPartition& partition) {
  std::int64_t coeff = 1;
  for (const auto& block : partition) {
    if (block.empty()) fail(Errc::DomainError, "empty partition block");
    for (std::size_t i = 2; i < block.size(); ++i)
      coeff = checked_mul(coeff, static_cast<std::int64_t>(i));
    if (block.size() % 2 == 0) coeff = -coeff;
  }
  return coeff;
}

std::vector<SetPartitionCoefficient> partition_coefficients(int n) {
  std::vector<SetPartition> parts = set_partitions(n);
  // Finest first: the discrete partition opens the list, the single block
  // closes it; equal block counts tie-break lexicographically.
  std::sort(parts.begin(), parts.end(), [](const SetPartition& a, const SetPartition& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::vector<SetPartitionCoefficient> out;
  out.reserve(parts.size());
  for (SetPartition& p : parts) {
    std::int64_t coeff = partition_coefficient(p);
    out.push_back(SetPartitionCoefficient{std::move(p), coeff});
  }
  return out;
}

namespace {

int checked_partition_size(const SetPartition& partition) {
  std::set<int> seen;
  int n = 0;
  for (const auto& block : partition) {
    if (block.empty()) fail(Errc::DomainError, "empty partition block");
    for (int x : block) {
      if (x < 1) fail(Errc::DomainError, "partition entries must be positive");
      if (!seen.insert(x).second)
        fail(Errc::DomainError, "partition entry " + std::to_string(x) + " repeated");
      n = std::max(n, x);
    }
  }
  if (static_cast<int>(seen.size()) != n)
    fail(Errc::DomainError, "partition does not cover {1, ..., n}");
  return n;
}

}  // namespace

FormalCycle diagonal_pushforward(const SetPartition& partition, const FormalCycle& x) {
  int n = checked_partition_size(partition);
  if (static_cast<int>(partition.size()) != x.arity())
    fail(Errc::ArityMismatch, "cycle arity " + std::to_string(x.arity()) +
                                  " does not match block count " + std::to_string(partition.size()));
  FormalCycle out(n);
  for (const auto& [t, coeff] : x.terms()) {
    Tuple image(static_cast<std::size_t>(n));
    for (std::size_t j = 0; j < partition.size(); ++j)
      for (int slot : partition[j]) image[static_cast<std::size_t>(slot - 1)] = t[j];
    out.add(image, coeff);
  }
  return out;
}

FormalCycle symmetrize(const Tuple& p) {
  std::set<Symbol> seen(p.begin(), p.end());
  if (seen.size() != p.size())
    fail(Errc::DuplicateSymbols, "symmetrization needs pairwise distinct symbols");
  FormalCycle out(static_cast<int>(p.size()));
  std::vector<std::size_t> idx(p.size());
  std::iota(idx.begin(), idx.end(), 0);
  do {
    Tuple t;
    t.reserve(p.size());
    for (std::size_t i : idx) t.push_back(p[i]);
    out.add(t, 1);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

FormalCycle blockwise_expansion(const FormalCycle& theta, int n) {
  if (theta.arity() != 1) fail(Errc::ArityMismatch, "blockwise expansion needs an arity-1 cycle");
  if (n < 1) fail(Errc::DomainError, "blockwise expansion needs n >= 1");
  FormalCycle out(n);
  for (const SetPartition& p : set_partitions(n)) {
    FormalCycle term = diagonal_pushforward(p, theta.power(static_cast<int>(p.size())));
    term *= partition_coefficient(p);
    out += term;
  }
  return out;
}

bool verify_blockwise_identity(const Tuple& p, int limit) {
  int n = static_cast<int>(p.size());
  if (n < 1) fail(Errc::DomainError, "identity check needs a nonempty tuple");
  if (n > limit)
    fail(Errc::LimitExceeded, "identity check limited to n <= " + std::to_string(limit));
  return symmetrize(p) == blockwise_expansion(FormalCycle::point_sum(p), n);
}

}  // namespace taut0::cycles
