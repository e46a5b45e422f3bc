#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace taut0::cycles {

using Symbol = std::string;
using Tuple = std::vector<Symbol>;

// Partition of {1, ..., n}: blocks sorted ascending, ordered by least element.
using SetPartition = std::vector<std::vector<int>>;

// Integer combination of arity-n symbol tuples. Zero coefficients are never
// stored, so equality of the term maps is equality of cycles.
class FormalCycle {
 public:
  explicit FormalCycle(int arity);

  int arity() const { return arity_; }
  const std::map<Tuple, std::int64_t>& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }

  void add(const Tuple& t, std::int64_t coeff);
  FormalCycle& operator+=(const FormalCycle& other);
  FormalCycle& operator*=(std::int64_t scalar);

  // Exterior product: tuples concatenate, coefficients multiply, arities add.
  friend FormalCycle product(const FormalCycle& a, const FormalCycle& b);
  FormalCycle power(int exponent) const;  // exponent >= 0; power(0) is the empty tuple

  friend bool operator==(const FormalCycle&, const FormalCycle&) = default;

  // Sum of the arity-1 tuples [s] over the given symbols, with multiplicity.
  static FormalCycle point_sum(const std::vector<Symbol>& symbols);

 private:
  int arity_;
  std::map<Tuple, std::int64_t> terms_;
};

// All partitions of {1, ..., n} in canonical block order, generated from
// restricted growth strings; Bell(n) entries. DomainError for n < 1,
// LimitExceeded for n > 20.
std::vector<SetPartition> set_partitions(int n);

// Inclusion-exclusion coefficient of one partition:
//   prod over blocks B of (-1)^(|B|-1) (|B|-1)!.
std::int64_t partition_coefficient(const SetPartition& partition);

struct SetPartitionCoefficient {
  SetPartition partition;
  std::int64_t coefficient = 0;
};

std::vector<SetPartitionCoefficient> partition_coefficients(int n);

// Pushforward along the partition diagonal: an arity-|P| tuple (x_1, ..., x_l)
// becomes the arity-n tuple placing x_j on every slot of block j.
// Errors: ArityMismatch (cycle arity != block count), DomainError (P is not
// a partition of {1, ..., n}).
FormalCycle diagonal_pushforward(const SetPartition& partition, const FormalCycle& x);

// Sum of [p_sigma] over all permutations sigma of the tuple entries.
// Errors: DuplicateSymbols.
FormalCycle symmetrize(const Tuple& p);

// Sum over partitions P of coefficient(P) times the diagonal pushforward of
// theta^{x |P|}; theta must have arity 1.
FormalCycle blockwise_expansion(const FormalCycle& theta, int n);

// Checks symmetrize(p) == blockwise_expansion(point_sum(p), n) for the given
// tuple of distinct symbols. Errors: LimitExceeded when p is longer than the
// brute-force limit.
bool verify_blockwise_identity(const Tuple& p, int limit = 6);

}  // namespace taut0::cycles
