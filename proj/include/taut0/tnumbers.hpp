#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace taut0::tnumbers {

// Largest n for which the moduli space of genus-g curves with n markings is
// known to be rationally connected, hence has T number 1. Genus 0 is
// unbounded (nullopt); genera above 15 have no recorded base.
inline constexpr std::int64_t kBaseTableMaxGenus = 15;
std::optional<std::int64_t> rational_connectedness_n_max(std::int64_t g);

struct ProvenanceStep {
  // DegreeBound and HurwitzBound are reserved kinds: valid in replay so new
  // base sources can be added, but never produced by the current table.
  enum class Kind { RationallyConnectedBase, Recursion, DegreeBound, HurwitzBound };

  Kind kind = Kind::RationallyConnectedBase;
  std::int64_t g = 0;
  std::int64_t n = 0;       // markings after this step
  std::int64_t m = 0;       // recursion only: markings added
  std::int64_t factor = 1;  // multiplicative contribution to the bound
};

const char* provenance_kind_name(ProvenanceStep::Kind kind);

struct TBound {
  std::int64_t g = 0;
  std::int64_t n = 0;
  std::int64_t bound = 1;
  std::vector<ProvenanceStep> provenance;
};

// Product of the provenance factors; every emitted bound replays to itself.
std::int64_t replay_provenance(const TBound& bound);

// Base table plus memoized bounds with provenance chains.
class TBoundTable {
 public:
  const std::vector<std::pair<std::int64_t, std::optional<std::int64_t>>>& base() const;
  const TBound& bound(std::int64_t g, std::int64_t n);
  const std::map<std::pair<std::int64_t, std::int64_t>, TBound>& bounds() const {
    return bounds_;
  }

 private:
  std::map<std::pair<std::int64_t, std::int64_t>, TBound> bounds_;
};

// Best single-application bound (g(n - n0) + 1) over stable base points
// n0 <= min(n, n_max(g)); 1 whenever n <= n_max(g).
// Errors: UnstableInput (2g-2+n <= 0), NoBaseCase (no stable base point,
// in particular every g > 15).
TBound t_upper_bound(std::int64_t g, std::int64_t n);

struct RecursionRow {
  std::int64_t g = 0, n = 0;
  std::int64_t bound = 0, next_bound = 0;  // next_bound for (g, n+1)
  bool consistent = false;                 // next_bound <= (g+1) * bound
  bool replay_ok = false;
};

struct RecursionReport {
  std::int64_t g_max = 0, n_scan = 0;
  std::vector<RecursionRow> rows;
  bool consistent = true;
  bool replay_ok = true;
  // (g m1 + 1)(g m2 + 1) >= g (m1 + m2) + 1: splitting a recursion never
  // beats one application; scanned alongside the table rows.
  bool dominance_ok = true;

  bool pass() const { return consistent && replay_ok && dominance_ok; }
};

// Scans stable (g, n) with g <= min(g_max, 15), n <= n_scan; checks the
// single-step recursion consistency, provenance replay, and the dominance
// inequality for m1 + m2 <= max(20, n_scan).
RecursionReport verify_recursion_consistency(std::int64_t g_max, std::int64_t n_scan);

// Product of cyclic groups Z/orders[0] x ... x Z/orders[r-1], elements as
// component vectors reduced into [0, order).
struct AbelianGroup {
  using Element = std::vector<std::int64_t>;

  std::vector<std::int64_t> orders;

  std::int64_t order() const;
  Element zero() const;
  Element reduce(Element x) const;
  Element add(const Element& a, const Element& b) const;
  Element scale(std::int64_t s, const Element& a) const;
};

struct TradeStep {
  int stage = 0;                      // i = 1, ..., m
  AbelianGroup::Element replaced;     // x_i
  AbelianGroup::Element replacement;  // y_i with y_i + i x_i = (i+1) anchor
};

struct TradeTrace {
  AbelianGroup group;
  AbelianGroup::Element anchor;
  std::int64_t m = 0;
  std::vector<std::vector<AbelianGroup::Element>> tuples;  // Q_1, ..., Q_{m+1}
  std::vector<AbelianGroup::Element> target;               // anchor-constant tuple
  std::vector<TradeStep> steps;
};

// Genus-1 trading model: at stage i the entry x_i is replaced by the unique
// solution y_i of y_i + i x_i = (i+1) anchor, earlier coordinates already at
// the anchor. Coordinatewise sums over the m+1 tuples all equal (m+1) anchor.
// Errors: DomainError (m < 1, group order < 2, wrong element shape).
TradeTrace trade_points(const AbelianGroup& group, const AbelianGroup::Element& anchor,
                        const std::vector<AbelianGroup::Element>& start);

}  // namespace taut0::tnumbers
