#include "taut0/tnumbers.hpp"

#include <algorithm>
#include <string>

#include "taut0/checked.hpp"
#include "taut0/errors.hpp"

namespace taut0::tnumbers {

namespace {

// Known rational-connectedness range per genus; -1 encodes unbounded (g = 0).
constexpr std::int64_t kNMax[] = {-1, 10, 12, 14, 15, 12, 15, 11, 8, 9, 3, 10, 1, 0, 2, 0};

}  // namespace

std::optional<std::int64_t> rational_connectedness_n_max(std::int64_t g) {
  if (g < 0 || g > kBaseTableMaxGenus) return std::nullopt;
  if (g == 0) return std::nullopt;  // unbounded; callers treat genus 0 separately
  return kNMax[g];
}

const char* provenance_kind_name(ProvenanceStep::Kind kind) {
  switch (kind) {
    case ProvenanceStep::Kind::RationallyConnectedBase: return "rationally_connected";
    case ProvenanceStep::Kind::Recursion: return "recursion";
    case ProvenanceStep::Kind::DegreeBound: return "degree_bound";
    case ProvenanceStep::Kind::HurwitzBound: return "hurwitz_bound";
  }
  return "unknown";
}

std::int64_t replay_provenance(const TBound& bound) {
  std::int64_t value = 1;
  for (const ProvenanceStep& step : bound.provenance) value = checked_mul(value, step.factor);
  return value;
}

const std::vector<std::pair<std::int64_t, std::optional<std::int64_t>>>& TBoundTable::base() const {
  static const std::vector<std::pair<std::int64_t, std::optional<std::int64_t>>> table = [] {
    std::vector<std::pair<std::int64_t, std::optional<std::int64_t>>> rows;
    rows.emplace_back(0, std::nullopt);
    for (std::int64_t g = 1; g <= kBaseTableMaxGenus; ++g) rows.emplace_back(g, kNMax[g]);
    return rows;
  }();
  return table;
}

const TBound& TBoundTable::bound(std::int64_t g, std::int64_t n) {
  auto key = std::make_pair(g, n);
  auto it = bounds_.find(key);
  if (it != bounds_.end()) return it->second;

  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0)
    fail(Errc::UnstableInput, "(g, n) = (" + std::to_string(g) + ", " + std::to_string(n) +
                                  ") is not stable");

  TBound out;
  out.g = g;
  out.n = n;

  // Stable base points: n0 <= min(n, n_max(g)) with 2g-2+n0 > 0. The bound
  // g(n - n0) + 1 is minimized by the largest such n0.
  std::int64_t n_floor = g == 0 ? 3 : (g == 1 ? 1 : 0);
  std::optional<std::int64_t> n0;
  if (g == 0) {
    n0 = n;  // unbounded table row, every stable n is a base point
  } else if (auto nmax = rational_connectedness_n_max(g)) {
    if (*nmax >= n_floor) n0 = std::min(n, *nmax);
  }
  if (!n0)
    fail(Errc::NoBaseCase,
         "no rational-connectedness base point recorded for genus " + std::to_string(g));

  out.provenance.push_back(ProvenanceStep{ProvenanceStep::Kind::RationallyConnectedBase, g,
                                          *n0, 0, 1});
  if (*n0 == n) {
    out.bound = 1;
  } else {
    std::int64_t m = n - *n0;
    std::int64_t factor = checked_add(checked_mul(g, m), 1);
    out.provenance.push_back(ProvenanceStep{ProvenanceStep::Kind::Recursion, g, n, m, factor});
    out.bound = factor;
  }
  return bounds_.emplace(key, std::move(out)).first->second;
}

TBound t_upper_bound(std::int64_t g, std::int64_t n) {
  TBoundTable table;
  return table.bound(g, n);
}

RecursionReport verify_recursion_consistency(std::int64_t g_max, std::int64_t n_scan) {
  if (g_max < 0 || n_scan < 1) fail(Errc::DomainError, "scan limits must be positive");
  RecursionReport report;
  report.g_max = g_max;
  report.n_scan = n_scan;

  TBoundTable table;
  for (std::int64_t g = 0; g <= std::min(g_max, kBaseTableMaxGenus); ++g) {
    for (std::int64_t n = 0; n <= n_scan; ++n) {
      if (2 * g - 2 + n <= 0) continue;
      RecursionRow row;
      row.g = g;
      row.n = n;
      const TBound& here = table.bound(g, n);
      const TBound& next = table.bound(g, n + 1);
      row.bound = here.bound;
      row.next_bound = next.bound;
      row.consistent = next.bound <= checked_mul(g + 1, here.bound);
      row.replay_ok =
          replay_provenance(here) == here.bound && replay_provenance(next) == next.bound;
      if (!row.consistent) report.consistent = false;
      if (!row.replay_ok) report.replay_ok = false;
      report.rows.push_back(row);
    }
  }

  std::int64_t m_sum_max = std::max<std::int64_t>(20, n_scan);
  for (std::int64_t g = 0; g <= std::min(g_max, kBaseTableMaxGenus) && report.dominance_ok; ++g) {
    for (std::int64_t m1 = 0; m1 <= m_sum_max; ++m1) {
      for (std::int64_t m2 = 0; m1 + m2 <= m_sum_max; ++m2) {
        std::int64_t split = checked_mul(g * m1 + 1, g * m2 + 1);
        std::int64_t direct = g * (m1 + m2) + 1;
        if (split < direct) {
          report.dominance_ok = false;
          break;
        }
      }
      if (!report.dominance_ok) break;
    }
  }
  return report;
}

std::int64_t AbelianGroup::order() const {
  std::int64_t total = 1;
  for (std::int64_t o : orders) {
    if (o < 1) fail(Errc::DomainError, "cyclic factor orders must be positive");
    total = checked_mul(total, o);
  }
  return total;
}

AbelianGroup::Element AbelianGroup::zero() const {
  return Element(orders.size(), 0);
}

AbelianGroup::Element AbelianGroup::reduce(Element x) const {
  if (x.size() != orders.size())
    fail(Errc::DomainError, "element has " + std::to_string(x.size()) + " components, group has " +
                                std::to_string(orders.size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::int64_t r = x[i] % orders[i];
    x[i] = r < 0 ? r + orders[i] : r;
  }
  return x;
}

AbelianGroup::Element AbelianGroup::add(const Element& a, const Element& b) const {
  Element ra = reduce(a), rb = reduce(b);
  for (std::size_t i = 0; i < ra.size(); ++i) ra[i] = (ra[i] + rb[i]) % orders[i];
  return ra;
}

AbelianGroup::Element AbelianGroup::scale(std::int64_t s, const Element& a) const {
  Element out = reduce(a);
  for (std::size_t i = 0; i < out.size(); ++i) {
    // Scalar times reduced component stays well inside int64 via __int128.
    __int128 prod = static_cast<__int128>(s) * out[i];
    std::int64_t r = static_cast<std::int64_t>(prod % orders[i]);
    out[i] = r < 0 ? r + orders[i] : r;
  }
  return out;
}

TradeTrace trade_points(const AbelianGroup& group, const AbelianGroup::Element& anchor,
                        const std::vector<AbelianGroup::Element>& start) {
  if (start.empty()) fail(Errc::DomainError, "trade needs at least one coordinate");
  if (group.order() < 2) fail(Errc::DomainError, "group order must be at least 2");

  TradeTrace trace;
  trace.group = group;
  trace.anchor = group.reduce(anchor);
  trace.m = static_cast<std::int64_t>(start.size());

  std::vector<AbelianGroup::Element> current;
  current.reserve(start.size());
  for (const auto& x : start) current.push_back(group.reduce(x));
  trace.tuples.push_back(current);
  trace.target.assign(start.size(), trace.anchor);

  for (std::int64_t i = 1; i <= trace.m; ++i) {
    const AbelianGroup::Element x = current[i - 1];
    // y_i = (i+1) anchor - i x_i, the unique effective representative of the
    // stage-i class in the genus-1 model.
    AbelianGroup::Element y =
        group.add(group.scale(i + 1, trace.anchor), group.scale(-i, x));
    for (std::int64_t j = 0; j < i - 1; ++j) current[j] = trace.anchor;
    current[i - 1] = y;
    trace.tuples.push_back(current);
    trace.steps.push_back(TradeStep{static_cast<int>(i), x, y});
  }
  return trace;
}

}  // namespace taut0::tnumbers
