#include "taut0/strata.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>

#include "taut0/errors.hpp"

namespace taut0::strata {

std::int64_t StableGraph::n_at(int v) const {
  std::int64_t count = static_cast<std::int64_t>(vertices[v].legs.size());
  for (const auto& [a, b] : edges) {
    if (a == v) ++count;
    if (b == v) ++count;
  }
  return count;
}

std::int64_t StableGraph::total_genus() const {
  std::int64_t sum = 0;
  for (const Vertex& v : vertices) sum += v.genus;
  return sum + static_cast<std::int64_t>(edges.size()) -
         static_cast<std::int64_t>(vertices.size()) + 1;
}

bool StableGraph::connected() const {
  int V = static_cast<int>(vertices.size());
  if (V <= 1) return true;
  std::vector<int> root(V);
  std::iota(root.begin(), root.end(), 0);
  auto find = [&root](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& [a, b] : edges) root[find(a)] = find(b);
  int lead = find(0);
  for (int v = 1; v < V; ++v)
    if (find(v) != lead) return false;
  return true;
}

bool StableGraph::stable() const {
  for (int v = 0; v < static_cast<int>(vertices.size()); ++v)
    if (2 * vertices[v].genus - 2 + n_at(v) <= 0) return false;
  return true;
}

std::string to_string(const StableGraph& graph) {
  std::ostringstream out;
  for (std::size_t v = 0; v < graph.vertices.size(); ++v) {
    if (v) out << ' ';
    out << 'g' << graph.vertices[v].genus << '[';
    for (std::size_t i = 0; i < graph.vertices[v].legs.size(); ++i) {
      if (i) out << ',';
      out << graph.vertices[v].legs[i];
    }
    out << ']';
  }
  out << " / ";
  if (graph.edges.empty()) {
    out << '-';
  } else {
    for (std::size_t i = 0; i < graph.edges.size(); ++i) {
      if (i) out << ' ';
      out << graph.edges[i].first << '-' << graph.edges[i].second;
    }
  }
  return out.str();
}

namespace {

using VertexKey = std::tuple<std::int64_t, std::int64_t, std::vector<int>>;

constexpr std::int64_t kRelabelCap = 10'000'000;

std::vector<std::pair<int, int>> relabel_edges(const std::vector<std::pair<int, int>>& edges,
                                               const std::vector<int>& pos) {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    int x = pos[a], y = pos[b];
    out.emplace_back(std::min(x, y), std::max(x, y));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

StableGraph canonical_form(const StableGraph& graph) {
  int V = static_cast<int>(graph.vertices.size());
  std::vector<std::pair<VertexKey, int>> keyed;
  keyed.reserve(V);
  for (int v = 0; v < V; ++v)
    keyed.emplace_back(VertexKey{graph.vertices[v].genus, graph.n_at(v), graph.vertices[v].legs}, v);
  std::sort(keyed.begin(), keyed.end());

  // Vertices with equal keys are attribute-identical (equal nonempty leg sets
  // cannot occur twice), so only the edge list depends on how a tie group is
  // laid out. Search all layouts of each tie group for the least edge list.
  std::vector<int> pos(V);
  for (int i = 0; i < V; ++i) pos[keyed[i].second] = i;

  std::vector<std::pair<int, std::vector<int>>> tie_groups;  // (start position, old indices)
  std::int64_t layouts = 1;
  for (int i = 0; i < V;) {
    int j = i;
    while (j < V && keyed[j].first == keyed[i].first) ++j;
    if (j - i > 1) {
      std::vector<int> members;
      for (int t = i; t < j; ++t) members.push_back(keyed[t].second);
      std::sort(members.begin(), members.end());
      for (int t = 2; t <= j - i; ++t) {
        layouts *= t;
        if (layouts > kRelabelCap)
          fail(Errc::LimitExceeded, "canonical form relabeling search too large");
      }
      tie_groups.emplace_back(i, std::move(members));
    }
    i = j;
  }

  std::vector<std::pair<int, int>> best = relabel_edges(graph.edges, pos);
  if (!tie_groups.empty()) {
    auto search = [&](auto&& self, std::size_t gi) -> void {
      if (gi == tie_groups.size()) {
        std::vector<std::pair<int, int>> cand = relabel_edges(graph.edges, pos);
        if (cand < best) best = cand;
        return;
      }
      auto& [start, members] = tie_groups[gi];
      std::vector<int> perm = members;
      do {
        for (std::size_t t = 0; t < perm.size(); ++t) pos[perm[t]] = start + static_cast<int>(t);
        self(self, gi + 1);
      } while (std::next_permutation(perm.begin(), perm.end()));
    };
    search(search, 0);
  }

  StableGraph out;
  out.vertices.reserve(V);
  for (int i = 0; i < V; ++i) {
    const auto& key = keyed[i].first;
    out.vertices.push_back(Vertex{std::get<0>(key), std::get<2>(key)});
  }
  out.edges = std::move(best);
  return out;
}

std::string canonical_key(const StableGraph& graph) {
  return to_string(canonical_form(graph));
}

namespace {

// Enumeration walks, for each vertex count V:
//   genus vectors (g_1, ..., g_V) with sum <= g, the rest is Betti number
//   h = g - sum, so the edge count is E = h + V - 1;
//   leg assignments {1..n} -> vertices, kept only when the attribute
//   sequence (genus, legs) is non-decreasing, which removes pure relabelings
//   of distinguishable vertices up front;
//   degree sequences bounded below by stability (and by 1 for connectivity
//   when V > 1), summing to 2E;
//   symmetric adjacency choices (loops plus upper-triangle multiplicities)
//   realizing the degrees.
// Connected survivors are canonicalized and deduplicated by key.
struct Enumerator {
  std::int64_t g, n;
  std::map<std::string, StableGraph> found;

  int V = 0;
  std::int64_t h = 0, E = 0;
  std::vector<std::int64_t> gv;
  std::vector<int> leg_of;               // marking label -> vertex
  std::vector<std::vector<int>> legs;    // per vertex
  std::vector<std::int64_t> lower, deg, rem, suffix_lower, loops;
  std::vector<std::vector<std::int64_t>> mult;

  void run() {
    std::int64_t budget = 2 * g - 2 + n;  // sum over vertices of 2g(v)-2+n(v)
    for (V = 1; V <= budget; ++V) {
      gv.assign(V, 0);
      genus_vectors(0, g);
    }
  }

  void genus_vectors(int at, std::int64_t remaining) {
    if (at == V) {
      h = remaining;
      E = h + V - 1;
      leg_of.assign(static_cast<std::size_t>(n), 0);
      leg_assignments(0);
      return;
    }
    for (std::int64_t x = 0; x <= remaining; ++x) {
      gv[at] = x;
      genus_vectors(at + 1, remaining - x);
    }
  }

  void leg_assignments(int mark) {
    if (mark == n) {
      with_attributes();
      return;
    }
    for (int v = 0; v < V; ++v) {
      leg_of[mark] = v;
      leg_assignments(mark + 1);
    }
  }

  void with_attributes() {
    legs.assign(V, {});
    for (int mark = 0; mark < n; ++mark) legs[leg_of[mark]].push_back(mark + 1);
    for (int v = 0; v + 1 < V; ++v) {
      if (std::tie(gv[v], legs[v]) > std::tie(gv[v + 1], legs[v + 1])) return;
    }

    lower.assign(V, 0);
    std::int64_t lower_sum = 0;
    for (int v = 0; v < V; ++v) {
      std::int64_t need = 3 - 2 * gv[v] - static_cast<std::int64_t>(legs[v].size());
      lower[v] = std::max<std::int64_t>({need, V > 1 ? 1 : 0, 0});
      lower_sum += lower[v];
    }

    if (V == 1) {
      // Adjacency is forced: E loops on the single vertex.
      if (2 * E < lower[0]) return;
      StableGraph graph;
      graph.vertices.push_back(Vertex{gv[0], legs[0]});
      for (std::int64_t i = 0; i < E; ++i) graph.edges.emplace_back(0, 0);
      emit(graph);
      return;
    }

    if (lower_sum > 2 * E) return;
    suffix_lower.assign(V + 1, 0);
    for (int v = V - 1; v >= 0; --v) suffix_lower[v] = suffix_lower[v + 1] + lower[v];
    deg.assign(V, 0);
    degree_sequences(0, 2 * E);
  }

  void degree_sequences(int at, std::int64_t remaining) {
    if (at == V) {
      if (remaining == 0) start_adjacency();
      return;
    }
    for (std::int64_t d = lower[at]; d + suffix_lower[at + 1] <= remaining; ++d) {
      deg[at] = d;
      degree_sequences(at + 1, remaining - d);
    }
  }

  void start_adjacency() {
    rem = deg;
    loops.assign(V, 0);
    mult.assign(V, std::vector<std::int64_t>(V, 0));
    adjacency_row(0);
  }

  void adjacency_row(int v) {
    if (v == V) {
      emit_adjacency();
      return;
    }
    std::int64_t budget = rem[v];
    for (std::int64_t l = 0; 2 * l <= budget; ++l) {
      loops[v] = l;
      spread(v, v + 1, budget - 2 * l);
    }
  }

  // Distributes r edge ends from v among vertices u > v, capped by rem[u].
  void spread(int v, int u, std::int64_t r) {
    if (r == 0) {
      for (int w = u; w < V; ++w) mult[v][w] = 0;
      adjacency_row(v + 1);
      return;
    }
    if (u == V) return;
    std::int64_t cap = std::min(r, rem[u]);
    for (std::int64_t m = 0; m <= cap; ++m) {
      mult[v][u] = m;
      rem[u] -= m;
      spread(v, u + 1, r - m);
      rem[u] += m;
    }
  }

  void emit_adjacency() {
    StableGraph graph;
    graph.vertices.reserve(V);
    for (int v = 0; v < V; ++v) graph.vertices.push_back(Vertex{gv[v], legs[v]});
    for (int v = 0; v < V; ++v) {
      for (std::int64_t i = 0; i < loops[v]; ++i) graph.edges.emplace_back(v, v);
      for (int u = v + 1; u < V; ++u)
        for (std::int64_t i = 0; i < mult[v][u]; ++i) graph.edges.emplace_back(v, u);
    }
    if (!graph.connected()) return;
    emit(graph);
  }

  void emit(const StableGraph& graph) {
    if (!graph.stable()) return;
    StableGraph canon = canonical_form(graph);
    found.emplace(to_string(canon), std::move(canon));
  }
};

}  // namespace

std::vector<StableGraph> enumerate_stable_graphs(std::int64_t g, std::int64_t n) {
  if (g < 0 || n < 0 || 2 * g - 2 + n <= 0)
    fail(Errc::UnstablePair, "(g, n) = (" + std::to_string(g) + ", " + std::to_string(n) +
                                 ") admits no stable curve");
  Enumerator enumerator;
  enumerator.g = g;
  enumerator.n = n;
  enumerator.run();
  std::vector<StableGraph> out;
  out.reserve(enumerator.found.size());
  for (auto& [key, graph] : enumerator.found) out.push_back(std::move(graph));
  return out;
}

std::int64_t stratum_dimension(const StableGraph& graph) {
  std::int64_t dim = 0;
  for (int v = 0; v < static_cast<int>(graph.vertices.size()); ++v)
    dim += 3 * graph.vertices[v].genus - 3 + graph.n_at(v);
  return dim;
}

std::int64_t vertex_degree_budget(const StableGraph& graph, int v) {
  std::int64_t genus = graph.vertices[v].genus;
  std::int64_t valence = graph.n_at(v);
  if (genus == 0) return valence - 3;
  std::int64_t vertex_dim = 3 * genus - 3 + valence;
  std::int64_t degree_cap = genus - (valence == 0 ? 1 : 0) - 1;
  return std::min(vertex_dim, degree_cap);
}

bool zero_cycle_feasible_with_positive_genus(const StableGraph& graph) {
  bool positive = false;
  std::int64_t total_budget = 0;
  for (int v = 0; v < static_cast<int>(graph.vertices.size()); ++v) {
    if (graph.vertices[v].genus > 0) positive = true;
    total_budget += vertex_degree_budget(graph, v);
  }
  return positive && total_budget >= stratum_dimension(graph);
}

SpanningReport verify_r0_spanning(std::int64_t g, std::int64_t n) {
  SpanningReport report;
  report.g = g;
  report.n = n;
  for (const StableGraph& graph : enumerate_stable_graphs(g, n)) {
    SpanningRow row;
    row.graph = to_string(graph);
    row.dimension = stratum_dimension(graph);
    row.budget = 0;
    for (int v = 0; v < static_cast<int>(graph.vertices.size()); ++v) {
      row.budget += vertex_degree_budget(graph, v);
      if (graph.vertices[v].genus > 0) row.positive_genus = true;
    }
    row.feasible = zero_cycle_feasible_with_positive_genus(graph);
    if (row.feasible) report.pass = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace taut0::strata
