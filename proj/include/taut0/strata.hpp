#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace taut0::strata {

struct Vertex {
  std::int64_t genus = 0;
  std::vector<int> legs;  // sorted marking labels

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Dual graph of a stable curve: vertices carry a geometric genus and marking
// legs, edges are unordered vertex pairs with multiplicity, loops allowed.
struct StableGraph {
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;  // each pair with first <= second, list sorted

  // Valence n(v): legs plus edge ends at v; a loop contributes two.
  std::int64_t n_at(int v) const;
  // Sum of vertex genera plus the first Betti number of the graph.
  std::int64_t total_genus() const;
  bool connected() const;
  // 2 genus(v) - 2 + n(v) > 0 at every vertex.
  bool stable() const;

  friend bool operator==(const StableGraph&, const StableGraph&) = default;
};

std::string to_string(const StableGraph& graph);

// Canonical representative of the isomorphism class: vertices sorted by
// (genus, n(v), legs), edge list minimized over relabelings of
// indistinguishable vertices. Equal keys mean equal classes.
StableGraph canonical_form(const StableGraph& graph);
std::string canonical_key(const StableGraph& graph);

// All isomorphism classes of stable dual graphs of genus g with markings
// {1, ..., n}, each in canonical form, ordered by canonical key.
// Errors: UnstablePair when 2g - 2 + n <= 0 or g < 0 or n < 0.
std::vector<StableGraph> enumerate_stable_graphs(std::int64_t g, std::int64_t n);

// Dimension of the stratum: sum over vertices of 3 genus(v) - 3 + n(v).
std::int64_t stratum_dimension(const StableGraph& graph);

// Largest total degree a nonvanishing tautological class may have on the
// factor attached to vertex v:
//   genus 0:  n(v) - 3
//   genus > 0: min(3 genus(v) - 3 + n(v), genus(v) - [n(v) = 0] - 1).
std::int64_t vertex_degree_budget(const StableGraph& graph, int v);

// Whether a degree-respecting decoration could reach a 0-cycle on a stratum
// that still sees a positive-genus vertex. The positive-genus budget is
// always short of the vertex dimension, so this is false on every stable
// graph; keeping it as a computation is the point of the check.
bool zero_cycle_feasible_with_positive_genus(const StableGraph& graph);

struct SpanningRow {
  std::string graph;
  std::int64_t dimension = 0;
  std::int64_t budget = 0;  // sum of vertex budgets
  bool positive_genus = false;
  bool feasible = false;
};

struct SpanningReport {
  std::int64_t g = 0;
  std::int64_t n = 0;
  std::vector<SpanningRow> rows;
  bool pass = true;  // no stratum admits a feasible positive-genus decoration
};

// Tabulates every stratum of (g, n) and confirms that 0-cycles can only be
// produced on fully rational configurations.
SpanningReport verify_r0_spanning(std::int64_t g, std::int64_t n);

}  // namespace taut0::strata
