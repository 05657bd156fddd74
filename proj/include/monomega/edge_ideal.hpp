#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "monomega/omega.hpp"

namespace monomega {

// Simple undirected graph on vertices 0..n-1; no loops, no multi-edges.
class Graph {
 public:
  explicit Graph(std::size_t vertex_count);

  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::set<std::pair<std::size_t, std::size_t>>& edges() const {
    return edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::set<std::pair<std::size_t, std::size_t>> edges_;
};

// Squarefree quadratic ideal (x_u * x_v : uv an edge); needs >= 1 edge.
MonomialIdeal edge_ideal(const Graph& g);

bool is_bipartite(const Graph& g);

// All minimal vertex covers (complements of maximal independent sets), each a
// sorted vertex list, ordered by (size, lexicographic). Exhaustive over
// subsets, so the graph is capped at 16 vertices.
std::vector<std::vector<std::size_t>> minimal_vertex_covers(const Graph& g);

// omega of the edge ideal equals the number of minimal vertex covers; the
// value is cross-checked against the dispatcher before being returned.
Exp omega_edge_ideal(const Graph& g);

// Certificate for omega(I^m) >= m * (number of minimal covers): each cover
// contributes the sum of its variables, repeated m times.
WitnessCertificate squarefree_power_witness(const Graph& g, Exp m);

struct EdgePowerRow {
  Exp m = 0;
  OmegaResult result;
  Exp linear_value = 0;  // m * omega(I)
  bool witness_verified = false;
  // Only for bipartite graphs: I^m equals the intersection of the P^m.
  std::optional<bool> bipartite_power_decomposition_ok;
};

struct EdgePowerReport {
  bool bipartite = false;
  Exp cover_count = 0;
  std::vector<EdgePowerRow> rows;
  bool linear_up_to_max = true;
};

EdgePowerReport edge_power_linearity(const Graph& g, Exp m_max);

}  // namespace monomega
