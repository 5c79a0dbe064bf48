#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "qpkit/vertex_set.hpp"

namespace qpkit {

/// Simple undirected graph on vertices 0..n-1 with one adjacency word per
/// vertex. Immutable once built; use Graph::Builder or the factory helpers.
/// The default-constructed graph is K0.
class Graph {
 public:
  class Builder {
   public:
    explicit Builder(int n);
    Builder& add_edge(int u, int v);
    Builder& remove_edge(int u, int v);
    Graph build() &&;

   private:
    std::vector<std::uint64_t> adj_;
  };

  Graph() = default;

  /// Edgeless graph on n vertices.
  static Graph empty(int n);
  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph path(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  int edge_count() const;
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
  int degree(int v) const { return neighbors(v).size(); }

  bool is_clique(VertexSet s) const;
  bool is_independent(VertexSet s) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(std::vector<std::uint64_t> adj) : adj_(std::move(adj)) {}

  std::vector<std::uint64_t> adj_;
};

Graph complement(const Graph& g);

/// g[s], with the members of s renumbered 0..|s|-1 in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// g[V - s].
inline Graph remove_vertices(const Graph& g, VertexSet s) {
  return induced_subgraph(g, g.vertices() - s);
}

/// Vertex v of g becomes vertex position[v] of the result; position must be
/// a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const int> position);

/// Maps every member of s through position.
VertexSet relabel(VertexSet s, std::span<const int> position);

}  // namespace qpkit
