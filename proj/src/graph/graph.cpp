#include "qpkit/graph.hpp"

#include <string>

#include "qpkit/error.hpp"

namespace qpkit {

Graph::Builder::Builder(int n) {
  if (n < 0 || n > kMaxVertices) {
    throw LimitError("graph order " + std::to_string(n) + " outside 0.." +
                     std::to_string(kMaxVertices));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph::Builder& Graph::Builder::add_edge(int u, int v) {
  const int n = static_cast<int>(adj_.size());
  if (u < 0 || v < 0 || u >= n || v >= n) {
    throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                          ") out of range for n=" + std::to_string(n));
  }
  if (u == v) throw InvalidArgument("self-loop at vertex " + std::to_string(u));
  adj_[u] |= std::uint64_t{1} << v;
  adj_[v] |= std::uint64_t{1} << u;
  return *this;
}

Graph::Builder& Graph::Builder::remove_edge(int u, int v) {
  adj_[u] &= ~(std::uint64_t{1} << v);
  adj_[v] &= ~(std::uint64_t{1} << u);
  return *this;
}

Graph Graph::Builder::build() && { return Graph(std::move(adj_)); }

Graph Graph::empty(int n) { return Builder(n).build(); }

Graph Graph::complete(int n) { return complement(empty(n)); }

Graph Graph::cycle(int n) {
  Builder b(n);
  if (n >= 3) {
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  } else if (n == 2) {
    b.add_edge(0, 1);
  }
  return std::move(b).build();
}

Graph Graph::path(int n) {
  Builder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Builder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

int Graph::edge_count() const {
  int twice = 0;
  for (auto row : adj_) twice += std::popcount(row);
  return twice / 2;
}

bool Graph::is_clique(VertexSet s) const {
  for (int v : s) {
    if (!(s.without(v)).subset_of(neighbors(v))) return false;
  }
  return true;
}

bool Graph::is_independent(VertexSet s) const {
  for (int v : s) {
    if (neighbors(v).intersects(s)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph complement(const Graph& g) {
  const int n = g.order();
  Graph::Builder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) {
    throw InvalidArgument("vertex set " + s.to_string() + " exceeds graph of order " +
                          std::to_string(g.order()));
  }
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  int next = 0;
  for (int v : s) index[v] = next++;
  Graph::Builder b(next);
  for (int u : s) {
    for (int v : g.neighbors(u) & s) {
      if (u < v) b.add_edge(index[u], index[v]);
    }
  }
  return std::move(b).build();
}

Graph relabel(const Graph& g, std::span<const int> position) {
  const int n = g.order();
  Graph::Builder b(n);
  for (auto [u, v] : g.edges()) b.add_edge(position[u], position[v]);
  return std::move(b).build();
}

VertexSet relabel(VertexSet s, std::span<const int> position) {
  VertexSet out;
  for (int v : s) out.insert(position[v]);
  return out;
}

}  // namespace qpkit
