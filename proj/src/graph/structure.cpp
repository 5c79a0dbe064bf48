#include "qpkit/structure.hpp"

#include <algorithm>
#include <utility>

namespace qpkit {
namespace {

class BlockFinder {
 public:
  explicit BlockFinder(const Graph& g)
      : g_(g), disc_(static_cast<std::size_t>(g.order()), -1),
        low_(static_cast<std::size_t>(g.order()), 0) {}

  std::vector<VertexSet> run() {
    for (int v = 0; v < g_.order(); ++v) {
      if (disc_[v] >= 0) continue;
      if (g_.degree(v) == 0) {
        disc_[v] = time_++;
        blocks_.push_back(VertexSet{v});
        continue;
      }
      visit(v, -1);
    }
    return blocks_;
  }

 private:
  void visit(int v, int parent) {
    disc_[v] = low_[v] = time_++;
    for (int w : g_.neighbors(v)) {
      if (disc_[w] < 0) {
        edges_.emplace_back(v, w);
        visit(w, v);
        low_[v] = std::min(low_[v], low_[w]);
        if (low_[w] >= disc_[v]) {
          VertexSet block;
          while (true) {
            auto [a, b] = edges_.back();
            edges_.pop_back();
            block.insert(a);
            block.insert(b);
            if (a == v && b == w) break;
          }
          blocks_.push_back(block);
        }
      } else if (w != parent && disc_[w] < disc_[v]) {
        edges_.emplace_back(v, w);
        low_[v] = std::min(low_[v], disc_[w]);
      }
    }
  }

  const Graph& g_;
  std::vector<int> disc_;
  std::vector<int> low_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<VertexSet> blocks_;
  int time_ = 0;
};

}  // namespace

int connected_component_count(const Graph& g) {
  VertexSet unseen = g.vertices();
  int count = 0;
  while (!unseen.empty()) {
    ++count;
    VertexSet frontier{unseen.first()};
    VertexSet reached = frontier;
    while (!frontier.empty()) {
      VertexSet next;
      for (int v : frontier) next |= g.neighbors(v);
      frontier = next - reached;
      reached |= next;
    }
    unseen -= reached;
  }
  return count;
}

bool is_forest(const Graph& g) {
  return g.edge_count() == g.order() - connected_component_count(g);
}

std::vector<VertexSet> biconnected_components(const Graph& g) { return BlockFinder(g).run(); }

bool is_block_graph(const Graph& g) {
  for (VertexSet block : biconnected_components(g)) {
    if (!g.is_clique(block)) return false;
  }
  return true;
}

}  // namespace qpkit
