#include "qpkit/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "qpkit/graph6.hpp"

namespace qpkit {
namespace {

using Colouring = std::vector<int>;

int cell_count(const Colouring& colours) {
  return colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end()) + 1;
}

// Renames colours to dense ranks of the per-vertex signature. Ranks follow
// signature order, so the result depends only on the isomorphism class of
// (graph, colouring).
Colouring rank_by(const std::vector<std::vector<int>>& signatures) {
  std::vector<int> order(signatures.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return signatures[a] < signatures[b]; });
  Colouring colours(signatures.size());
  int rank = -1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || signatures[order[i]] != signatures[order[i - 1]]) ++rank;
    colours[order[i]] = rank;
  }
  return colours;
}

Colouring refine(const Graph& g, Colouring colours) {
  const int n = g.order();
  int cells = cell_count(colours);
  while (true) {
    std::vector<std::vector<int>> signatures(n);
    for (int v = 0; v < n; ++v) {
      auto& sig = signatures[v];
      sig.assign(static_cast<std::size_t>(cells) + 1, 0);
      sig[0] = colours[v];
      for (int w : g.neighbors(v)) ++sig[1 + colours[w]];
    }
    Colouring next = rank_by(signatures);
    const int next_cells = cell_count(next);
    colours = std::move(next);
    if (next_cells == cells) return colours;
    cells = next_cells;
  }
}

bool twins(const Graph& g, int u, int v) {
  return g.neighbors(u).without(v) == g.neighbors(v).without(u);
}

class Search {
 public:
  explicit Search(const Graph& g) : g_(g) {}

  CanonicalForm run() {
    const int n = g_.order();
    if (n == 0) return {CanonicalKey(emit_graph6(g_)), {}};
    run_from(Colouring(static_cast<std::size_t>(n), 0));
    return {CanonicalKey(best_code_), best_labeling_};
  }

 private:
  void run_from(Colouring colours) {
    colours = refine(g_, std::move(colours));
    const int n = g_.order();
    const int cells = cell_count(colours);
    if (cells == n) {
      std::string code = emit_graph6(relabel(g_, colours));
      if (best_labeling_.empty() || code < best_code_) {
        best_code_ = std::move(code);
        best_labeling_ = colours;
      }
      return;
    }

    std::vector<int> cell_size(cells, 0);
    for (int c : colours) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < cells; ++c) {
      if (cell_size[c] > 1 && (target < 0 || cell_size[c] < cell_size[target])) target = c;
    }

    std::vector<int> tried;
    for (int v = 0; v < n; ++v) {
      if (colours[v] != target) continue;
      if (std::any_of(tried.begin(), tried.end(), [&](int u) { return twins(g_, u, v); })) {
        continue;
      }
      tried.push_back(v);
      std::vector<std::vector<int>> signatures(n);
      for (int w = 0; w < n; ++w) {
        signatures[w] = {colours[w], (colours[w] == target && w != v) ? 1 : 0};
      }
      run_from(rank_by(signatures));
    }
  }

  const Graph& g_;
  std::string best_code_;
  std::vector<int> best_labeling_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return Search(g).run(); }

CanonicalKey canonical_key(const Graph& g) { return canonical_form(g).key; }

Graph graph_of(const CanonicalKey& key) { return parse_graph6(key.bytes()); }

}  // namespace qpkit
