#include "qpkit/invariants.hpp"

#include <algorithm>
#include <set>

namespace qpkit {
namespace {

// Greedy sequential colouring of the candidate set; order[i] gets bound[i],
// and bound is non-decreasing along order.
void colour_bound(const Graph& g, VertexSet candidates, std::vector<int>& order,
                  std::vector<int>& bound) {
  order.clear();
  bound.clear();
  int colour = 0;
  VertexSet uncoloured = candidates;
  while (!uncoloured.empty()) {
    ++colour;
    VertexSet available = uncoloured;
    while (!available.empty()) {
      const int v = available.first();
      available -= g.neighbors(v).with(v);
      uncoloured.erase(v);
      order.push_back(v);
      bound.push_back(colour);
    }
  }
}

void max_clique_search(const Graph& g, VertexSet candidates, VertexSet current, VertexSet& best) {
  std::vector<int> order;
  std::vector<int> bound;
  colour_bound(g, candidates, order, bound);
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
    if (current.size() + bound[i] <= best.size()) return;
    const int v = order[i];
    const VertexSet grown = current.with(v);
    const VertexSet next = candidates & g.neighbors(v);
    if (next.empty()) {
      if (grown.size() > best.size()) best = grown;
    } else {
      max_clique_search(g, next, grown, best);
    }
    candidates.erase(v);
  }
}

void collect_cliques(const Graph& g, int target, VertexSet current, VertexSet candidates,
                     std::vector<VertexSet>& out) {
  if (current.size() == target) {
    out.push_back(current);
    return;
  }
  while (!candidates.empty() && current.size() + candidates.size() >= target) {
    const int v = candidates.first();
    candidates.erase(v);
    collect_cliques(g, target, current.with(v), candidates & g.neighbors(v), out);
  }
}

class DsaturColouring {
 public:
  DsaturColouring(const Graph& g, int k)
      : g_(g), k_(k), colour_(static_cast<std::size_t>(g.order()), -1),
        seen_(static_cast<std::size_t>(g.order()), 0) {}

  bool solve() { return assign(0, 0); }
  const std::vector<int>& colours() const { return colour_; }

 private:
  int pick() const {
    int best = -1;
    int best_sat = -1;
    int best_deg = -1;
    for (int v = 0; v < g_.order(); ++v) {
      if (colour_[v] >= 0) continue;
      const int sat = std::popcount(seen_[v]);
      int deg = 0;
      for (int w : g_.neighbors(v)) deg += colour_[w] < 0 ? 1 : 0;
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  bool assign(int done, int used) {
    if (done == g_.order()) return true;
    const int v = pick();
    const int limit = std::min(k_, used + 1);
    for (int c = 0; c < limit; ++c) {
      if ((seen_[v] >> c) & 1U) continue;
      std::vector<std::uint64_t> saved;
      saved.reserve(g_.degree(v));
      colour_[v] = c;
      for (int w : g_.neighbors(v)) {
        saved.push_back(seen_[w]);
        seen_[w] |= std::uint64_t{1} << c;
      }
      if (assign(done + 1, std::max(used, c + 1))) return true;
      std::size_t i = 0;
      for (int w : g_.neighbors(v)) seen_[w] = saved[i++];
      colour_[v] = -1;
    }
    return false;
  }

  const Graph& g_;
  int k_;
  std::vector<int> colour_;
  std::vector<std::uint64_t> seen_;
};

std::vector<int> greedy_dsatur(const Graph& g) {
  DsaturColouring unbounded(g, g.order());
  unbounded.solve();
  return unbounded.colours();
}

}  // namespace

int clique_number(const Graph& g) { return a_maximum_clique(g).size(); }

VertexSet a_maximum_clique(const Graph& g) {
  if (g.order() == 0) return {};
  VertexSet best;
  max_clique_search(g, g.vertices(), {}, best);
  // Branch and bound finds some maximum clique; report the lexicographically
  // first for determinism.
  std::vector<VertexSet> all;
  collect_cliques(g, best.size(), {}, g.vertices(), all);
  return all.front();
}

int independence_number(const Graph& g) { return clique_number(complement(g)); }

std::vector<VertexSet> maximum_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.order() == 0) return out;
  VertexSet best;
  max_clique_search(g, g.vertices(), {}, best);
  collect_cliques(g, best.size(), {}, g.vertices(), out);
  return out;
}

std::vector<VertexSet> maximum_independent_sets(const Graph& g) {
  return maximum_cliques(complement(g));
}

std::optional<std::vector<int>> colour_with(const Graph& g, int k) {
  if (g.order() == 0) return std::vector<int>{};
  if (k <= 0) return std::nullopt;
  DsaturColouring search(g, k);
  if (!search.solve()) return std::nullopt;
  return search.colours();
}

std::vector<int> minimum_colouring(const Graph& g) {
  if (g.order() == 0) return {};
  std::vector<int> best = greedy_dsatur(g);
  const int upper = colours_used(best);
  for (int k = clique_number(g); k < upper; ++k) {
    if (auto found = colour_with(g, k)) return *found;
  }
  return best;
}

int chromatic_number(const Graph& g) { return colours_used(minimum_colouring(g)); }

InvariantTriple invariants(const Graph& g) {
  return {clique_number(g), independence_number(g), chromatic_number(g)};
}

bool is_proper_colouring(const Graph& g, const std::vector<int>& colours) {
  if (static_cast<int>(colours.size()) != g.order()) return false;
  for (auto [u, v] : g.edges()) {
    if (colours[u] == colours[v]) return false;
  }
  return std::all_of(colours.begin(), colours.end(), [](int c) { return c >= 0; });
}

int colours_used(const std::vector<int>& colours) {
  return static_cast<int>(std::set<int>(colours.begin(), colours.end()).size());
}

}  // namespace qpkit
