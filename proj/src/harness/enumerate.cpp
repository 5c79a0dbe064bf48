#include <set>
#include <string>

#include "qpkit/error.hpp"
#include "qpkit/harness.hpp"

namespace qpkit {

std::vector<Graph> enumerate_graphs(int n) {
  if (n < 0 || n > kEnumerationLimit) {
    throw LimitError("enumerate_graphs: n=" + std::to_string(n) + " outside 0.." +
                     std::to_string(kEnumerationLimit) + "; feed larger orders as graph6");
  }
  std::vector<Graph> level{Graph{}};
  for (int order = 1; order <= n; ++order) {
    std::set<CanonicalKey> keys;
    for (const Graph& base : level) {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (order - 1)); ++mask) {
        Graph::Builder b(order);
        for (auto [u, v] : base.edges()) b.add_edge(u, v);
        for (int u : VertexSet(mask)) b.add_edge(u, order - 1);
        keys.insert(canonical_key(std::move(b).build()));
      }
    }
    level.clear();
    for (const auto& key : keys) level.push_back(graph_of(key));
  }
  return level;
}

std::vector<Graph> enumerate_graphs_up_to(int n_max) {
  std::vector<Graph> all;
  for (int n = 0; n <= n_max; ++n) {
    auto level = enumerate_graphs(n);
    all.insert(all.end(), level.begin(), level.end());
  }
  return all;
}

}  // namespace qpkit
