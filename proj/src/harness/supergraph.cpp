#include <set>
#include <string>

#include "qpkit/error.hpp"
#include "qpkit/harness.hpp"

namespace qpkit {
namespace {

Graph attach(const Graph& g, VertexSet neighbourhood) {
  const int n = g.order();
  Graph::Builder b(n + 1);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (int u : neighbourhood) b.add_edge(u, n);
  return std::move(b).build();
}

}  // namespace

std::optional<SupergraphWitness> minimal_qp_supergraph(const Graph& g, int k_max,
                                                       Recognizer& recognizer) {
  if (k_max < 0) throw InvalidArgument("supergraph: k_max must be >= 0");
  if (g.order() + k_max > recognizer.config().vertex_limit) {
    throw LimitError("supergraph: n + k_max = " + std::to_string(g.order() + k_max) +
                     " exceeds recognition limit " +
                     std::to_string(recognizer.config().vertex_limit));
  }
  // g stays induced on vertices 0..n-1 of every candidate, and isomorphic
  // candidates share a verdict, so one candidate per class is enough.
  std::vector<Graph> frontier{g};
  for (int added = 0; added <= k_max; ++added) {
    for (const Graph& candidate : frontier) {
      if (recognizer.decide(candidate)) return SupergraphWitness{candidate, added};
    }
    if (added == k_max) break;
    std::vector<Graph> next;
    std::set<CanonicalKey> seen;
    for (const Graph& base : frontier) {
      const int n = base.order();
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        Graph grown = attach(base, VertexSet(mask));
        if (seen.insert(canonical_key(grown)).second) next.push_back(std::move(grown));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

std::optional<SupergraphWitness> minimal_qp_supergraph(const Graph& g, int k_max) {
  RecognizerConfig config;
  config.vertex_limit = std::max(kDefaultRecognitionLimit, g.order() + k_max);
  Recognizer recognizer(config);
  return minimal_qp_supergraph(g, k_max, recognizer);
}

}  // namespace qpkit
