#include <string>

#include "qpkit/constructions.hpp"
#include "qpkit/error.hpp"
#include "qpkit/graph6.hpp"
#include "qpkit/invariants.hpp"
#include "qpkit/perfect.hpp"
#include "qpkit/prime_sets.hpp"

namespace qpkit {

Replication replicate_tracked(const Graph& g, const std::vector<int>& t) {
  if (static_cast<int>(t.size()) != g.order()) {
    throw InvalidArgument("replicate: need one multiplicity per vertex");
  }
  Replication out;
  for (int v = 0; v < g.order(); ++v) {
    if (t[v] < 0) throw InvalidArgument("replicate: negative multiplicity");
    for (int c = 0; c < t[v]; ++c) out.origin.push_back(v);
  }
  const int total = static_cast<int>(out.origin.size());
  if (total > kMaxVertices) {
    throw LimitError("replicate: " + std::to_string(total) + " vertices exceed " +
                     std::to_string(kMaxVertices));
  }
  Graph::Builder b(total);
  for (int x = 0; x < total; ++x) {
    for (int y = x + 1; y < total; ++y) {
      const int a = out.origin[x];
      const int c = out.origin[y];
      if (a == c || g.adjacent(a, c)) b.add_edge(x, y);
    }
  }
  out.graph = std::move(b).build();
  return out;
}

Graph replicate(const Graph& g, const std::vector<int>& t) {
  return replicate_tracked(g, t).graph;
}

LovaszExtraction lovasz_prime_clique_detailed(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("lovasz_prime_clique: empty graph");
  if (!is_perfect(g)) throw InvalidArgument("lovasz_prime_clique: graph is not perfect");

  LovaszExtraction out;
  const auto independent_sets = maximum_independent_sets(g);
  out.maximum_independent_set_count = static_cast<int>(independent_sets.size());
  out.multiplicities.assign(static_cast<std::size_t>(g.order()), 0);
  for (VertexSet s : independent_sets) {
    for (int v : s) ++out.multiplicities[v];
  }

  const Replication blown = replicate_tracked(g, out.multiplicities);
  const VertexSet clique = a_maximum_clique(blown.graph);
  out.replicated_omega = clique.size();
  out.replicated_chi = chromatic_number(blown.graph);
  if (out.replicated_omega != out.maximum_independent_set_count ||
      out.replicated_chi != out.maximum_independent_set_count) {
    throw Error("lovasz_prime_clique: blow-up has omega=" + std::to_string(out.replicated_omega) +
                ", chi=" + std::to_string(out.replicated_chi) + ", expected " +
                std::to_string(out.maximum_independent_set_count) + " for " + emit_graph6(g));
  }
  for (int x : clique) out.prime_clique.insert(blown.origin[x]);
  if (const auto defect = check_prime_clique(g, out.prime_clique); defect != PrimeSetDefect::None) {
    throw Error(std::string("lovasz_prime_clique: projection is not a prime clique (") +
                to_string(defect) + ") for " + emit_graph6(g));
  }
  return out;
}

VertexSet lovasz_prime_clique(const Graph& g) { return lovasz_prime_clique_detailed(g).prime_clique; }

Graph remark_counterexample(int t) {
  if (t < 1) throw InvalidArgument("c5blowup: t must be >= 1");
  if (5 * t + 1 > kMaxVertices) throw LimitError("c5blowup: t too large");
  Graph::Builder b(5 * t + 1);
  const auto copy = [t](int cycle_vertex, int c) { return cycle_vertex * t + c; };
  for (int i = 0; i < 5; ++i) {
    for (int c = 0; c < t; ++c) {
      for (int d = c + 1; d < t; ++d) b.add_edge(copy(i, c), copy(i, d));
      for (int d = 0; d < t; ++d) b.add_edge(copy(i, c), copy((i + 1) % 5, d));
    }
  }
  const int extra = 5 * t;
  for (int c = 0; c < t; ++c) {
    b.add_edge(extra, copy(0, c));
    b.add_edge(extra, copy(1, c));
  }
  return std::move(b).build();
}

}  // namespace qpkit
