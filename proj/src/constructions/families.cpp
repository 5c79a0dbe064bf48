#include <sstream>

#include "qpkit/constructions.hpp"
#include "qpkit/error.hpp"
#include "qpkit/graph6.hpp"
#include "qpkit/prime_sets.hpp"
#include "qpkit/structure.hpp"

namespace qpkit {

void FamilySpec::validate() const {
  if (n < 5 || n % 2 == 0) {
    throw InvalidArgument("family: cycle length must be odd and >= 5, got " + std::to_string(n));
  }
  if (positions.empty()) throw InvalidArgument("family: at least one attachment position needed");
  if (n + static_cast<int>(positions.size()) > kMaxVertices) {
    throw LimitError("family: graph would exceed " + std::to_string(kMaxVertices) + " vertices");
  }
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 1 || positions[i] > n) {
      throw InvalidArgument("family: position " + std::to_string(positions[i]) +
                            " outside 1.." + std::to_string(n));
    }
    if (i > 0 && positions[i] <= positions[i - 1]) {
      throw InvalidArgument("family: positions must be strictly increasing");
    }
  }
}

std::string FamilySpec::notation() const {
  std::ostringstream out;
  out << "family n=" << n << " k={";
  for (std::size_t i = 0; i < positions.size(); ++i) out << (i ? "," : "") << positions[i];
  out << '}';
  return out.str();
}

std::string FamilyGraph::label(int vertex) const {
  for (int i = 1; i <= spec.n; ++i) {
    if (cycle[i - 1] == vertex) return "v" + std::to_string(i);
  }
  for (auto [k, idx] : wings) {
    if (idx == vertex) return "w" + std::to_string(k);
  }
  return "?" + std::to_string(vertex);
}

std::string FamilyGraph::label(VertexSet s) const {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    out += (first ? "" : ",") + label(v);
    first = false;
  }
  return out + "}";
}

FamilyGraph odd_cycle_family(const FamilySpec& spec) {
  spec.validate();
  FamilyGraph fg;
  fg.spec = spec;
  const int o = static_cast<int>(spec.positions.size());
  Graph::Builder b(spec.n + o);
  for (int i = 1; i <= spec.n; ++i) fg.cycle.push_back(i - 1);
  for (int i = 1; i <= spec.n; ++i) b.add_edge(fg.v(i), fg.v(i + 1));
  int next = spec.n;
  for (int k : spec.positions) {
    fg.wings[k] = next;
    b.add_edge(next, fg.v(k));
    b.add_edge(next, fg.v(k + 1));
    ++next;
  }
  fg.graph = std::move(b).build();
  return fg;
}

VertexSet family_prime_clique(const FamilyGraph& fg) {
  const int k = fg.spec.positions.front();
  return VertexSet{fg.w(k), fg.v(k), fg.v(k + 1)};
}

const char* to_string(PiRoute route) {
  switch (route) {
    case PiRoute::AllPositions: return "all-positions-formula";
    case PiRoute::GreedyRepair: return "greedy-repair";
    case PiRoute::ExhaustiveFallback: return "exhaustive-fallback";
  }
  return "unknown";
}

VertexSet greedy_repair(const FamilyGraph& fg) {
  std::vector<int> kept;
  for (int k : fg.spec.positions) {
    const int v = fg.v(k);
    if (!kept.empty() && fg.graph.adjacent(kept.back(), v)) continue;
    kept.push_back(v);
  }
  if (kept.size() >= 2 && fg.graph.adjacent(kept.back(), kept.front())) kept.pop_back();
  return VertexSet::from_vertices(kept);
}

namespace {

bool acceptable(const Graph& g, VertexSet pi) {
  return is_prime_independent_set(g, pi) && is_forest(remove_vertices(g, pi));
}

}  // namespace

FamilyPrimeIndependentSet family_prime_independent_set(const FamilyGraph& fg) {
  const int n = fg.spec.n;
  const bool all_positions = static_cast<int>(fg.spec.positions.size()) == n;

  VertexSet candidate;
  if (all_positions) {
    candidate.insert(fg.w(n));
    for (int i = 2; i < n; i += 2) candidate.insert(fg.v(i));
  } else {
    candidate = greedy_repair(fg);
  }
  if (acceptable(fg.graph, candidate)) {
    return {candidate, all_positions ? PiRoute::AllPositions : PiRoute::GreedyRepair};
  }

  PrimeSetSequence sequence(fg.graph, PrimeSetKind::PrimeIndependentSet);
  while (auto s = sequence.next()) {
    if (is_forest(remove_vertices(fg.graph, *s))) return {*s, PiRoute::ExhaustiveFallback};
  }
  throw Error("family: no prime independent set with a forest residue for " +
              fg.spec.notation() + " (" + emit_graph6(fg.graph) + ")");
}

}  // namespace qpkit
