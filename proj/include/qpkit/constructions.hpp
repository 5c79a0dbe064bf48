#pragma once

#include <map>
#include <string_view>
#include <variant>
#include <string>
#include <vector>

#include "qpkit/graph.hpp"

namespace qpkit {

/// Odd cycle v1..vn with a wing vertex w_k over the edge v_k v_{k+1} for each
/// attachment position k (1-based, v_{n+1} = v1).
struct FamilySpec {
  int n = 5;
  std::vector<int> positions;

  /// Throws InvalidArgument unless n is odd, n >= 5, and positions are
  /// strictly increasing within 1..n and nonempty.
  void validate() const;
  /// "family n=5 k={1,3}".
  std::string notation() const;
};

struct FamilyGraph {
  FamilySpec spec;
  Graph graph;
  /// cycle_vertex(i) for i in 1..n (i = n+1 wraps to 1).
  std::vector<int> cycle;                // cycle[i-1] = index of v_i
  std::map<int, int> wings;              // position k -> index of w_k

  int v(int i) const { return cycle[static_cast<std::size_t>((i - 1) % spec.n)]; }
  int w(int k) const { return wings.at(k); }
  /// "v3", "w1", by graph index.
  std::string label(int vertex) const;
  std::string label(VertexSet s) const;
};

/// Cycle vertices take indices 0..n-1 (v_i -> i-1); wings follow in
/// position order.
FamilyGraph odd_cycle_family(const FamilySpec& spec);

/// {w_k1, v_k1, v_k1+1}: the triangle over the first attachment position.
VertexSet family_prime_clique(const FamilyGraph& fg);

enum class PiRoute {
  AllPositions,       // o = n: {w_n, v2, v4, ..., v_{n-1}}
  GreedyRepair,       // o < n: thinned-out {v_k1, ..., v_ko}
  ExhaustiveFallback  // greedy result failed validation
};

const char* to_string(PiRoute route);

struct FamilyPrimeIndependentSet {
  VertexSet set;
  PiRoute route = PiRoute::AllPositions;
};

/// Prime independent set whose residue is a forest. For o = n the closed
/// formula is used. For o < n the attachment cycle vertices are scanned in
/// cyclic order, dropping each one adjacent to the last kept vertex; when
/// that set fails validation the first prime independent set with a forest
/// residue is taken instead. Throws Error when no such set exists.
FamilyPrimeIndependentSet family_prime_independent_set(const FamilyGraph& fg);

/// The greedy o < n thinning alone, unvalidated.
VertexSet greedy_repair(const FamilyGraph& fg);

struct Replication {
  Graph graph;
  std::vector<int> origin;  // origin[x] = source vertex of x
};

/// Each vertex v becomes a clique on t[v] fresh vertices (none when t[v] is
/// 0); two copies are adjacent iff they share an origin or their origins are
/// adjacent. Copies are numbered in order of origin.
Replication replicate_tracked(const Graph& g, const std::vector<int>& t);
Graph replicate(const Graph& g, const std::vector<int>& t);

struct LovaszExtraction {
  VertexSet prime_clique;
  std::vector<int> multiplicities;  // t[v] = # maximum independent sets containing v
  int maximum_independent_set_count = 0;
  int replicated_omega = 0;
  int replicated_chi = 0;
};

/// Prime clique of a perfect graph via replication: blow every vertex up by
/// the number of maximum independent sets containing it, take a maximum
/// clique of the blow-up, and project it back. Checks that the blow-up has
/// ω = χ = (number of maximum independent sets) and that the projection is
/// a prime clique; throws Error otherwise. Throws InvalidArgument for K0 or
/// imperfect input.
LovaszExtraction lovasz_prime_clique_detailed(const Graph& g);
VertexSet lovasz_prime_clique(const Graph& g);

/// C5 with every vertex replaced by a t-clique, plus one vertex joined to
/// all copies of v1 and v2. The extra vertex is last (index 5t).
Graph remark_counterexample(int t);

}  // namespace qpkit

namespace qpkit {

struct BlowupSpec {
  int t = 1;
};

/// Parses "family n=5 k=1", "family n=7 k={1,3,5}" or "c5blowup t=3".
/// Throws ParseError on malformed text; range checks are left to the
/// constructors.
std::variant<FamilySpec, BlowupSpec> parse_construction(std::string_view text);

}  // namespace qpkit
