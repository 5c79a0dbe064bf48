#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "qpkit/canonical.hpp"
#include "qpkit/error.hpp"
#include "qpkit/graph6.hpp"
#include "qpkit/harness.hpp"
#include "qpkit/invariants.hpp"
#include "qpkit/perfect.hpp"
#include "qpkit/structure.hpp"

using namespace qpkit;

namespace {

Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
  std::bernoulli_distribution edge(p);
  Graph::Builder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (edge(rng)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

std::vector<int> random_permutation(std::mt19937& rng, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

std::vector<Graph> small_graphs() { return enumerate_graphs_up_to(6); }

}  // namespace

TEST_CASE("graph6 decodes the trivial graphs") {
  CHECK(parse_graph6("?").order() == 0);
  const Graph k1 = parse_graph6("@");
  CHECK(k1.order() == 1);
  CHECK(k1.edge_count() == 0);
  CHECK(emit_graph6(Graph{}) == oracle::graph6(Graph{}));
  CHECK(emit_graph6(Graph{}) == "?");
  CHECK(emit_graph6(Graph::empty(1)) == "@");
}

TEST_CASE("graph6 agrees with the reference encoder") {
  CHECK(emit_graph6(Graph::cycle(5)) == oracle::graph6(Graph::cycle(5)));
  CHECK(emit_graph6(Graph::complete(4)) == "C~");
  CHECK(emit_graph6(Graph::path(4)) == oracle::graph6(Graph::path(4)));
  // Long header for n >= 63.
  const Graph big = Graph::cycle(63);
  const std::string code = emit_graph6(big);
  CHECK(code == oracle::graph6(big));
  CHECK(code.substr(0, 4) == std::string{'~', 63, 63 + 0, static_cast<char>(63 + 63)});
  CHECK(parse_graph6(code) == big);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);      // trailing garbage
  CHECK_THROWS_AS(parse_graph6("D"), ParseError);        // truncated
  CHECK_THROWS_AS(parse_graph6("B "), ParseError);       // byte below 63
  CHECK_THROWS_AS(parse_graph6("~?"), ParseError);       // truncated long header
  CHECK_THROWS_AS(parse_graph6("A@"), ParseError);       // padding bit set (K2 is "A_")
  CHECK(parse_graph6("A_").edge_count() == 1);
  CHECK(parse_graph6("A_\n").edge_count() == 1);
  CHECK_THROWS_AS(parse_graph6(emit_graph6(Graph::cycle(10)), 8), LimitError);
}

TEST_CASE("graph6 round trips") {
  for (const Graph& g : small_graphs()) {
    const std::string s = emit_graph6(g);
    CHECK(emit_graph6(parse_graph6(s)) == s);
  }
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> order(0, 10);
  for (int i = 0; i < 500; ++i) {
    const Graph g = random_graph(rng, order(rng));
    REQUIRE(parse_graph6(emit_graph6(g)) == g);
  }
}

TEST_CASE("edge-list format") {
  const Graph g = parse_edge_list("5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
  CHECK(g == Graph::cycle(5));
  CHECK(parse_edge_list(emit_edge_list(g)) == g);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), ParseError);
  std::istringstream two("2 1\n0 1\n3 0\n");
  CHECK(read_edge_lists(two).size() == 2);
}

TEST_CASE("complement") {
  CHECK(complement(Graph::complete(3)) == Graph::empty(3));
  CHECK(canonical_key(complement(Graph::cycle(5))) == canonical_key(Graph::cycle(5)));
  for (const Graph& g : small_graphs()) CHECK(complement(complement(g)) == g);
}

TEST_CASE("induced subgraphs") {
  const Graph c5 = Graph::cycle(5);
  CHECK(canonical_key(remove_vertices(c5, VertexSet{2})) == canonical_key(Graph::path(4)));
  CHECK(induced_subgraph(c5, {}).order() == 0);
  CHECK(induced_subgraph(c5, c5.vertices()) == c5);
  CHECK_THROWS_AS(induced_subgraph(c5, VertexSet{7}), InvalidArgument);
  // Order-preserving renumbering: {1,3,4} -> 0,1,2 keeps only the edge 3-4.
  const Graph h = induced_subgraph(c5, VertexSet{1, 3, 4});
  CHECK(h.edges() == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("canonical keys") {
  const Graph p3a = Graph::path(3);
  const std::vector<std::pair<int, int>> other{{0, 2}, {2, 1}};
  const Graph p3b = Graph::from_edges(3, other);
  CHECK(canonical_key(p3a) == canonical_key(p3b));
  CHECK(canonical_key(p3a) != canonical_key(Graph::complete(3)));

  std::set<CanonicalKey> keys;
  for (const Graph& g : oracle::all_labeled(4)) keys.insert(canonical_key(g));
  CHECK(keys.size() == 11);
}

TEST_CASE("canonical key equality matches isomorphism (permutation oracle, n <= 5)") {
  for (int n = 0; n <= 5; ++n) {
    std::map<std::string, CanonicalKey> seen;
    std::set<CanonicalKey> distinct;
    for (const Graph& g : oracle::all_labeled(n)) {
      const std::string reference = oracle::permutation_canon(g);
      const CanonicalKey key = canonical_key(g);
      auto [it, fresh] = seen.emplace(reference, key);
      if (!fresh) REQUIRE(it->second == key);
      distinct.insert(key);
    }
    CHECK(distinct.size() == seen.size());
  }
}

TEST_CASE("canonical key is relabeling invariant (n <= 8)") {
  std::mt19937 rng(777);
  for (int n = 1; n <= 8; ++n) {
    for (int trial = 0; trial < 10; ++trial) {
      const Graph g = random_graph(rng, n, 0.4);
      const CanonicalForm form = canonical_form(g);
      CHECK(relabel(g, form.labeling) == graph_of(form.key));
      for (int i = 0; i < 100; ++i) {
        REQUIRE(canonical_key(oracle::permute(g, random_permutation(rng, n))) == form.key);
      }
    }
  }
  // Highly symmetric inputs exercise the twin pruning.
  CHECK(canonical_key(Graph::empty(16)) == canonical_key(Graph::empty(16)));
  CHECK(canonical_key(Graph::complete(20)).bytes() == emit_graph6(Graph::complete(20)));
}

TEST_CASE("clique number, independence number, chromatic number") {
  CHECK(clique_number(Graph::complete(5)) == 5);
  CHECK(clique_number(Graph::cycle(5)) == 2);
  CHECK(independence_number(Graph::empty(4)) == 4);
  CHECK(independence_number(Graph::complete(6)) == 1);
  CHECK(independence_number(Graph::cycle(5)) == 2);
  CHECK(chromatic_number(Graph::cycle(5)) == 3);
  CHECK(chromatic_number(Graph::complete(4)) == 4);
  CHECK(chromatic_number(Graph::path(4)) == 2);
  CHECK(invariants(Graph{}) == InvariantTriple{0, 0, 0});
  CHECK(oracle::chi(Graph::cycle(5)) == 3);
  CHECK(oracle::omega(Graph::cycle(5)) == 2);
}

TEST_CASE("invariants agree with brute force on every graph with n <= 6") {
  for (const Graph& g : small_graphs()) {
    const InvariantTriple t = invariants(g);
    REQUIRE(t.omega == oracle::omega(g));
    REQUIRE(t.alpha == oracle::alpha(g));
    REQUIRE(t.chi == oracle::chi(g));
    CHECK(t.omega <= t.chi);
    CHECK(t.chi <= g.order());
    CHECK(t.alpha == clique_number(complement(g)));
    if (t.alpha > 0) CHECK(t.chi >= (g.order() + t.alpha - 1) / t.alpha);
    const auto colours = minimum_colouring(g);
    CHECK(is_proper_colouring(g, colours));
    CHECK(colours_used(colours) == t.chi);
  }
}

TEST_CASE("maximum cliques and independent sets") {
  CHECK(maximum_cliques(Graph{}).empty());
  CHECK(maximum_cliques(Graph::complete(3)) == std::vector<VertexSet>{VertexSet{0, 1, 2}});
  CHECK(maximum_cliques(Graph::cycle(5)).size() == 5);
  CHECK(maximum_independent_sets(Graph::cycle(5)).size() == 5);
  CHECK(maximum_independent_sets(Graph::complete(4)).size() == 4);
  CHECK(maximum_independent_sets(Graph::empty(3)) == std::vector<VertexSet>{VertexSet{0, 1, 2}});

  for (const Graph& g : small_graphs()) {
    const auto cliques = maximum_cliques(g);
    auto expected = oracle::max_cliques(g);
    std::vector<std::uint64_t> got;
    for (VertexSet s : cliques) {
      CHECK(g.is_clique(s));
      CHECK(s.size() == clique_number(g));
      got.push_back(s.bits());
    }
    CHECK(std::is_sorted(cliques.begin(), cliques.end(), lex_less));
    std::sort(got.begin(), got.end());
    REQUIRE(got == expected);
  }
}

TEST_CASE("forests and block graphs") {
  CHECK(is_forest(Graph::path(4)));
  CHECK_FALSE(is_forest(Graph::cycle(5)));
  CHECK(is_forest(Graph{}));
  CHECK(is_block_graph(Graph{}));
  CHECK(is_block_graph(Graph::path(6)));
  CHECK_FALSE(is_block_graph(Graph::cycle(5)));
  CHECK(is_block_graph(Graph::complete(5)));
  // Two triangles sharing a vertex: a block graph; a diamond is not.
  const std::vector<std::pair<int, int>> bowtie{{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}};
  CHECK(is_block_graph(Graph::from_edges(5, bowtie)));
  const std::vector<std::pair<int, int>> diamond{{0, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 3}};
  CHECK_FALSE(is_block_graph(Graph::from_edges(4, diamond)));
  for (const Graph& g : small_graphs()) {
    if (is_forest(g)) CHECK(is_block_graph(g));
  }
}

TEST_CASE("perfection") {
  CHECK_FALSE(is_perfect(Graph::cycle(5)));
  CHECK(is_perfect(Graph::path(4)));
  CHECK(is_perfect(Graph::cycle(6)));
  CHECK(is_perfect(Graph{}));
  CHECK_THROWS_AS(is_perfect(Graph::empty(11)), LimitError);
  PerfectionChecker wide(12);
  CHECK(wide.is_perfect(Graph::empty(11)));
  CHECK(oracle::perfect(Graph::cycle(6)));
  CHECK_FALSE(oracle::perfect(Graph::cycle(5)));
}

TEST_CASE("perfection agrees with the unmemoized definition on n <= 6") {
  PerfectionChecker checker;
  for (const Graph& g : small_graphs()) REQUIRE(checker.is_perfect(g) == oracle::perfect(g));
}
