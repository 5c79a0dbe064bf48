#include <random>
#include <thread>

#include "doctest.h"
#include "oracles.hpp"
#include "qpkit/constructions.hpp"
#include "qpkit/error.hpp"
#include "qpkit/graph6.hpp"
#include "qpkit/harness.hpp"
#include "qpkit/invariants.hpp"
#include "qpkit/prime_sets.hpp"
#include "qpkit/recognizer.hpp"

using namespace qpkit;

namespace {

RecognizerConfig accelerated(bool shortcut) {
  RecognizerConfig config;
  config.mode = Mode::Accelerated;
  config.perfect_shortcut = shortcut;
  return config;
}

// ω(G) = ω(G[V-PI]) + 1 at every level of the certificate.
void check_omega_steps(const Graph& g, const QpCertificate& cert) {
  if (cert.leaf) return;
  const Graph residue = remove_vertices(g, cert.pi);
  REQUIRE(clique_number(g) == clique_number(residue) + 1);
  check_omega_steps(residue, *cert.pi_child);
  check_omega_steps(remove_vertices(g, cert.pk), *cert.pk_child);
}

}  // namespace

TEST_CASE("K0 is quasiperfect") {
  const auto outcome = is_quasiperfect(Graph{});
  CHECK(outcome.quasiperfect);
  REQUIRE(outcome.certificate.has_value());
  CHECK(outcome.certificate->leaf);
}

TEST_CASE("C5 is not quasiperfect in either mode") {
  const auto pure = is_quasiperfect(Graph::cycle(5), Mode::Pure);
  CHECK_FALSE(pure.quasiperfect);
  CHECK_FALSE(pure.certificate.has_value());
  CHECK_FALSE(is_quasiperfect(Graph::cycle(5), Mode::Accelerated).quasiperfect);
  CHECK(oracle::quasiperfect(Graph::cycle(5)) == false);
}

TEST_CASE("the single-wing family graph is quasiperfect") {
  const FamilyGraph fg = odd_cycle_family({5, {1}});
  const auto outcome = is_quasiperfect(fg.graph);
  REQUIRE(outcome.quasiperfect);
  const QpCertificate& cert = *outcome.certificate;
  CHECK(verify_certificate(fg.graph, cert).valid());
  // The certified PK is a genuine prime clique ({v3}); the paper's triangle
  // {w1, v1, v2} would fail the covering clause.
  CHECK(is_prime_clique(fg.graph, cert.pk));
  CHECK(cert.pk == VertexSet{fg.v(3)});
  CHECK(cert.pi == VertexSet{fg.v(1)});
}

TEST_CASE("recognizer agrees with the literal definition on n <= 6") {
  Recognizer recognizer;
  std::map<std::string, bool> memo;
  for (const Graph& g : enumerate_graphs_up_to(6)) {
    REQUIRE(recognizer.decide(g) == oracle::quasiperfect(g, memo));
  }
}

TEST_CASE("pure and accelerated modes agree on n <= 6") {
  Recognizer pure;
  Recognizer fast(accelerated(false));
  Recognizer fastest(accelerated(true));
  for (const Graph& g : enumerate_graphs_up_to(6)) {
    const auto a = pure.recognize(g);
    const auto b = fast.recognize(g);
    const auto c = fastest.recognize(g);
    REQUIRE(a.quasiperfect == b.quasiperfect);
    REQUIRE(a.quasiperfect == c.quasiperfect);
    if (a.quasiperfect) {
      CHECK(certificate_to_json(g, *a.certificate) == certificate_to_json(g, *b.certificate));
      CHECK(verify_certificate(g, *c.certificate).valid());
    }
  }
}

TEST_CASE("checkable forms of both theorems on n <= 6") {
  Recognizer recognizer;
  for (const Graph& g : enumerate_graphs_up_to(6)) {
    const auto outcome = recognizer.recognize(g);
    CHECK(outcome.quasiperfect == recognizer.decide(complement(g)));
    if (!outcome.quasiperfect) continue;
    CHECK(clique_number(g) == chromatic_number(g));
    REQUIRE(verify_certificate(g, *outcome.certificate).valid());
    check_omega_steps(g, *outcome.certificate);
  }
}

TEST_CASE("certificates depend only on the graph") {
  const auto graphs = enumerate_graphs_up_to(6);
  Recognizer sequential;
  std::vector<std::string> expected;
  for (const Graph& g : graphs) {
    const auto o = sequential.recognize(g);
    expected.push_back(o.quasiperfect ? certificate_to_json(g, *o.certificate).dump() : "-");
  }

  // Same graphs, reverse order, four threads on one shared memo.
  Recognizer shared;
  std::vector<std::string> got(graphs.size());
  std::vector<std::thread> workers;
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = graphs.size(); i-- > 0;) {
        if (static_cast<int>(i % 4) != w) continue;
        const auto o = shared.recognize(graphs[i]);
        got[i] = o.quasiperfect ? certificate_to_json(graphs[i], *o.certificate).dump() : "-";
      }
    });
  }
  for (auto& t : workers) t.join();
  CHECK(got == expected);
}

TEST_CASE("certificates follow relabeling") {
  std::mt19937 rng(99);
  const FamilyGraph fg = odd_cycle_family({7, {1, 4}});
  Recognizer recognizer;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> perm(static_cast<std::size_t>(fg.graph.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph g = relabel(fg.graph, perm);
    const auto outcome = recognizer.recognize(g);
    REQUIRE(outcome.quasiperfect);
    CHECK(verify_certificate(g, *outcome.certificate).valid());
  }
  CHECK(recognizer.recognize(fg.graph).stats.memo_hits > 0);
}

TEST_CASE("limits") {
  CHECK_THROWS_AS(is_quasiperfect(Graph::empty(13)), LimitError);
  RecognizerConfig config;
  config.vertex_limit = 14;
  Recognizer wide(config);
  CHECK(wide.decide(Graph::empty(13)));

  RecognizerConfig tiny;
  tiny.memo_capacity = 2;
  Recognizer cramped(tiny);
  CHECK_THROWS_AS(cramped.decide(Graph::cycle(6)), LimitError);
  CHECK_THROWS_AS(Recognizer(RecognizerConfig{Mode::Pure, Reading::Conjunctive, false, 65}),
                  InvalidArgument);
}

TEST_CASE("the disjunctive reading accepts a superset") {
  RecognizerConfig loose;
  loose.reading = Reading::Disjunctive;
  Recognizer disjunctive(loose);
  Recognizer conjunctive;
  for (const Graph& g : enumerate_graphs_up_to(6)) {
    if (conjunctive.decide(g)) CHECK(disjunctive.decide(g));
  }
}

TEST_CASE("stats") {
  Recognizer recognizer;
  const Graph g = odd_cycle_family({5, {1, 3}}).graph;
  const auto first = recognizer.recognize(g);
  CHECK(first.stats.nodes_explored > 0);
  const auto second = recognizer.recognize(g);
  CHECK(second.stats.nodes_explored == 0);
  CHECK(second.stats.memo_hits >= 1);
  CHECK(recognizer.memo_size() > 0);
}
