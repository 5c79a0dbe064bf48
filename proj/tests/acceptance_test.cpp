// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Time limits are wall-clock, single-threaded.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>

#include "qpkit/constructions.hpp"
#include "qpkit/harness.hpp"
#include "qpkit/invariants.hpp"
#include "qpkit/prime_sets.hpp"
#include "qpkit/recognizer.hpp"
#include "qpkit/structure.hpp"

using namespace qpkit;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(const char* id, const char* title, double limit_s, const std::function<Check()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Check result;
  try {
    result = body();
  } catch (const std::exception& e) {
    result = {false, std::string("exception: ") + e.what()};
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = limit_s <= 0 || seconds < limit_s;
  const bool pass = result.ok && in_time;
  if (!pass) ++failures;
  std::printf("%s %s: %s (%.3f s", pass ? "PASS" : "FAIL", id, title, seconds);
  if (limit_s > 0) std::printf(", limit %.0f s", limit_s);
  std::printf(")%s%s\n", result.detail.empty() ? "" : " ", result.detail.c_str());
  std::fflush(stdout);
}

Check from_report(const SuiteReport& report, std::size_t expected_graphs) {
  std::ostringstream detail;
  detail << "graphs=" << report.graphs_scanned << " violations=" << report.violations.size();
  if (!report.violations.empty()) detail << " first=" << report.violations.front();
  return {report.passed() && report.graphs_scanned == expected_graphs, detail.str()};
}

constexpr std::size_t kGraphsUpToSix = 209;

}  // namespace

int main() {
  criterion("AC1", "quasiperfect implies omega = chi, n <= 6", 60,
            [] { return from_report(verify_theorem1(6), kGraphsUpToSix); });

  criterion("AC2", "closure under complement with re-verified certificates, n <= 6", 120,
            [] { return from_report(verify_theorem2(6), kGraphsUpToSix); });

  criterion("AC3", "perfect implies quasiperfect; replication prime cliques valid, n <= 6", 120,
            [] { return from_report(verify_perfect_subset(6), kGraphsUpToSix); });

  criterion("AC4", "odd-cycle families n in {5,7}", 300, [] {
    RecognizerConfig config;
    config.vertex_limit = 14;
    Recognizer recognizer(config);
    int families = 0, accepted = 0, block = 0, forest = 0, triangle_prime = 0;
    for (int n : {5, 7}) {
      for (int mask = 1; mask < (1 << n); ++mask) {
        FamilySpec spec{n, {}};
        for (int k = 1; k <= n; ++k) {
          if ((mask >> (k - 1)) & 1) spec.positions.push_back(k);
        }
        const FamilyGraph fg = odd_cycle_family(spec);
        ++families;
        const auto outcome = recognizer.recognize(fg.graph);
        if (outcome.quasiperfect && verify_certificate(fg.graph, *outcome.certificate)) ++accepted;
        const VertexSet pk = family_prime_clique(fg);
        if (fg.graph.is_clique(pk) && is_block_graph(remove_vertices(fg.graph, pk))) ++block;
        if (is_prime_clique(fg.graph, pk)) ++triangle_prime;
        const auto pi = family_prime_independent_set(fg);
        if (is_prime_independent_set(fg.graph, pi.set) &&
            is_forest(remove_vertices(fg.graph, pi.set))) {
          ++forest;
        }
      }
    }
    std::ostringstream detail;
    detail << "families=" << families << " quasiperfect=" << accepted
           << " block-residue=" << block << " forest-residue=" << forest
           << " (triangle passes prime-clique predicate on " << triangle_prime << ")";
    return Check{families == 158 && accepted == families && block == families && forest == families,
                 detail.str()};
  });

  criterion("AC5", "blown-up five-cycle with apex: t=3 gives 7/8, t=1 gives 3/3", 60, [] {
    const Graph big = remark_counterexample(3);
    const Graph small = remark_counterexample(1);
    const int w3 = clique_number(big), c3 = chromatic_number(big);
    const int w1 = clique_number(small), c1 = chromatic_number(small);
    std::ostringstream detail;
    detail << "t=3: omega=" << w3 << " chi=" << c3 << "; t=1: omega=" << w1 << " chi=" << c1;
    return Check{w3 == 7 && c3 == 8 && w1 == 3 && c1 == 3, detail.str()};
  });

  criterion("AC6", "C5 rejected in pure mode with no prime independent set", 1, [] {
    const Graph c5 = Graph::cycle(5);
    PrimeSetSequence sequence(c5, PrimeSetKind::PrimeIndependentSet);
    const bool empty = !sequence.next().has_value();
    const bool rejected = !is_quasiperfect(c5, Mode::Pure).quasiperfect;
    return Check{empty && rejected, std::string("sequence ") + (empty ? "empty" : "nonempty") +
                                        ", verdict " + (rejected ? "rejected" : "accepted")};
  });

  criterion("AC7", "every accepted certificate verifies and colours with omega colours, n <= 6", 0,
            [] {
              Recognizer recognizer;
              int accepted = 0, bad = 0;
              for (const Graph& g : enumerate_graphs_up_to(6)) {
                const auto outcome = recognizer.recognize(g);
                if (!outcome.quasiperfect) continue;
                ++accepted;
                if (!verify_certificate(g, *outcome.certificate)) {
                  ++bad;
                  continue;
                }
                const auto colours = colouring_from_certificate(g, *outcome.certificate);
                if (!is_proper_colouring(g, colours) || colours_used(colours) != clique_number(g)) {
                  ++bad;
                }
              }
              std::ostringstream detail;
              detail << "accepted=" << accepted << " failures=" << bad;
              return Check{accepted > 0 && bad == 0, detail.str()};
            });

  criterion("AC8", "isomorphism class counts n = 0..7", 120, [] {
    const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    std::ostringstream detail;
    bool ok = true;
    for (int n = 0; n <= 7; ++n) {
      const std::size_t count = enumerate_graphs(n).size();
      ok = ok && count == expected[n];
      detail << (n ? "," : "counts=") << count;
    }
    return Check{ok, detail.str()};
  });

  std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
