#include <algorithm>
#include <chrono>
#include <map>
#include <set>

#include "qpkit/constructions.hpp"
#include "qpkit/error.hpp"
#include "qpkit/graph6.hpp"
#include "qpkit/harness.hpp"
#include "qpkit/invariants.hpp"
#include "qpkit/parallel.hpp"
#include "qpkit/perfect.hpp"

namespace qpkit {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

constexpr std::size_t kListedFindings = 200;
constexpr int kAllColouringsLimit = 5;

RecognizerConfig pure_config(int n_max, Reading reading = Reading::Conjunctive) {
  RecognizerConfig config;
  config.mode = Mode::Pure;
  config.reading = reading;
  config.perfect_shortcut = false;
  config.vertex_limit = std::max(n_max, kDefaultRecognitionLimit);
  return config;
}

SuiteReport begin(const std::string& name, const std::string& kind, int n_max,
                  const SuiteOptions& options, const RecognizerConfig& config) {
  SuiteReport report;
  report.suite = name;
  report.kind = kind;
  report.n_max = n_max;
  report.threads = std::max(options.threads, 1);
  report.config["mode"] = to_string(config.mode);
  report.config["reading"] = to_string(config.reading);
  report.config["perfect_shortcut"] = config.perfect_shortcut;
  report.config["recognition_limit"] = config.vertex_limit;
  report.config["perfection_limit"] = options.perfection_limit;
  return report;
}

void finish(SuiteReport& report, Clock::time_point start) {
  report.runtime_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Verdicts {
  bool quasiperfect = false;
  bool violation = false;
};

Json order_table(const std::vector<Graph>& graphs, const std::vector<bool>& accepted) {
  std::map<int, std::pair<int, int>> by_order;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto& [total, qp] = by_order[graphs[i].order()];
    ++total;
    qp += accepted[i] ? 1 : 0;
  }
  Json table = Json::array();
  for (auto [n, counts] : by_order) {
    table.push_back({{"n", n}, {"graphs", counts.first}, {"quasiperfect", counts.second}});
  }
  return table;
}

}  // namespace

Json to_json(const SuiteReport& report) {
  Json doc;
  doc["schema"] = kReportSchema;
  doc["suite"] = report.suite;
  doc["kind"] = report.kind;
  doc["n_max"] = report.n_max;
  doc["graphs_scanned"] = report.graphs_scanned;
  doc["passed"] = report.passed();
  doc["violations"] = report.violations;
  doc["findings"] = report.findings;
  doc["config"] = report.config;
  doc["stats"] = {{"runtime_ms", report.runtime_ms}, {"threads", report.threads}};
  return doc;
}

SuiteReport verify_theorem1(int n_max, const SuiteOptions& options, const QpDecider& decider) {
  const auto start = Clock::now();
  Recognizer recognizer(pure_config(n_max));
  SuiteReport report = begin("theorem1", "theorem", n_max, options, recognizer.config());
  if (decider) report.config["decider"] = "override";
  const auto graphs = enumerate_graphs_up_to(n_max);

  const auto verdicts = parallel_map(graphs, options.threads, [&](const Graph& g) {
    Verdicts v;
    v.quasiperfect = decider ? decider(g) : recognizer.decide(g);
    v.violation = v.quasiperfect && clique_number(g) != chromatic_number(g);
    return v;
  });

  std::vector<bool> accepted;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    accepted.push_back(verdicts[i].quasiperfect);
    if (verdicts[i].violation) report.violations.push_back(emit_graph6(graphs[i]));
  }
  report.graphs_scanned = graphs.size();
  report.findings["quasiperfect"] = std::count(accepted.begin(), accepted.end(), true);
  report.findings["by_order"] = order_table(graphs, accepted);
  finish(report, start);
  return report;
}

SuiteReport verify_theorem2(int n_max, const SuiteOptions& options, const QpDecider& decider) {
  const auto start = Clock::now();
  Recognizer recognizer(pure_config(n_max));
  SuiteReport report = begin("theorem2", "theorem", n_max, options, recognizer.config());
  if (decider) report.config["decider"] = "override";
  const auto graphs = enumerate_graphs_up_to(n_max);

  struct Row {
    bool quasiperfect = false;
    bool verdict_mismatch = false;
    bool certificate_failure = false;
  };
  const auto rows = parallel_map(graphs, options.threads, [&](const Graph& g) {
    Row row;
    const Graph h = complement(g);
    row.quasiperfect = decider ? decider(g) : recognizer.decide(g);
    const bool complement_qp = decider ? decider(h) : recognizer.decide(h);
    row.verdict_mismatch = row.quasiperfect != complement_qp;
    if (auto outcome = recognizer.recognize(g); outcome.quasiperfect) {
      const QpCertificate dual = complement_certificate(*outcome.certificate);
      row.certificate_failure = !verify_certificate(h, dual).valid();
    }
    return row;
  });

  std::size_t mismatches = 0;
  std::size_t certificate_failures = 0;
  std::vector<bool> accepted;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    accepted.push_back(rows[i].quasiperfect);
    mismatches += rows[i].verdict_mismatch ? 1 : 0;
    certificate_failures += rows[i].certificate_failure ? 1 : 0;
    if (rows[i].verdict_mismatch || rows[i].certificate_failure) {
      report.violations.push_back(emit_graph6(graphs[i]));
    }
  }
  report.graphs_scanned = graphs.size();
  report.findings["quasiperfect"] = std::count(accepted.begin(), accepted.end(), true);
  report.findings["verdict_mismatches"] = mismatches;
  report.findings["complemented_certificate_failures"] = certificate_failures;
  report.findings["by_order"] = order_table(graphs, accepted);
  finish(report, start);
  return report;
}

SuiteReport verify_perfect_subset(int n_max, const SuiteOptions& options,
                                  const QpDecider& decider) {
  const auto start = Clock::now();
  Recognizer recognizer(pure_config(n_max));
  SuiteReport report = begin("perfect-subset", "theorem", n_max, options, recognizer.config());
  if (decider) report.config["decider"] = "override";
  PerfectionChecker perfection(options.perfection_limit);
  const auto graphs = enumerate_graphs_up_to(n_max);

  struct Row {
    bool perfect = false;
    bool quasiperfect = false;
    bool inclusion_failure = false;
    bool lovasz_failure = false;
  };
  const auto rows = parallel_map(graphs, options.threads, [&](const Graph& g) {
    Row row;
    row.perfect = perfection.is_perfect(g);
    row.quasiperfect = decider ? decider(g) : recognizer.decide(g);
    row.inclusion_failure = row.perfect && !row.quasiperfect;
    if (row.perfect && g.order() > 0) {
      try {
        lovasz_prime_clique(g);
      } catch (const Error&) {
        row.lovasz_failure = true;
      }
    }
    return row;
  });

  std::size_t perfect = 0;
  std::size_t quasiperfect = 0;
  std::size_t imperfect_quasiperfect = 0;
  std::size_t lovasz_failures = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Row& row = rows[i];
    perfect += row.perfect ? 1 : 0;
    quasiperfect += row.quasiperfect ? 1 : 0;
    imperfect_quasiperfect += (!row.perfect && row.quasiperfect) ? 1 : 0;
    lovasz_failures += row.lovasz_failure ? 1 : 0;
    if (row.inclusion_failure || row.lovasz_failure) {
      report.violations.push_back(emit_graph6(graphs[i]));
    }
  }
  report.graphs_scanned = graphs.size();
  report.findings["perfect"] = perfect;
  report.findings["quasiperfect"] = quasiperfect;
  report.findings["quasiperfect_but_imperfect"] = imperfect_quasiperfect;
  report.findings["lovasz_prime_clique_failures"] = lovasz_failures;
  finish(report, start);
  return report;
}

SuiteReport verify_certificates(int n_max, const SuiteOptions& options) {
  const auto start = Clock::now();
  Recognizer recognizer(pure_config(n_max));
  SuiteReport report = begin("certificates", "theorem", n_max, options, recognizer.config());
  const auto graphs = enumerate_graphs_up_to(n_max);

  struct Row {
    bool quasiperfect = false;
    bool failure = false;
  };
  const auto rows = parallel_map(graphs, options.threads, [&](const Graph& g) {
    Row row;
    const auto outcome = recognizer.recognize(g);
    row.quasiperfect = outcome.quasiperfect;
    if (!outcome.quasiperfect) return row;
    if (!verify_certificate(g, *outcome.certificate)) {
      row.failure = true;
      return row;
    }
    const auto colours = colouring_from_certificate(g, *outcome.certificate);
    row.failure = !is_proper_colouring(g, colours) || colours_used(colours) != clique_number(g);
    return row;
  });

  std::size_t accepted = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    accepted += rows[i].quasiperfect ? 1 : 0;
    if (rows[i].failure) report.violations.push_back(emit_graph6(graphs[i]));
  }
  report.graphs_scanned = graphs.size();
  report.findings["certificates_checked"] = accepted;
  finish(report, start);
  return report;
}

namespace {

// Distinct colour classes over all colourings with exactly k colours.
void optimal_classes(const Graph& g, int k, int v, int used, std::vector<int>& colour,
                     std::set<std::uint64_t>& classes) {
  const int n = g.order();
  if (v == n) {
    if (used != k) return;
    std::vector<VertexSet> sets(static_cast<std::size_t>(k));
    for (int u = 0; u < n; ++u) sets[colour[u]].insert(u);
    for (VertexSet s : sets) classes.insert(s.bits());
    return;
  }
  if (k - used > n - v) return;
  for (int c = 0; c < std::min(used + 1, k); ++c) {
    bool clash = false;
    for (int w : g.neighbors(v)) clash = clash || (w < v && colour[w] == c);
    if (clash) continue;
    colour[v] = c;
    optimal_classes(g, k, v + 1, std::max(used, c + 1), colour, classes);
  }
}

struct RemovalRow {
  bool quasiperfect = false;
  int classes = 0;
  int residue_qp = 0;
  bool top_class_failure = false;
  std::vector<std::string> failures;
  int all_classes = 0;
  int all_residue_qp = 0;
  std::vector<std::string> all_failures;
};

void list_limited(Json& target, const std::vector<std::string>& items, std::size_t& listed) {
  for (const auto& item : items) {
    if (listed++ < kListedFindings) target.push_back(item);
  }
}

}  // namespace

SuiteReport color_class_removal_survey(int n_max, const SuiteOptions& options) {
  const auto start = Clock::now();
  Recognizer recognizer(pure_config(n_max));
  SuiteReport report = begin("color-removal", "survey", n_max, options, recognizer.config());
  report.config["all_colourings"] = options.all_colourings;
  const auto graphs = enumerate_graphs_up_to(n_max);

  const auto rows = parallel_map(graphs, options.threads, [&](const Graph& g) {
    RemovalRow row;
    const auto outcome = recognizer.recognize(g);
    row.quasiperfect = outcome.quasiperfect;
    if (!outcome.quasiperfect || g.order() == 0) return row;
    const auto colours = colouring_from_certificate(g, *outcome.certificate);
    const int k = colours_used(colours);
    for (int c = 0; c < k; ++c) {
      VertexSet cls;
      for (int v = 0; v < g.order(); ++v) {
        if (colours[v] == c) cls.insert(v);
      }
      ++row.classes;
      if (recognizer.decide(remove_vertices(g, cls))) {
        ++row.residue_qp;
      } else {
        row.failures.push_back(emit_graph6(g) + " " + cls.to_string());
        row.top_class_failure = row.top_class_failure || c == 0;
      }
    }
    if (options.all_colourings && g.order() <= kAllColouringsLimit) {
      std::set<std::uint64_t> classes;
      std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
      optimal_classes(g, k, 0, 0, colour, classes);
      for (std::uint64_t bits : classes) {
        ++row.all_classes;
        if (recognizer.decide(remove_vertices(g, VertexSet(bits)))) {
          ++row.all_residue_qp;
        } else {
          row.all_failures.push_back(emit_graph6(g) + " " + VertexSet(bits).to_string());
        }
      }
    }
    return row;
  });

  std::size_t qp = 0, pairs = 0, holds = 0, top_failures = 0, listed = 0;
  std::size_t all_pairs = 0, all_holds = 0, all_listed = 0;
  Json counterexamples = Json::array();
  Json all_counterexamples = Json::array();
  for (const auto& row : rows) {
    qp += row.quasiperfect ? 1 : 0;
    pairs += row.classes;
    holds += row.residue_qp;
    top_failures += row.top_class_failure ? 1 : 0;
    list_limited(counterexamples, row.failures, listed);
    all_pairs += row.all_classes;
    all_holds += row.all_residue_qp;
    list_limited(all_counterexamples, row.all_failures, all_listed);
  }
  report.graphs_scanned = graphs.size();
  report.findings["quasiperfect_graphs"] = qp;
  report.findings["colour_classes"] = pairs;
  report.findings["residue_quasiperfect"] = holds;
  report.findings["residue_not_quasiperfect"] = pairs - holds;
  report.findings["first_class_failures"] = top_failures;
  report.findings["counterexamples"] = counterexamples;
  report.findings["counterexamples_listed"] = std::min(listed, kListedFindings);
  if (options.all_colourings) {
    report.findings["all_optimal_colourings"] = {
        {"n_max", std::min(n_max, kAllColouringsLimit)},
        {"colour_classes", all_pairs},
        {"residue_quasiperfect", all_holds},
        {"residue_not_quasiperfect", all_pairs - all_holds},
        {"counterexamples", all_counterexamples},
        {"counterexamples_listed", std::min(all_listed, kListedFindings)}};
  }
  // First-class failures would contradict the certificate itself.
  if (top_failures > 0) report.violations.push_back("first colour class residue rejected");
  finish(report, start);
  return report;
}

SuiteReport reading_divergence_survey(int n_max, const SuiteOptions& options) {
  const auto start = Clock::now();
  Recognizer conjunctive(pure_config(n_max, Reading::Conjunctive));
  Recognizer disjunctive(pure_config(n_max, Reading::Disjunctive));
  SuiteReport report = begin("reading-divergence", "survey", n_max, options, conjunctive.config());
  report.config["compared_with"] = to_string(Reading::Disjunctive);
  const auto graphs = enumerate_graphs_up_to(n_max);

  const auto rows = parallel_map(graphs, options.threads, [&](const Graph& g) {
    return std::pair{conjunctive.decide(g), disjunctive.decide(g)};
  });

  std::size_t conj = 0, disj = 0, listed = 0;
  Json disagreements = Json::array();
  std::vector<bool> conj_accepted;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    auto [c, d] = rows[i];
    conj += c ? 1 : 0;
    disj += d ? 1 : 0;
    conj_accepted.push_back(c);
    if (c != d && listed++ < kListedFindings) disagreements.push_back(emit_graph6(graphs[i]));
    // The conjunctive reading is the stricter one.
    if (c && !d) report.violations.push_back(emit_graph6(graphs[i]));
  }
  report.graphs_scanned = graphs.size();
  report.findings["conjunctive_quasiperfect"] = conj;
  report.findings["disjunctive_quasiperfect"] = disj;
  report.findings["disagreements"] = disj - conj;
  report.findings["disagreement_graphs"] = disagreements;
  finish(report, start);
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem1",     "theorem2",      "perfect-subset",
                                              "certificates", "color-removal", "reading-divergence"};
  return names;
}

SuiteReport run_suite(const std::string& name, int n_max, const SuiteOptions& options) {
  if (name == "theorem1") return verify_theorem1(n_max, options);
  if (name == "theorem2") return verify_theorem2(n_max, options);
  if (name == "perfect-subset") return verify_perfect_subset(n_max, options);
  if (name == "certificates") return verify_certificates(n_max, options);
  if (name == "color-removal") return color_class_removal_survey(n_max, options);
  if (name == "reading-divergence") return reading_divergence_survey(n_max, options);
  throw InvalidArgument("unknown suite '" + name + "'");
}

}  // namespace qpkit
