#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qpkit/canonical.hpp"
#include "qpkit/graph.hpp"
#include "qpkit/recognizer.hpp"

namespace qpkit {

inline constexpr int kEnumerationLimit = 8;

/// One canonically labeled representative per isomorphism class of graphs
/// on n vertices, ordered by canonical key. Built by extending each class on
/// n-1 vertices with a new vertex in every possible way and deduplicating on
/// canonical keys. Throws LimitError for n > 8.
std::vector<Graph> enumerate_graphs(int n);

/// All classes with 0..n_max vertices, by order then canonical key.
std::vector<Graph> enumerate_graphs_up_to(int n_max);

// ---------------------------------------------------------------------------
// Classification records

struct ClassificationRecord {
  CanonicalKey key;
  std::string graph6;
  int n = 0;
  int m = 0;
  int omega = 0;
  int alpha = 0;
  int chi = 0;
  std::optional<bool> perfect;  // absent above the perfection limit
  bool quasiperfect = false;
  std::optional<std::string> cert_ref;
};

/// Throws TheoremViolation if the verdict is quasiperfect but ω != χ.
ClassificationRecord classify(const Graph& g, const RecognitionOutcome& outcome,
                              int perfection_limit = kDefaultPerfectionLimit);

nlohmann::ordered_json to_json(const ClassificationRecord& record);
std::string csv_header();
std::string to_csv_row(const ClassificationRecord& record);

// ---------------------------------------------------------------------------
// Suites

struct SuiteOptions {
  int threads = 1;
  /// Colour-removal survey: also sweep every optimal colouring for n <= 5.
  bool all_colourings = false;
  int perfection_limit = kDefaultPerfectionLimit;
};

struct SuiteReport {
  std::string suite;
  /// "theorem" suites fail on violations; "survey" suites only report.
  std::string kind = "theorem";
  int n_max = 0;
  std::size_t graphs_scanned = 0;
  std::vector<std::string> violations;
  nlohmann::ordered_json findings = nlohmann::ordered_json::object();
  nlohmann::ordered_json config = nlohmann::ordered_json::object();
  double runtime_ms = 0.0;
  int threads = 1;

  bool passed() const { return violations.empty(); }
};

inline constexpr const char* kReportSchema = "qpreport-v1";

/// Runtime and thread count live under "stats", outside the deterministic
/// part of the document.
nlohmann::ordered_json to_json(const SuiteReport& report);

/// Overrides the verdict used by a suite (harness self-tests).
using QpDecider = std::function<bool(const Graph&)>;

/// quasiperfect => ω = χ, χ from graph-core's exact solver.
SuiteReport verify_theorem1(int n_max, const SuiteOptions& options = {},
                            const QpDecider& decider = {});

/// qp(g) = qp(complement g), and complemented certificates re-verify.
SuiteReport verify_theorem2(int n_max, const SuiteOptions& options = {},
                            const QpDecider& decider = {});

/// perfect => quasiperfect, and the replication-based prime clique passes
/// the predicate on every perfect graph.
SuiteReport verify_perfect_subset(int n_max, const SuiteOptions& options = {},
                                  const QpDecider& decider = {});

/// Every emitted certificate verifies and its colouring is proper with
/// exactly ω colours.
SuiteReport verify_certificates(int n_max, const SuiteOptions& options = {});

/// Survey: does removing one colour class of the certificate colouring keep
/// the graph quasiperfect?
SuiteReport color_class_removal_survey(int n_max, const SuiteOptions& options = {});

/// Survey: graphs on which the conjunctive and disjunctive readings of the
/// definition disagree.
SuiteReport reading_divergence_survey(int n_max, const SuiteOptions& options = {});

/// Names accepted by run_suite: theorem1, theorem2, perfect-subset,
/// certificates, color-removal, reading-divergence.
const std::vector<std::string>& suite_names();

/// Throws InvalidArgument for an unknown name.
SuiteReport run_suite(const std::string& name, int n_max, const SuiteOptions& options = {});

// ---------------------------------------------------------------------------
// Supergraph search

struct SupergraphWitness {
  Graph graph;  // g on vertices 0..n-1, added vertices after
  int added = 0;
};

/// Smallest number of added vertices (0..k_max) for which some supergraph
/// containing g as an induced subgraph is quasiperfect. Added vertices are
/// attached in every possible way, in increasing order of neighbourhood
/// bitmask, skipping isomorphic duplicates. Throws LimitError when
/// g.order() + k_max exceeds the recognizer's limit.
std::optional<SupergraphWitness> minimal_qp_supergraph(const Graph& g, int k_max,
                                                       Recognizer& recognizer);
std::optional<SupergraphWitness> minimal_qp_supergraph(const Graph& g, int k_max);

}  // namespace qpkit
