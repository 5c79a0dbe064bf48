#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "qpkit/certificate.hpp"
#include "qpkit/graph.hpp"
#include "qpkit/memo.hpp"
#include "qpkit/perfect.hpp"

namespace qpkit {

enum class Mode {
  Pure,         // the inductive definition and nothing else
  Accelerated,  // may reject when ω != χ; may accept perfect graphs early
};

/// How the two clauses of the definition combine. Only the conjunctive
/// reading yields verifiable certificates; the disjunctive one exists so the
/// harness can measure where the readings disagree.
enum class Reading { Conjunctive, Disjunctive };

const char* to_string(Mode mode);
const char* to_string(Reading reading);

inline constexpr int kDefaultRecognitionLimit = 12;

struct RecognizerConfig {
  Mode mode = Mode::Pure;
  Reading reading = Reading::Conjunctive;
  bool perfect_shortcut = false;  // honoured in accelerated mode only
  int vertex_limit = kDefaultRecognitionLimit;
  std::size_t memo_capacity = std::size_t{1} << 22;
};

struct RecognitionStats {
  std::uint64_t nodes_explored = 0;
  std::uint64_t memo_hits = 0;
  double wall_ms = 0.0;
};

struct RecognitionOutcome {
  bool quasiperfect = false;
  std::optional<QpCertificate> certificate;  // present iff quasiperfect
  RecognitionStats stats;
};

/// Exact recognizer for quasiperfect graphs.
///
/// Every isomorphism class is solved once, on its canonically labeled
/// representative, and the result is stored in a memo shared by all calls
/// and threads. Candidate prime sets are tried smallest first, then
/// lexicographically (in canonical coordinates); the first whose residue is
/// quasiperfect is recorded. Because work happens on canonical graphs the
/// certificate for a graph depends only on the graph, never on call order
/// or thread count.
class Recognizer {
 public:
  explicit Recognizer(RecognizerConfig config = {});
  ~Recognizer();
  Recognizer(const Recognizer&) = delete;
  Recognizer& operator=(const Recognizer&) = delete;

  /// Throws LimitError when g exceeds the vertex limit or the memo fills up.
  RecognitionOutcome recognize(const Graph& g);

  /// Verdict only; skips certificate expansion.
  bool decide(const Graph& g);

  const RecognizerConfig& config() const { return config_; }
  std::size_t memo_size() const;

 private:
  struct Node;
  struct Entry;
  struct Context;
  struct Solved;

  Solved solve(const Graph& g, Context& ctx);
  Entry compute(const CanonicalKey& key, Context& ctx);
  void check_limit(const Graph& g) const;

  RecognizerConfig config_;
  std::unique_ptr<ConcurrentMemo<CanonicalKey, std::shared_ptr<const Entry>>> memo_;
  PerfectionChecker perfection_;
};

/// One-shot recognition with a fresh recognizer.
RecognitionOutcome is_quasiperfect(const Graph& g, Mode mode = Mode::Pure);

}  // namespace qpkit
