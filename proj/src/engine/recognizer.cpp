#include "qpkit/recognizer.hpp"

#include <chrono>
#include <string>

#include "qpkit/error.hpp"
#include "qpkit/graph6.hpp"
#include "qpkit/invariants.hpp"
#include "qpkit/prime_sets.hpp"

namespace qpkit {

const char* to_string(Mode mode) { return mode == Mode::Pure ? "pure" : "accelerated"; }

const char* to_string(Reading reading) {
  return reading == Reading::Conjunctive ? "conjunctive" : "disjunctive";
}

// Certificate template in canonical coordinates. child_map[j] is the
// canonical position, within the child's canonical graph, of vertex j of the
// residue (residue vertices numbered in increasing order).
struct Recognizer::Node {
  bool leaf = false;
  CanonicalKey key;
  VertexSet pi;
  VertexSet pk;
  std::shared_ptr<const Node> pi_child;
  std::shared_ptr<const Node> pk_child;
  std::vector<int> pi_map;
  std::vector<int> pk_map;
};

struct Recognizer::Entry {
  bool quasiperfect = false;
  std::shared_ptr<const Node> node;
};

struct Recognizer::Context {
  RecognitionStats stats;
};

struct Recognizer::Solved {
  bool quasiperfect = false;
  std::shared_ptr<const Node> node;
  std::vector<int> labeling;
};

Recognizer::Recognizer(RecognizerConfig config)
    : config_(config),
      memo_(std::make_unique<ConcurrentMemo<CanonicalKey, std::shared_ptr<const Entry>>>()) {
  if (config_.vertex_limit < 0 || config_.vertex_limit > kMaxVertices) {
    throw InvalidArgument("recognition limit must lie in 0.." + std::to_string(kMaxVertices));
  }
}

Recognizer::~Recognizer() = default;

std::size_t Recognizer::memo_size() const { return memo_->size(); }

void Recognizer::check_limit(const Graph& g) const {
  if (g.order() > config_.vertex_limit) {
    throw LimitError("recognition: n=" + std::to_string(g.order()) + " exceeds limit " +
                     std::to_string(config_.vertex_limit));
  }
}

Recognizer::Solved Recognizer::solve(const Graph& g, Context& ctx) {
  static const auto leaf = [] {
    auto node = std::make_shared<Node>();
    node->leaf = true;
    node->key = canonical_key(Graph{});
    return std::shared_ptr<const Node>(node);
  }();
  if (g.order() == 0) return {true, leaf, {}};

  CanonicalForm form = canonical_form(g);
  std::shared_ptr<const Entry> entry;
  if (auto hit = memo_->find(form.key)) {
    ++ctx.stats.memo_hits;
    entry = *hit;
  } else {
    entry = std::make_shared<const Entry>(compute(form.key, ctx));
    if (!memo_->store(form.key, entry, config_.memo_capacity)) {
      throw LimitError("recognition: memo capacity " + std::to_string(config_.memo_capacity) +
                       " exceeded");
    }
  }
  return {entry->quasiperfect, entry->node, std::move(form.labeling)};
}

Recognizer::Entry Recognizer::compute(const CanonicalKey& key, Context& ctx) {
  ++ctx.stats.nodes_explored;
  const Graph h = graph_of(key);

  bool perfect = false;
  if (config_.mode == Mode::Accelerated) {
    if (clique_number(h) != chromatic_number(h)) return {false, nullptr};
    if (config_.perfect_shortcut && h.order() <= perfection_.vertex_limit()) {
      perfect = perfection_.is_perfect(h);
    }
  }

  auto node = std::make_shared<Node>();
  node->key = key;

  // First candidate (in sequence order) whose residue is quasiperfect.
  auto find_branch = [&](PrimeSetKind kind, VertexSet& chosen, std::shared_ptr<const Node>& child,
                         std::vector<int>& child_map) {
    PrimeSetSequence candidates(h, kind);
    while (auto s = candidates.next()) {
      Solved residue = solve(remove_vertices(h, *s), ctx);
      if (residue.quasiperfect) {
        chosen = *s;
        child = residue.node;
        child_map = std::move(residue.labeling);
        return true;
      }
      if (perfect) {
        throw TheoremViolation("perfect graph with a non-quasiperfect residue", emit_graph6(h));
      }
    }
    return false;
  };

  const bool has_pi = find_branch(PrimeSetKind::PrimeIndependentSet, node->pi, node->pi_child,
                                  node->pi_map);
  if (config_.reading == Reading::Conjunctive && !has_pi) return {false, nullptr};
  const bool has_pk = find_branch(PrimeSetKind::PrimeClique, node->pk, node->pk_child,
                                  node->pk_map);

  const bool quasiperfect =
      config_.reading == Reading::Conjunctive ? (has_pi && has_pk) : (has_pi || has_pk);
  if (perfect && !quasiperfect) {
    throw TheoremViolation("perfect graph rejected", emit_graph6(h));
  }
  if (!quasiperfect) return {false, nullptr};
  return {true, std::move(node)};
}

namespace {

template <class Node>
QpCertificate materialize(const Node& node, const std::vector<int>& to_canon);

template <class Node>
std::shared_ptr<const QpCertificate> materialize_child(const std::shared_ptr<const Node>& child,
                                                      VertexSet removed_canon,
                                                      const std::vector<int>& child_map,
                                                      const std::vector<int>& to_canon) {
  if (!child) return nullptr;
  const int n = static_cast<int>(to_canon.size());
  // Index of each surviving canonical vertex within the canonical residue.
  std::vector<int> residue_index(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int p = 0; p < n; ++p) {
    if (!removed_canon.contains(p)) residue_index[p] = next++;
  }
  std::vector<int> child_to_canon;
  child_to_canon.reserve(static_cast<std::size_t>(next));
  for (int v = 0; v < n; ++v) {
    if (removed_canon.contains(to_canon[v])) continue;
    child_to_canon.push_back(child_map[residue_index[to_canon[v]]]);
  }
  return std::make_shared<const QpCertificate>(materialize(*child, child_to_canon));
}

template <class Node>
QpCertificate materialize(const Node& node, const std::vector<int>& to_canon) {
  if (node.leaf) return QpCertificate::make_leaf();
  std::vector<int> from_canon(to_canon.size());
  for (std::size_t v = 0; v < to_canon.size(); ++v) from_canon[to_canon[v]] = static_cast<int>(v);

  QpCertificate cert;
  cert.key = node.key;
  cert.pi = relabel(node.pi, from_canon);
  cert.pk = relabel(node.pk, from_canon);
  cert.pi_child = materialize_child(node.pi_child, node.pi, node.pi_map, to_canon);
  cert.pk_child = materialize_child(node.pk_child, node.pk, node.pk_map, to_canon);
  return cert;
}

}  // namespace

RecognitionOutcome Recognizer::recognize(const Graph& g) {
  check_limit(g);
  const auto start = std::chrono::steady_clock::now();
  Context ctx;
  Solved solved = solve(g, ctx);
  RecognitionOutcome outcome;
  outcome.quasiperfect = solved.quasiperfect;
  if (solved.quasiperfect) outcome.certificate = materialize(*solved.node, solved.labeling);
  ctx.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  outcome.stats = ctx.stats;
  return outcome;
}

bool Recognizer::decide(const Graph& g) {
  check_limit(g);
  Context ctx;
  return solve(g, ctx).quasiperfect;
}

RecognitionOutcome is_quasiperfect(const Graph& g, Mode mode) {
  RecognizerConfig config;
  config.mode = mode;
  Recognizer recognizer(config);
  return recognizer.recognize(g);
}

}  // namespace qpkit
