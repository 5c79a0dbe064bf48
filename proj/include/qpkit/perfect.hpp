#pragma once

#include <cstddef>

#include "qpkit/canonical.hpp"
#include "qpkit/graph.hpp"
#include "qpkit/memo.hpp"

namespace qpkit {

inline constexpr int kDefaultPerfectionLimit = 10;

/// Decides perfection by sweeping induced subgraphs: g is perfect iff
/// ω(g) = χ(g) and g - v is perfect for every v. Results are memoized on
/// canonical keys, so each isomorphism class of induced subgraph is solved
/// once. Safe to share between threads.
class PerfectionChecker {
 public:
  explicit PerfectionChecker(int vertex_limit = kDefaultPerfectionLimit)
      : vertex_limit_(vertex_limit) {}

  /// Throws LimitError when g.order() exceeds the configured limit.
  bool is_perfect(const Graph& g);

  int vertex_limit() const { return vertex_limit_; }
  std::size_t memo_size() const { return memo_.size(); }

 private:
  bool check(const Graph& g);

  int vertex_limit_;
  ConcurrentMemo<CanonicalKey, bool> memo_;
};

/// Uses a process-wide checker with the default limit.
bool is_perfect(const Graph& g);

}  // namespace qpkit
