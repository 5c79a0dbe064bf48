#pragma once

#include <optional>
#include <vector>

#include "qpkit/graph.hpp"

namespace qpkit {

enum class PrimeSetKind { PrimeIndependentSet, PrimeClique };

/// Which clause of the prime-set definition a candidate set breaks.
enum class PrimeSetDefect {
  None,
  OutOfRange,
  Empty,             // only K0 admits the empty prime set
  NotIndependent,    // or NotClique for prime cliques
  MissesMaximumSet,  // some maximum clique / independent set is not met
  UncoveredVertex,   // some member lies in no maximum clique / independent set
};

const char* to_string(PrimeSetDefect defect);

/// A prime independent set: independent, meets every maximum clique, and
/// each member lies in some maximum clique. Maximum means maximum
/// cardinality.
PrimeSetDefect check_prime_independent_set(const Graph& g, VertexSet s);
/// The dual: a clique meeting every maximum independent set, each member
/// lying in some maximum independent set.
PrimeSetDefect check_prime_clique(const Graph& g, VertexSet s);

inline bool is_prime_independent_set(const Graph& g, VertexSet s) {
  return check_prime_independent_set(g, s) == PrimeSetDefect::None;
}
inline bool is_prime_clique(const Graph& g, VertexSet s) {
  return check_prime_clique(g, s) == PrimeSetDefect::None;
}

/// Lazily yields the prime sets of one kind, smallest first and
/// lexicographically within a size. K0 yields the empty set once; nonempty
/// graphs never yield the empty set.
class PrimeSetSequence {
 public:
  PrimeSetSequence(const Graph& g, PrimeSetKind kind);

  std::optional<VertexSet> next();

 private:
  bool advance();

  Graph host_;  // g for independent sets, complement(g) for cliques
  std::vector<VertexSet> targets_;
  std::vector<int> pool_;
  std::vector<int> pick_;
  int max_size_ = 0;
  bool exhausted_ = false;
  bool yielded_empty_ = false;
};

std::vector<VertexSet> prime_independent_sets(const Graph& g);
std::vector<VertexSet> prime_cliques(const Graph& g);

}  // namespace qpkit
