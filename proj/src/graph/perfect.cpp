#include "qpkit/perfect.hpp"

#include <limits>
#include <string>

#include "qpkit/error.hpp"
#include "qpkit/invariants.hpp"

namespace qpkit {

bool PerfectionChecker::is_perfect(const Graph& g) {
  if (g.order() > vertex_limit_) {
    throw LimitError("is_perfect: n=" + std::to_string(g.order()) + " exceeds perfection limit " +
                     std::to_string(vertex_limit_));
  }
  return check(g);
}

bool PerfectionChecker::check(const Graph& g) {
  if (g.order() <= 4) return true;  // the smallest imperfect graph is C5
  const CanonicalKey key = canonical_key(g);
  if (auto hit = memo_.find(key)) return *hit;

  bool perfect = clique_number(g) == chromatic_number(g);
  for (int v = 0; perfect && v < g.order(); ++v) {
    perfect = check(remove_vertices(g, VertexSet{v}));
  }
  memo_.store(key, perfect, std::numeric_limits<std::size_t>::max());
  return perfect;
}

bool is_perfect(const Graph& g) {
  static PerfectionChecker shared;
  return shared.is_perfect(g);
}

}  // namespace qpkit
