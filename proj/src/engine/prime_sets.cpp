#include "qpkit/prime_sets.hpp"

#include <algorithm>

#include "qpkit/invariants.hpp"

namespace qpkit {
namespace {

// The prime-independent-set clauses against a precomputed list of maximum
// cliques of host.
PrimeSetDefect check_against(const Graph& host, const std::vector<VertexSet>& targets,
                             VertexSet s) {
  if (!s.subset_of(host.vertices())) return PrimeSetDefect::OutOfRange;
  if (s.empty()) return host.order() == 0 ? PrimeSetDefect::None : PrimeSetDefect::Empty;
  if (!host.is_independent(s)) return PrimeSetDefect::NotIndependent;
  VertexSet covered;
  for (VertexSet t : targets) {
    if (!t.intersects(s)) return PrimeSetDefect::MissesMaximumSet;
    covered |= t;
  }
  if (!s.subset_of(covered)) return PrimeSetDefect::UncoveredVertex;
  return PrimeSetDefect::None;
}

}  // namespace

const char* to_string(PrimeSetDefect defect) {
  switch (defect) {
    case PrimeSetDefect::None: return "none";
    case PrimeSetDefect::OutOfRange: return "out-of-range";
    case PrimeSetDefect::Empty: return "empty";
    case PrimeSetDefect::NotIndependent: return "not-independent-or-not-clique";
    case PrimeSetDefect::MissesMaximumSet: return "misses-a-maximum-set";
    case PrimeSetDefect::UncoveredVertex: return "vertex-outside-every-maximum-set";
  }
  return "unknown";
}

PrimeSetDefect check_prime_independent_set(const Graph& g, VertexSet s) {
  return check_against(g, maximum_cliques(g), s);
}

PrimeSetDefect check_prime_clique(const Graph& g, VertexSet s) {
  const Graph h = complement(g);
  return check_against(h, maximum_cliques(h), s);
}

PrimeSetSequence::PrimeSetSequence(const Graph& g, PrimeSetKind kind)
    : host_(kind == PrimeSetKind::PrimeIndependentSet ? g : complement(g)),
      targets_(maximum_cliques(host_)) {
  VertexSet covered;
  for (VertexSet t : targets_) covered |= t;
  pool_ = covered.to_vector();
  // Members of an independent set sit in pairwise distinct maximum cliques.
  max_size_ = static_cast<int>(std::min(pool_.size(), targets_.size()));
}

bool PrimeSetSequence::advance() {
  const int k = static_cast<int>(pick_.size());
  const int pool = static_cast<int>(pool_.size());
  int i = k - 1;
  while (i >= 0 && pick_[i] == pool - k + i) --i;
  if (i >= 0) {
    ++pick_[i];
    for (int j = i + 1; j < k; ++j) pick_[j] = pick_[j - 1] + 1;
    return true;
  }
  if (k + 1 > max_size_) return false;
  pick_.resize(k + 1);
  for (int j = 0; j <= k; ++j) pick_[j] = j;
  return true;
}

std::optional<VertexSet> PrimeSetSequence::next() {
  if (host_.order() == 0) {
    if (yielded_empty_) return std::nullopt;
    yielded_empty_ = true;
    return VertexSet{};
  }
  while (!exhausted_) {
    if (!advance()) {
      exhausted_ = true;
      break;
    }
    VertexSet s;
    for (int idx : pick_) s.insert(pool_[idx]);
    if (check_against(host_, targets_, s) == PrimeSetDefect::None) return s;
  }
  return std::nullopt;
}

namespace {

std::vector<VertexSet> drain(PrimeSetSequence seq) {
  std::vector<VertexSet> out;
  while (auto s = seq.next()) out.push_back(*s);
  return out;
}

}  // namespace

std::vector<VertexSet> prime_independent_sets(const Graph& g) {
  return drain(PrimeSetSequence(g, PrimeSetKind::PrimeIndependentSet));
}

std::vector<VertexSet> prime_cliques(const Graph& g) {
  return drain(PrimeSetSequence(g, PrimeSetKind::PrimeClique));
}

}  // namespace qpkit
