#pragma once

#include <compare>
#include <functional>
#include <string>
#include <vector>

#include "qpkit/graph.hpp"

namespace qpkit {

/// Isomorphism-invariant fingerprint: the graph6 encoding of the canonically
/// labeled graph (vertex count header followed by the upper triangle).
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  auto operator<=>(const CanonicalKey&) const = default;

 private:
  std::string bytes_;
};

struct CanonicalForm {
  CanonicalKey key;
  /// labeling[v] is the position of vertex v in the canonical graph.
  std::vector<int> labeling;
};

/// Canonical labeling by individualization-refinement: colour refinement,
/// then branching on the first smallest non-singleton cell, pruning branches
/// that differ only by swapping twin vertices. The leaf with the smallest
/// graph6 string wins.
CanonicalForm canonical_form(const Graph& g);

CanonicalKey canonical_key(const Graph& g);

/// The canonically labeled graph a key encodes.
Graph graph_of(const CanonicalKey& key);

}  // namespace qpkit

template <>
struct std::hash<qpkit::CanonicalKey> {
  std::size_t operator()(const qpkit::CanonicalKey& key) const noexcept {
    return std::hash<std::string>{}(key.bytes());
  }
};
