#pragma once

#include <optional>
#include <vector>

#include "qpkit/graph.hpp"

namespace qpkit {

struct InvariantTriple {
  int omega = 0;
  int alpha = 0;
  int chi = 0;

  bool operator==(const InvariantTriple&) const = default;
};

/// Exact clique number by branch and bound with a greedy-colouring bound.
int clique_number(const Graph& g);
int independence_number(const Graph& g);

/// Exact chromatic number: DSATUR backtracking on k-colourability for k
/// from ω up to the DSATUR greedy bound.
int chromatic_number(const Graph& g);

InvariantTriple invariants(const Graph& g);

/// Every clique of size ω(g), in lexicographic order of sorted member lists.
std::vector<VertexSet> maximum_cliques(const Graph& g);
std::vector<VertexSet> maximum_independent_sets(const Graph& g);

/// Some maximum clique (the lexicographically first one); empty for K0.
VertexSet a_maximum_clique(const Graph& g);

/// A proper colouring with at most k colours (colours 0..k-1), if one exists.
std::optional<std::vector<int>> colour_with(const Graph& g, int k);

/// A proper colouring with χ(g) colours.
std::vector<int> minimum_colouring(const Graph& g);

bool is_proper_colouring(const Graph& g, const std::vector<int>& colours);

/// Number of distinct colours used.
int colours_used(const std::vector<int>& colours);

}  // namespace qpkit
