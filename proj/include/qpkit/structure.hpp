#pragma once

#include <vector>

#include "qpkit/graph.hpp"

namespace qpkit {

bool is_forest(const Graph& g);

/// Vertex sets of the biconnected components (blocks). Isolated vertices
/// form singleton blocks.
std::vector<VertexSet> biconnected_components(const Graph& g);

/// Every biconnected component induces a complete graph.
bool is_block_graph(const Graph& g);

int connected_component_count(const Graph& g);

}  // namespace qpkit
