#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qpkit/graph.hpp"

namespace qpkit {

/// Decodes one graph6 line. Trailing "\n" or "\r\n" is tolerated; anything
/// else after the encoded bits is an error, as are non-zero padding bits.
Graph parse_graph6(std::string_view text, int vertex_limit = kMaxVertices);

std::string emit_graph6(const Graph& g);

/// Reads graph6 lines until EOF, skipping blank lines and the optional
/// ">>graph6<<" header.
std::vector<Graph> read_graph6_stream(std::istream& in, int vertex_limit = kMaxVertices);

/// Edge-list text: "n m" on the first line, then m lines "u v" (0-based).
/// Several graphs may follow one another in the same stream.
std::vector<Graph> read_edge_lists(std::istream& in, int vertex_limit = kMaxVertices);
Graph parse_edge_list(std::string_view text, int vertex_limit = kMaxVertices);
std::string emit_edge_list(const Graph& g);

}  // namespace qpkit
