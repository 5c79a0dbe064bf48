#include "qpkit/graph6.hpp"

#include <istream>
#include <set>
#include <sstream>

#include "qpkit/error.hpp"

namespace qpkit {
namespace {

constexpr int kBias = 63;
constexpr char kLongHeader = 126;  // '~'

int sextet(char c) {
  const int value = static_cast<unsigned char>(c) - kBias;
  if (value < 0 || value > 63) {
    throw ParseError("graph6: byte " + std::to_string(static_cast<unsigned char>(c)) +
                     " outside 63..126");
  }
  return value;
}

std::string_view strip_line_end(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  return text;
}

}  // namespace

Graph parse_graph6(std::string_view text, int vertex_limit) {
  text = strip_line_end(text);
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != kLongHeader) {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != kLongHeader) {
    if (text.size() < 4) throw ParseError("graph6: truncated length header");
    n = (sextet(text[1]) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    if (n < 63) throw ParseError("graph6: non-canonical length header");
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("graph6: truncated length header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text[i]);
    if (n < 258048) throw ParseError("graph6: non-canonical length header");
    pos = 8;
  }
  if (n > vertex_limit || n > kMaxVertices) {
    throw LimitError("graph6: n=" + std::to_string(n) + " exceeds limit " +
                     std::to_string(std::min(vertex_limit, kMaxVertices)));
  }

  const int order = static_cast<int>(n);
  const std::size_t bit_count = static_cast<std::size_t>(order) * (order - 1) / 2;
  const std::size_t byte_count = (bit_count + 5) / 6;
  if (text.size() - pos < byte_count) throw ParseError("graph6: truncated edge data");
  if (text.size() - pos > byte_count) throw ParseError("graph6: trailing garbage");

  Graph::Builder b(order);
  std::size_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) b.add_edge(i, j);
    }
  }
  if (bit_count % 6 != 0) {
    const int last = sextet(text[pos + byte_count - 1]);
    const int pad_mask = (1 << (6 - bit_count % 6)) - 1;
    if (last & pad_mask) throw ParseError("graph6: non-zero padding bits");
  }
  for (std::size_t i = pos; i < text.size(); ++i) sextet(text[i]);
  return std::move(b).build();
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(kLongHeader);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in, int vertex_limit) {
  std::vector<Graph> graphs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = strip_line_end(line);
    if (line_no == 1 && view.starts_with(">>graph6<<")) view.remove_prefix(10);
    if (view.empty()) continue;
    try {
      graphs.push_back(parse_graph6(view, vertex_limit));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return graphs;
}

std::vector<Graph> read_edge_lists(std::istream& in, int vertex_limit) {
  std::vector<Graph> graphs;
  long long n = 0;
  long long m = 0;
  while (in >> n) {
    if (!(in >> m)) throw ParseError("edge list: missing edge count");
    if (n < 0 || m < 0) throw ParseError("edge list: negative counts");
    if (n > vertex_limit || n > kMaxVertices) {
      throw LimitError("edge list: n=" + std::to_string(n) + " exceeds limit");
    }
    Graph::Builder b(static_cast<int>(n));
    std::set<std::pair<long long, long long>> seen;
    for (long long e = 0; e < m; ++e) {
      long long u = 0;
      long long v = 0;
      if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges");
      if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge list: endpoint out of range");
      if (u == v) throw ParseError("edge list: self-loop");
      if (!seen.emplace(std::min(u, v), std::max(u, v)).second) {
        throw ParseError("edge list: duplicate edge");
      }
      b.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    graphs.push_back(std::move(b).build());
  }
  if (!in.eof()) throw ParseError("edge list: unexpected token");
  return graphs;
}

Graph parse_edge_list(std::string_view text, int vertex_limit) {
  std::istringstream in{std::string(text)};
  auto graphs = read_edge_lists(in, vertex_limit);
  if (graphs.size() != 1) throw ParseError("edge list: expected exactly one graph");
  return std::move(graphs.front());
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace qpkit
