#include "qpkit/vertex_set.hpp"

#include <algorithm>

namespace qpkit {

VertexSet::VertexSet(std::initializer_list<int> vertices) {
  for (int v : vertices) insert(v);
}

VertexSet VertexSet::from_vertices(std::span<const int> vertices) {
  VertexSet s;
  for (int v : vertices) s.insert(v);
  return s;
}

std::vector<int> VertexSet::to_vector() const {
  std::vector<int> out;
  out.reserve(size());
  for (int v : *this) out.push_back(v);
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_item = true;
  for (int v : *this) {
    if (!first_item) out += ',';
    out += std::to_string(v);
    first_item = false;
  }
  out += '}';
  return out;
}

bool lex_less(VertexSet a, VertexSet b) {
  auto x = a.begin(), y = b.begin();
  for (; x != a.end() && y != b.end(); ++x, ++y) {
    if (*x != *y) return *x < *y;
  }
  return x == a.end() && y != b.end();
}

}  // namespace qpkit
