#include "qpkit/certificate.hpp"

#include "qpkit/error.hpp"
#include "qpkit/graph6.hpp"
#include "qpkit/invariants.hpp"
#include "qpkit/prime_sets.hpp"

namespace qpkit {

QpCertificate QpCertificate::make_leaf() {
  QpCertificate leaf;
  leaf.key = canonical_key(Graph{});
  leaf.leaf = true;
  return leaf;
}

std::size_t QpCertificate::node_count() const {
  std::size_t count = 1;
  if (pi_child) count += pi_child->node_count();
  if (pk_child) count += pk_child->node_count();
  return count;
}

const char* to_string(CertificateDefect defect) {
  switch (defect) {
    case CertificateDefect::None: return "none";
    case CertificateDefect::KeyMismatch: return "key-mismatch";
    case CertificateDefect::LeafOnNonEmptyGraph: return "leaf-on-nonempty-graph";
    case CertificateDefect::MissingLeafOnEmptyGraph: return "missing-leaf-on-empty-graph";
    case CertificateDefect::MissingBranch: return "missing-branch";
    case CertificateDefect::PiOutOfRange: return "pi-out-of-range";
    case CertificateDefect::PiEmpty: return "pi-empty";
    case CertificateDefect::PiNotIndependent: return "pi-not-independent";
    case CertificateDefect::PiMissesMaximumClique: return "pi-misses-maximum-clique";
    case CertificateDefect::PiVertexOutsideMaximumCliques:
      return "pi-vertex-outside-maximum-cliques";
    case CertificateDefect::PkOutOfRange: return "pk-out-of-range";
    case CertificateDefect::PkEmpty: return "pk-empty";
    case CertificateDefect::PkNotClique: return "pk-not-clique";
    case CertificateDefect::PkMissesMaximumIndependentSet:
      return "pk-misses-maximum-independent-set";
    case CertificateDefect::PkVertexOutsideMaximumIndependentSets:
      return "pk-vertex-outside-maximum-independent-sets";
  }
  return "unknown";
}

namespace {

// Both prime-set conditions evaluated directly from the enumerated maximum
// sets, independent of the engine's candidate generator.
CertificateDefect check_side(const Graph& g, VertexSet s, bool independent_side) {
  const auto targets = independent_side ? maximum_cliques(g) : maximum_independent_sets(g);
  if (!s.subset_of(g.vertices())) {
    return independent_side ? CertificateDefect::PiOutOfRange : CertificateDefect::PkOutOfRange;
  }
  if (s.empty()) return independent_side ? CertificateDefect::PiEmpty : CertificateDefect::PkEmpty;
  if (independent_side ? !g.is_independent(s) : !g.is_clique(s)) {
    return independent_side ? CertificateDefect::PiNotIndependent : CertificateDefect::PkNotClique;
  }
  VertexSet covered;
  for (VertexSet t : targets) {
    if (!t.intersects(s)) {
      return independent_side ? CertificateDefect::PiMissesMaximumClique
                              : CertificateDefect::PkMissesMaximumIndependentSet;
    }
    covered |= t;
  }
  if (!s.subset_of(covered)) {
    return independent_side ? CertificateDefect::PiVertexOutsideMaximumCliques
                            : CertificateDefect::PkVertexOutsideMaximumIndependentSets;
  }
  return CertificateDefect::None;
}

CertificateVerdict verify_node(const Graph& g, const QpCertificate& cert, const std::string& path) {
  if (cert.key != canonical_key(g)) return {CertificateDefect::KeyMismatch, path};
  if (g.order() == 0) {
    if (!cert.leaf) return {CertificateDefect::MissingLeafOnEmptyGraph, path};
    return {CertificateDefect::None, path};
  }
  if (cert.leaf) return {CertificateDefect::LeafOnNonEmptyGraph, path};
  if (!cert.pi_child || !cert.pk_child) return {CertificateDefect::MissingBranch, path};

  if (auto d = check_side(g, cert.pi, true); d != CertificateDefect::None) return {d, path};
  if (auto d = check_side(g, cert.pk, false); d != CertificateDefect::None) return {d, path};

  if (auto v = verify_node(remove_vertices(g, cert.pi), *cert.pi_child, path + ".pi"); !v) return v;
  return verify_node(remove_vertices(g, cert.pk), *cert.pk_child, path + ".pk");
}

}  // namespace

CertificateVerdict verify_certificate(const Graph& g, const QpCertificate& cert) {
  return verify_node(g, cert, "root");
}

std::vector<int> colouring_from_certificate(const Graph& g, const QpCertificate& cert) {
  if (auto verdict = verify_certificate(g, cert); !verdict) {
    throw InvalidArgument(std::string("certificate rejected at ") + verdict.path + ": " +
                          to_string(verdict.defect));
  }
  std::vector<int> colours(static_cast<std::size_t>(g.order()), -1);
  // original[i] is the vertex of g that is vertex i of the current residue.
  std::vector<int> original(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) original[v] = v;

  const QpCertificate* node = &cert;
  int colour = 0;
  while (!node->leaf) {
    std::vector<int> rest;
    for (int i = 0; i < static_cast<int>(original.size()); ++i) {
      if (node->pi.contains(i)) {
        colours[original[i]] = colour;
      } else {
        rest.push_back(original[i]);
      }
    }
    original = std::move(rest);
    node = node->pi_child.get();
    ++colour;
  }
  return colours;
}

namespace {

QpCertificate complement_node(const QpCertificate& cert) {
  const Graph g = graph_of(cert.key);
  if (cert.leaf != (g.order() == 0)) {
    throw InvalidArgument("complement_certificate: leaf marker disagrees with key");
  }
  if (cert.leaf) return cert;
  if (!cert.pi.subset_of(g.vertices()) || !cert.pk.subset_of(g.vertices())) {
    throw InvalidArgument("complement_certificate: prime set out of range");
  }
  QpCertificate out;
  out.key = canonical_key(complement(g));
  out.pi = cert.pk;
  out.pk = cert.pi;
  if (cert.pk_child) {
    out.pi_child = std::make_shared<const QpCertificate>(complement_node(*cert.pk_child));
  }
  if (cert.pi_child) {
    out.pk_child = std::make_shared<const QpCertificate>(complement_node(*cert.pi_child));
  }
  return out;
}

}  // namespace

QpCertificate complement_certificate(const QpCertificate& cert) { return complement_node(cert); }

}  // namespace qpkit
