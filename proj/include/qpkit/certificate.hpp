#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qpkit/canonical.hpp"
#include "qpkit/graph.hpp"
#include "json.hpp"

namespace qpkit {

/// Witness tree for the inductive definition. Vertex sets are expressed in
/// the labeling of the certified graph; each child certifies the residue
/// graph with its vertices renumbered in increasing order (as produced by
/// remove_vertices). A leaf certifies K0 and carries no children.
struct QpCertificate {
  CanonicalKey key;
  bool leaf = false;
  VertexSet pi;
  VertexSet pk;
  /// Null when the branch was not established (only in the disjunctive
  /// reading; a valid certificate has both).
  std::shared_ptr<const QpCertificate> pi_child;
  std::shared_ptr<const QpCertificate> pk_child;

  static QpCertificate make_leaf();

  /// Number of nodes in the fully expanded tree.
  std::size_t node_count() const;
};

enum class CertificateDefect {
  None,
  KeyMismatch,
  LeafOnNonEmptyGraph,
  MissingLeafOnEmptyGraph,
  MissingBranch,
  PiOutOfRange,
  PiEmpty,
  PiNotIndependent,
  PiMissesMaximumClique,
  PiVertexOutsideMaximumCliques,
  PkOutOfRange,
  PkEmpty,
  PkNotClique,
  PkMissesMaximumIndependentSet,
  PkVertexOutsideMaximumIndependentSets,
};

const char* to_string(CertificateDefect defect);

struct CertificateVerdict {
  CertificateDefect defect = CertificateDefect::None;
  /// Location of the first defect, e.g. "root.pi.pk".
  std::string path = "root";

  bool valid() const { return defect == CertificateDefect::None; }
  explicit operator bool() const { return valid(); }
};

/// Re-checks every clause at every node against g and its residues, using
/// only graph-core routines.
CertificateVerdict verify_certificate(const Graph& g, const QpCertificate& cert);

/// Proper colouring with exactly ω(g) colours: the top-level PI gets colour
/// 0, the PI of its residue colour 1, and so on down the pi_child chain.
/// Throws InvalidArgument when the certificate does not verify.
std::vector<int> colouring_from_certificate(const Graph& g, const QpCertificate& cert);

/// Certificate for complement(g) given one for g: PI and PK swap roles at
/// every level and keys are recomputed.
QpCertificate complement_certificate(const QpCertificate& cert);

inline constexpr const char* kCertificateSchema = "qpcert-v1";

/// Self-contained document; every node records the graph6 of the graph it
/// certifies.
nlohmann::ordered_json certificate_to_json(const Graph& g, const QpCertificate& cert);

struct CertifiedGraph {
  Graph graph;
  QpCertificate certificate;
};

/// Throws ParseError on schema or shape problems; does not verify.
CertifiedGraph certificate_from_json(const nlohmann::ordered_json& doc);

}  // namespace qpkit
