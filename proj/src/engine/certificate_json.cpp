#include <string>

#include "qpkit/certificate.hpp"
#include "qpkit/error.hpp"
#include "qpkit/graph6.hpp"

namespace qpkit {
namespace {

using Json = nlohmann::ordered_json;

Json node_to_json(const Graph& g, const QpCertificate& cert) {
  Json node;
  node["graph6"] = emit_graph6(g);
  node["key"] = cert.key.bytes();
  if (cert.leaf) {
    node["leaf"] = true;
    return node;
  }
  node["pi"] = cert.pi.to_vector();
  node["pk"] = cert.pk.to_vector();
  node["pi_child"] =
      cert.pi_child ? node_to_json(remove_vertices(g, cert.pi), *cert.pi_child) : Json(nullptr);
  node["pk_child"] =
      cert.pk_child ? node_to_json(remove_vertices(g, cert.pk), *cert.pk_child) : Json(nullptr);
  return node;
}

VertexSet set_from_json(const Json& value, const char* field) {
  if (!value.is_array()) throw ParseError(std::string("certificate: '") + field + "' is not a list");
  VertexSet s;
  for (const auto& item : value) {
    if (!item.is_number_integer()) throw ParseError("certificate: non-integer vertex");
    const int v = item.get<int>();
    if (v < 0 || v >= kMaxVertices) throw ParseError("certificate: vertex out of range");
    s.insert(v);
  }
  return s;
}

std::shared_ptr<const QpCertificate> node_from_json(const Json& node, Graph* graph_out);

QpCertificate parse_node(const Json& node, Graph* graph_out) {
  if (!node.is_object()) throw ParseError("certificate: node is not an object");
  if (!node.contains("graph6") || !node["graph6"].is_string()) {
    throw ParseError("certificate: node lacks graph6");
  }
  if (graph_out != nullptr) *graph_out = parse_graph6(node["graph6"].get<std::string>());
  QpCertificate cert;
  if (node.contains("key")) {
    if (!node["key"].is_string()) throw ParseError("certificate: key is not a string");
    cert.key = CanonicalKey(node["key"].get<std::string>());
  } else {
    cert.key = canonical_key(parse_graph6(node["graph6"].get<std::string>()));
  }
  if (node.value("leaf", false)) {
    cert.leaf = true;
    return cert;
  }
  if (!node.contains("pi") || !node.contains("pk")) throw ParseError("certificate: missing pi/pk");
  cert.pi = set_from_json(node["pi"], "pi");
  cert.pk = set_from_json(node["pk"], "pk");
  cert.pi_child = node_from_json(node.value("pi_child", Json(nullptr)), nullptr);
  cert.pk_child = node_from_json(node.value("pk_child", Json(nullptr)), nullptr);
  return cert;
}

std::shared_ptr<const QpCertificate> node_from_json(const Json& node, Graph* graph_out) {
  if (node.is_null()) return nullptr;
  return std::make_shared<const QpCertificate>(parse_node(node, graph_out));
}

}  // namespace

Json certificate_to_json(const Graph& g, const QpCertificate& cert) {
  Json doc;
  doc["schema"] = kCertificateSchema;
  const Json body = node_to_json(g, cert);
  for (const auto& [k, v] : body.items()) doc[k] = v;
  return doc;
}

CertifiedGraph certificate_from_json(const Json& doc) {
  if (!doc.is_object() || doc.value("schema", std::string()) != kCertificateSchema) {
    throw ParseError(std::string("certificate: expected schema ") + kCertificateSchema);
  }
  CertifiedGraph out;
  out.certificate = parse_node(doc, &out.graph);
  return out;
}

}  // namespace qpkit
