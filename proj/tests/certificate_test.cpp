#include "doctest.h"
#include "qpkit/certificate.hpp"
#include "qpkit/constructions.hpp"
#include "qpkit/error.hpp"
#include "qpkit/graph6.hpp"
#include "qpkit/harness.hpp"
#include "qpkit/invariants.hpp"
#include "qpkit/recognizer.hpp"

using namespace qpkit;

namespace {

QpCertificate certify(const Graph& g) {
  auto outcome = is_quasiperfect(g);
  REQUIRE(outcome.quasiperfect);
  return *outcome.certificate;
}

}  // namespace

TEST_CASE("verification accepts engine certificates and the K0 leaf") {
  const Graph f = odd_cycle_family({5, {1}}).graph;
  CHECK(verify_certificate(f, certify(f)).valid());
  CHECK(verify_certificate(Graph{}, QpCertificate::make_leaf()).valid());
}

TEST_CASE("verification rejects broken certificates") {
  const FamilyGraph fg = odd_cycle_family({5, {1}});
  const QpCertificate good = certify(fg.graph);

  QpCertificate bad = good;
  bad.pi.insert(fg.w(1));  // v1 ~ w1
  auto verdict = verify_certificate(fg.graph, bad);
  CHECK_FALSE(verdict.valid());
  CHECK(verdict.defect == CertificateDefect::PiNotIndependent);
  CHECK(verdict.path == "root");

  bad = good;
  bad.pk = VertexSet{fg.w(1), fg.v(1), fg.v(2)};
  CHECK(verify_certificate(fg.graph, bad).defect ==
        CertificateDefect::PkVertexOutsideMaximumIndependentSets);

  bad = good;
  bad.pk_child = nullptr;
  CHECK(verify_certificate(fg.graph, bad).defect == CertificateDefect::MissingBranch);

  CHECK(verify_certificate(Graph::cycle(5), good).defect == CertificateDefect::KeyMismatch);
  CHECK(verify_certificate(Graph{}, good).defect == CertificateDefect::KeyMismatch);

  QpCertificate leafy = QpCertificate::make_leaf();
  leafy.key = canonical_key(Graph::empty(1));
  CHECK(verify_certificate(Graph::empty(1), leafy).defect ==
        CertificateDefect::LeafOnNonEmptyGraph);

  // A defect deep in the tree is reported with its path.
  bad = good;
  auto child = std::make_shared<QpCertificate>(*good.pi_child);
  child->pi = child->pi.with(0).with(1);
  bad.pi_child = child;
  verdict = verify_certificate(fg.graph, bad);
  CHECK_FALSE(verdict.valid());
  CHECK(verdict.path == "root.pi");
}

TEST_CASE("colouring from a certificate") {
  const Graph f = odd_cycle_family({5, {1}}).graph;
  auto colours = colouring_from_certificate(f, certify(f));
  CHECK(is_proper_colouring(f, colours));
  CHECK(colours_used(colours) == 3);

  const Graph k3 = Graph::complete(3);
  colours = colouring_from_certificate(k3, certify(k3));
  CHECK(is_proper_colouring(k3, colours));
  CHECK(colours_used(colours) == 3);

  const Graph e4 = Graph::empty(4);
  colours = colouring_from_certificate(e4, certify(e4));
  CHECK(colours == std::vector<int>{0, 0, 0, 0});

  CHECK(colouring_from_certificate(Graph{}, QpCertificate::make_leaf()).empty());
  CHECK_THROWS_AS(colouring_from_certificate(Graph::cycle(5), certify(f)), InvalidArgument);
}

TEST_CASE("complementing certificates") {
  const FamilyGraph fg = odd_cycle_family({5, {1}});
  const QpCertificate cert = certify(fg.graph);
  const QpCertificate dual = complement_certificate(cert);
  CHECK(verify_certificate(complement(fg.graph), dual).valid());
  CHECK(dual.pi == cert.pk);
  CHECK(dual.pk == cert.pi);
  CHECK(verify_certificate(fg.graph, complement_certificate(dual)).valid());

  for (int n = 1; n <= 5; ++n) {
    const QpCertificate kn = certify(Graph::complete(n));
    CHECK(verify_certificate(Graph::empty(n), complement_certificate(kn)).valid());
  }

  QpCertificate broken = cert;
  broken.leaf = true;
  CHECK_THROWS_AS(complement_certificate(broken), InvalidArgument);
}

TEST_CASE("complemented certificates verify on every accepted graph with n <= 6") {
  Recognizer recognizer;
  for (const Graph& g : enumerate_graphs_up_to(6)) {
    const auto outcome = recognizer.recognize(g);
    if (!outcome.quasiperfect) continue;
    REQUIRE(verify_certificate(complement(g), complement_certificate(*outcome.certificate)));
  }
}

TEST_CASE("certificate JSON") {
  const Graph g = odd_cycle_family({5, {1, 2}}).graph;
  const QpCertificate cert = certify(g);
  const auto doc = certificate_to_json(g, cert);
  CHECK(doc["schema"] == "qpcert-v1");
  CHECK(doc["graph6"] == emit_graph6(g));
  CHECK(doc["pi"] == cert.pi.to_vector());
  CHECK(doc["pk"] == cert.pk.to_vector());
  CHECK(doc["pi_child"]["graph6"] == emit_graph6(remove_vertices(g, cert.pi)));
  CHECK(certificate_to_json(Graph{}, QpCertificate::make_leaf())["leaf"] == true);

  const auto text = doc.dump();
  const auto parsed = certificate_from_json(nlohmann::ordered_json::parse(text));
  CHECK(parsed.graph == g);
  CHECK(verify_certificate(parsed.graph, parsed.certificate).valid());
  CHECK(certificate_to_json(parsed.graph, parsed.certificate).dump() == text);

  auto wrong = doc;
  wrong["schema"] = "qpcert-v0";
  CHECK_THROWS_AS(certificate_from_json(wrong), ParseError);
  wrong = doc;
  wrong["pi"] = "oops";
  CHECK_THROWS_AS(certificate_from_json(wrong), ParseError);
  wrong = doc;
  wrong.erase("graph6");
  CHECK_THROWS_AS(certificate_from_json(wrong), ParseError);
}
