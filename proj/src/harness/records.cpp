#include <sstream>

#include "qpkit/error.hpp"
#include "qpkit/graph6.hpp"
#include "qpkit/harness.hpp"
#include "qpkit/invariants.hpp"
#include "qpkit/perfect.hpp"

namespace qpkit {

ClassificationRecord classify(const Graph& g, const RecognitionOutcome& outcome,
                              int perfection_limit) {
  ClassificationRecord r;
  r.key = canonical_key(g);
  r.graph6 = emit_graph6(g);
  r.n = g.order();
  r.m = g.edge_count();
  const InvariantTriple inv = invariants(g);
  r.omega = inv.omega;
  r.alpha = inv.alpha;
  r.chi = inv.chi;
  if (g.order() <= perfection_limit) r.perfect = is_perfect(g);
  r.quasiperfect = outcome.quasiperfect;
  if (r.quasiperfect && r.omega != r.chi) {
    throw TheoremViolation("quasiperfect graph with omega != chi", r.graph6);
  }
  return r;
}

nlohmann::ordered_json to_json(const ClassificationRecord& r) {
  nlohmann::ordered_json j;
  j["graph6"] = r.graph6;
  j["key"] = r.key.bytes();
  j["n"] = r.n;
  j["m"] = r.m;
  j["omega"] = r.omega;
  j["alpha"] = r.alpha;
  j["chi"] = r.chi;
  j["perfect"] = r.perfect ? nlohmann::ordered_json(*r.perfect) : nlohmann::ordered_json(nullptr);
  j["quasiperfect"] = r.quasiperfect;
  j["cert_ref"] = r.cert_ref ? nlohmann::ordered_json(*r.cert_ref) : nlohmann::ordered_json(nullptr);
  return j;
}

std::string csv_header() { return "graph6,key,n,m,omega,alpha,chi,perfect,quasiperfect,cert_ref"; }

namespace {

// graph6 bytes may include '"' and ','; quote every text field.
std::string quoted(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

std::string to_csv_row(const ClassificationRecord& r) {
  std::ostringstream out;
  out << quoted(r.graph6) << ',' << quoted(r.key.bytes()) << ',' << r.n << ',' << r.m << ','
      << r.omega << ',' << r.alpha << ',' << r.chi << ','
      << (r.perfect ? (*r.perfect ? "true" : "false") : "") << ','
      << (r.quasiperfect ? "true" : "false") << ',' << (r.cert_ref ? quoted(*r.cert_ref) : "");
  return out.str();
}

}  // namespace qpkit
