#include <charconv>
#include <sstream>
#include <string>

#include "qpkit/constructions.hpp"
#include "qpkit/error.hpp"

namespace qpkit {
namespace {

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw ParseError("construction: bad " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

std::vector<int> parse_list(std::string_view text) {
  if (text.starts_with('{')) {
    if (!text.ends_with('}')) throw ParseError("construction: unbalanced braces");
    text = text.substr(1, text.size() - 2);
  }
  std::vector<int> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    out.push_back(parse_int(text.substr(0, comma), "position"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
    if (text.empty()) throw ParseError("construction: trailing comma");
  }
  if (out.empty()) throw ParseError("construction: empty position list");
  return out;
}

}  // namespace

std::variant<FamilySpec, BlowupSpec> parse_construction(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string kind;
  in >> kind;
  std::map<std::string, std::string> fields;
  for (std::string token; in >> token;) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ParseError("construction: expected key=value, got '" + token + "'");
    if (!fields.emplace(token.substr(0, eq), token.substr(eq + 1)).second) {
      throw ParseError("construction: repeated field '" + token.substr(0, eq) + "'");
    }
  }

  if (kind == "family") {
    if (fields.size() != 2 || !fields.contains("n") || !fields.contains("k")) {
      throw ParseError("construction: family needs exactly n= and k=");
    }
    return FamilySpec{parse_int(fields["n"], "n"), parse_list(fields["k"])};
  }
  if (kind == "c5blowup") {
    if (fields.size() != 1 || !fields.contains("t")) {
      throw ParseError("construction: c5blowup needs exactly t=");
    }
    return BlowupSpec{parse_int(fields["t"], "t")};
  }
  throw ParseError("construction: unknown kind '" + kind + "'");
}

}  // namespace qpkit
