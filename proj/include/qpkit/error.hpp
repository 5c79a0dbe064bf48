#pragma once

#include <stdexcept>
#include <string>

namespace qpkit {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph6, edge lists, certificates, CLI notation).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A configured vertex, perfection, or memo limit was exceeded.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// A precondition on arguments does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A proved statement failed on a concrete graph. Carries the graph6 dump.
class TheoremViolation : public Error {
 public:
  TheoremViolation(const std::string& what, std::string graph6)
      : Error(what + ": " + graph6), graph6_(std::move(graph6)) {}
  const std::string& graph6() const { return graph6_; }

 private:
  std::string graph6_;
};

}  // namespace qpkit
