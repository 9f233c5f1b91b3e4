#pragma once

#include <stdexcept>
#include <string>

namespace oridom {

/// Malformed textual input (edge list, graph6, hypergraph, arc list).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computed value contradicts a known bound. Always a solver bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace oridom
