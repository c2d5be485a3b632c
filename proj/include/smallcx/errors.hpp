#pragma once

#include <stdexcept>
#include <string>

namespace smallcx {

/// Input violates an operation's documented precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed facet-list text or JSON.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A search that a proven statement guarantees to succeed came back empty.
/// Seeing this means either a bug or a counterexample; never swallow it.
class InternalContradiction : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace smallcx
