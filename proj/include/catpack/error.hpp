#pragma once

#include <stdexcept>
#include <string>

namespace catpack {

/// Caller handed in something outside an operation's contract.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A step that a proved lemma guarantees has failed. Seeing one of these
/// means a bug in this library, not bad input.
class LemmaViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Inserting an edge would create a parallel edge or a loop.
class ParallelEdge : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed JSON or text input.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An enumeration was asked for more than its documented budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace catpack
