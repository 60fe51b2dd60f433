#pragma once

#include <stdexcept>
#include <string>

namespace richflow {

/// Malformed graph or flow input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed. Existence is guaranteed by theory, so
/// reaching this is a bug in the construction, never a property of the input.
class DefectError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace richflow
