#pragma once

#include <stdexcept>
#include <string>

namespace mist {

/// Input that cannot be parsed; `line` is 1-based (0 when not tied to a line).
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Well-formed input that violates an operation's precondition
/// (disconnected graph, size bound exceeded, mismatched trace, ...).
class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A proven invariant failed at runtime. Always a bug or a counterexample.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace mist
