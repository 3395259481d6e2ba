#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chromstream {

// Violated precondition on a caller-supplied argument.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operation called on an input the precondition rules out (e.g. a witness
// requested for the wrong answer branch).
class PreconditionError : public ArgumentError {
 public:
  using ArgumentError::ArgumentError;
};

// Malformed text input. `line` is 1-based; 0 when not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that breaks a semantic rule (negative multiplicity,
// colliding clique edges).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Randomized generator gave up (retry budget exhausted or infeasible).
class GenerationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Requested object would not fit the vertex-id range or memory guard.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The runtime environment refused a request, e.g. a stream source that
// does not allow another pass.
class EnvironmentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace chromstream
