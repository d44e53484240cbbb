#pragma once

#include <stdexcept>
#include <string>

namespace e8lab {

/// Input rejected by a precondition check (bad diagram, malformed word, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed input for which the computation cannot produce a result,
/// e.g. a germ whose singularity is not isolated.
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A postcondition failed. Seeing one of these means a bug in this library.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parse failure with the 0-based offset into the input text.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : ValidationError(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace e8lab
