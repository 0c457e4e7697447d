#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace descent {

/// Caller violated a documented precondition (mismatched rings, bad
/// parameters, out-of-range catalog indices, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Division by zero in F_p.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A configured engine cap (reduction steps, pair queue, exponent range)
/// was exceeded. The computation was abandoned; no partial answer exists.
class EngineLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Criteria reports that contradict each other, e.g. a sufficient
/// certificate of descent next to a failed necessary condition.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message)
      : std::runtime_error(message + " at offset " + std::to_string(position)),
        position_(position),
        message_(message) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

}  // namespace descent
