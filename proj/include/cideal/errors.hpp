#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cideal {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad grammar, dimension or context
/// mismatch, a violated precondition the caller controls.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class NotMPrimary : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class InclusionViolated : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// Text that failed to parse; `position()` is a 0-based byte offset into
/// the offending string.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const noexcept { return position_; }
  /// The message without the offset suffix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t position_;
  std::string message_;
};

/// A configured resource limit was hit before the computation finished.
/// Raising the limit may let the same call succeed.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// No window of the sequence stabilized within the values supplied.
class NoStableWindow : public CapExceeded {
 public:
  using CapExceeded::CapExceeded;
};

/// A post-hoc consistency check failed: a heuristic stop fired too early,
/// a derived object broke an invariant, or two methods disagreed.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// E_i has more than one maximal element among monomial candidates.
class NonUniqueMaximum : public ConsistencyError {
 public:
  using ConsistencyError::ConsistencyError;
};

}  // namespace cideal
