#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trichain {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed raw input (empty vectors, non-positive entries, unparsable text).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A length vector that violates one or more family constraints.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& what, std::vector<std::string> violations)
      : Error(what), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

/// Turn sequences with steps out of range or gaps smaller than two.
class EncodingError : public Error {
 public:
  using Error::Error;
};

/// Arguments outside an operation's mathematical domain (degree, triangle count, ranges).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The closed-form census is only derived for chains with three or more segments.
class UnsupportedCaseError : public Error {
 public:
  using Error::Error;
};

/// Two independent routes disagreed; indicates a bug, never bad user input.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A constructed chain has a vertex of degree six or more.
class NotInFamilyError : public InternalConsistencyError {
 public:
  NotInFamilyError(const std::string& what, int vertex, int degree)
      : InternalConsistencyError(what), vertex_(vertex), degree_(degree) {}

  /// Zero-based vertex index.
  int vertex() const noexcept { return vertex_; }
  int degree() const noexcept { return degree_; }

 private:
  int vertex_;
  int degree_;
};

class UnknownIndexError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace trichain
