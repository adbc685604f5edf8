#pragma once

#include <stdexcept>
#include <string>

namespace divscore {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A value would break a documented invariant of a domain type.
/// The message always starts with "invariant violated: <name>".
class InvariantError : public Error {
 public:
  InvariantError(const std::string& invariant, const std::string& detail);
  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

/// Malformed, missing or inconsistent user input (files, flags, tables).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Byte sequence that is not valid UTF-8.
class EncodingError : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace divscore
