// Copyright 2026 The eaqecc Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace eaqecc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operation needs a field of a different shape (e.g. square order).
class InvalidFieldError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A set-difference weight was requested over an empty set.
class EmptySetError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed its configured cap.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// A propagation rule's side conditions are not met.
class RuleNotApplicableError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input; carries the offending line number when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace eaqecc
