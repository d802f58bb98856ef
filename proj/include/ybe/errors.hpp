#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybe {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed solution, cross-map or word text. Line and column are 1-based;
/// column 0 means "whole line".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A value violates the invariants of its type (non-bijective table,
/// index out of range, inconsistent coefficients, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition (e.g. normal forms on
/// a presentation that is not a Groebner basis).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A configured size bound was exceeded.
class BoundExceeded : public Error {
 public:
  using Error::Error;
};

/// A check that a theorem guarantees for valid input came out false.
/// Carries the full trace so callers can dump it.
class Falsification : public Error {
 public:
  Falsification(const std::string& what, std::vector<std::string> trace)
      : Error(what), trace_(std::move(trace)) {}

  const std::vector<std::string>& trace() const noexcept { return trace_; }

 private:
  std::vector<std::string> trace_;
};

}  // namespace ybe
