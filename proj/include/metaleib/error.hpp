#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metaleib {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two operands carry different ambient ranks n.
class RankMismatch : public Error {
 public:
  RankMismatch(std::size_t lhs, std::size_t rhs)
      : Error("rank mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// A generator, adjoint or permutation index outside 1..n.
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// An operation was called on an argument outside its domain
/// (nonzero linear part where L_n' is required, element not in A_n, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// decompose_symmetric / decompose_preserving on an element that fails the criterion.
class NotSymmetric : public Error {
 public:
  using Error::Error;
};

/// SymmetricData whose f or g is not fixed by the required stabilizer.
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

/// Brute-force routines refuse inputs whose cost grows past a configured bound.
class CostBoundExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace metaleib
