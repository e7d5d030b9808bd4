#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mlat {

enum class ErrorKind {
  NotAPartialOrder,
  NotALattice,
  NoBounds,
  NotCommutative,
  NotAssociative,
  IdentityFails,
  NotJoinDistributive,
  BottomNotAbsorbing,
  NotDistributive,
  NotBoolean,
  RadicalMismatch,
  FrameLawViolation,
  PreconditionViolated,
  UnknownFixture,
  UnknownPredicate,
  InvalidArgument,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorKind kind);

/// Base exception of the library. Carries the kind of failure and, where
/// one exists, a tuple of element indices demonstrating it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::uint32_t> witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::uint32_t> witness_;
};

/// Malformed MLAT text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed MLAT text whose order or multiplication violates the axioms.
/// `cause()` is the kind raised by lattice or quantale validation.
class ValidationError : public Error {
 public:
  explicit ValidationError(const Error& cause);

  ErrorKind cause() const noexcept { return cause_; }

 private:
  ErrorKind cause_;
};

}  // namespace mlat
