// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace simpord {

enum class ErrorKind {
  DuplicateSymbol,
  EmptySignature,
  NoConstant,
  InvalidIdentifier,
  UnknownSymbol,
  ArityMismatch,
  ParseError,
  NonCanonicalInput,
  LengthMismatch,
  WrongSignature,
  NoArgOrder,
  VectorTooLong,
  MissingArgOrder,
  InvalidPrecedence,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateSymbol: return "DuplicateSymbol";
    case ErrorKind::EmptySignature: return "EmptySignature";
    case ErrorKind::NoConstant: return "NoConstant";
    case ErrorKind::InvalidIdentifier: return "InvalidIdentifier";
    case ErrorKind::UnknownSymbol: return "UnknownSymbol";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NonCanonicalInput: return "NonCanonicalInput";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::WrongSignature: return "WrongSignature";
    case ErrorKind::NoArgOrder: return "NoArgOrder";
    case ErrorKind::VectorTooLong: return "VectorTooLong";
    case ErrorKind::MissingArgOrder: return "MissingArgOrder";
    case ErrorKind::InvalidPrecedence: return "InvalidPrecedence";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Syntax error in term or ordinal text; `position` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error(ErrorKind::ParseError, "at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace simpord
