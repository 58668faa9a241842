// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ratcurves Authors
#pragma once

#include <stdexcept>
#include <string>

namespace ratcurves {

enum class ErrorKind {
  Domain,             // argument outside the operation's domain
  Degree,             // wrong polynomial degree for the operation
  UndefinedResultant,
  SingularMatrix,
  UnsupportedField,   // would need irrational coordinates
  DepthExceeded,
  NonReduced,
  Reducible,
  CommonComponent,
  DegenerateFamily,
  DegeneratePencil,
  Precondition,
  Guard,
  CacheInvalid,
  Internal,
  MalformedInput,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Degree: return "degree";
    case ErrorKind::UndefinedResultant: return "undefined-resultant";
    case ErrorKind::SingularMatrix: return "singular-matrix";
    case ErrorKind::UnsupportedField: return "unsupported-field";
    case ErrorKind::DepthExceeded: return "depth-exceeded";
    case ErrorKind::NonReduced: return "non-reduced";
    case ErrorKind::Reducible: return "reducible";
    case ErrorKind::CommonComponent: return "common-component";
    case ErrorKind::DegenerateFamily: return "degenerate-family";
    case ErrorKind::DegeneratePencil: return "degenerate-pencil";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Guard: return "guard";
    case ErrorKind::CacheInvalid: return "cache-invalid";
    case ErrorKind::Internal: return "internal";
    case ErrorKind::MalformedInput: return "malformed-input";
  }
  return "unknown";
}

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool condition, ErrorKind kind, const char* what) {
  if (!condition) fail(kind, what);
}

}  // namespace ratcurves
