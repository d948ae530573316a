#pragma once

#include <stdexcept>
#include <string>

namespace ewrithe {

enum class ErrorKind {
  InvalidInput,
  ReducibleParametrization,
  CuspDetected,
  RealSingularityDetected,
  ComponentsIntersect,
  SingularMatrix,
  SamplingExhausted,
  CenterOnCurve,
  CenterOnSingularLine,
  DegenerateElimination,
  NonGenericProjection,
  TangentialPair,
  ZeroDeterminant,
  MissingOrientation,
  ParseError,
};

const char* to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` carries the category and
/// `witness()` an optional printable witness (usually a polynomial).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string witness = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& witness() const noexcept { return witness_; }

 private:
  ErrorKind kind_;
  std::string witness_;
};

}  // namespace ewrithe
