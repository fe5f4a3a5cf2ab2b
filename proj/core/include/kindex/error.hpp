#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kindex {

// Stable, machine-readable failure modes. The string form returned by
// error_code_name() is part of the CLI contract and must not change.
enum class ErrorCode {
  InvalidArgument,
  CompositionNonzero,
  RingMismatch,
  NoSolution,
  AmbiguousTopTerm,
  UnknownSpace,
  DegreeMismatch,
  VirtualBundleUnsupported,
  MissingTangentData,
  EulerDivisionFailed,
  DimensionNotOdd,
  MissingComplexStructure,
  SymbolVanishesOnCircle,
  ZeroPolynomial,
  NoStabilization,
  DegreeOutOfRange,
  InvalidDifferential,
  OddCellsPresent,
  UnknownComplex,
  GroupMismatch,
  NonIntegralExpansion,
  NotElliptic,
  InfiniteSupport,
  UnknownGroup,
  ParseError,
  UnknownCommand,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace kindex
