#include "kindex/error.hpp"

namespace kindex {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CompositionNonzero: return "CompositionNonzero";
    case ErrorCode::RingMismatch: return "RingMismatch";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::AmbiguousTopTerm: return "AmbiguousTopTerm";
    case ErrorCode::UnknownSpace: return "UnknownSpace";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::VirtualBundleUnsupported: return "VirtualBundleUnsupported";
    case ErrorCode::MissingTangentData: return "MissingTangentData";
    case ErrorCode::EulerDivisionFailed: return "EulerDivisionFailed";
    case ErrorCode::DimensionNotOdd: return "DimensionNotOdd";
    case ErrorCode::MissingComplexStructure: return "MissingComplexStructure";
    case ErrorCode::SymbolVanishesOnCircle: return "SymbolVanishesOnCircle";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::NoStabilization: return "NoStabilization";
    case ErrorCode::DegreeOutOfRange: return "DegreeOutOfRange";
    case ErrorCode::InvalidDifferential: return "InvalidDifferential";
    case ErrorCode::OddCellsPresent: return "OddCellsPresent";
    case ErrorCode::UnknownComplex: return "UnknownComplex";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NonIntegralExpansion: return "NonIntegralExpansion";
    case ErrorCode::NotElliptic: return "NotElliptic";
    case ErrorCode::InfiniteSupport: return "InfiniteSupport";
    case ErrorCode::UnknownGroup: return "UnknownGroup";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownCommand: return "UnknownCommand";
  }
  return "Unknown";
}

}  // namespace kindex
