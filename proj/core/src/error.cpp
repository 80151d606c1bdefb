#include "tmahler/error.hpp"

namespace tmahler {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::DivergentModulus: return "DivergentModulus";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::UnknownRootNumber: return "UnknownRootNumber";
    case ErrorCode::DegreeNonZero: return "DegreeNonZero";
    case ErrorCode::RootFindingFailure: return "RootFindingFailure";
    case ErrorCode::SliceDegeneracy: return "SliceDegeneracy";
    case ErrorCode::PathNotClosed: return "PathNotClosed";
    case ErrorCode::ExceptionalPoint: return "ExceptionalPoint";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace tmahler
