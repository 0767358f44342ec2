#include "orbicoh/error.hpp"

namespace orbicoh {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::MalformedTable: return "MalformedTable";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::UnknownSubgroupId: return "UnknownSubgroupId";
    case ErrorCode::FamilyInvalid: return "FamilyInvalid";
    case ErrorCode::NotDownwardClosed: return "NotDownwardClosed";
    case ErrorCode::CategoryMismatch: return "CategoryMismatch";
    case ErrorCode::InducedMapFailure: return "InducedMapFailure";
    case ErrorCode::NotSubfamily: return "NotSubfamily";
    case ErrorCode::NotSuperfamily: return "NotSuperfamily";
    case ErrorCode::LiftFailed: return "LiftFailed";
    case ErrorCode::DegreeBoundExceeded: return "DegreeBoundExceeded";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotEquivariant: return "NotEquivariant";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::WindowTooShort: return "WindowTooShort";
    case ErrorCode::InvalidModule: return "InvalidModule";
    case ErrorCode::InvalidRepresentation: return "InvalidRepresentation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::InternalError: return "InternalError";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

}  // namespace orbicoh
