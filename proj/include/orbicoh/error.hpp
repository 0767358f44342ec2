#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbicoh {

enum class ErrorCode {
  NotPrime,
  DimensionMismatch,
  MalformedTable,
  NoIdentity,
  NoInverse,
  NotAssociative,
  NotAPermutation,
  GroupTooLarge,
  UnknownName,
  UnknownSubgroupId,
  FamilyInvalid,
  NotDownwardClosed,
  CategoryMismatch,
  InducedMapFailure,
  NotSubfamily,
  NotSuperfamily,
  LiftFailed,
  DegreeBoundExceeded,
  NotNormal,
  NotEquivariant,
  NotSurjective,
  WindowTooShort,
  InvalidModule,
  InvalidRepresentation,
  ParseError,
  IoError,
  InternalError,
};

std::string_view error_name(ErrorCode code);

/// Every failure raised by the library carries a structured code; the CLI
/// prints `error_name(code())` so scripts can match on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace orbicoh
