#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqcoh {

enum class ErrorCode {
  UnsupportedType,
  RankMismatch,
  IncompleteGroup,
  NotInCorootLattice,
  ZeroWeight,
  TruncationMismatch,
  UnsupportedTruncation,
  NotInAugmentationIdeal,
  TheoryMismatch,
  UnknownLabel,
  NotAPartialOrder,
  MissingPayload,
  ZeroDivisorEulerClass,
  DegreeMismatch,
  IllegalExtension,
  InvalidModel,
  ZeroTangentWeight,
  SearchExhausted,
  NonGenericCoweight,
  ClosureOrderMismatch,
  NotClosed,
  NotDominant,
  InvalidAlpha,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `code()` is stable and is what the CLI
/// reports in its machine-readable error stream.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eqcoh
