#include "eqcoh/error.hpp"

namespace eqcoh {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::IncompleteGroup: return "IncompleteGroup";
    case ErrorCode::NotInCorootLattice: return "NotInCorootLattice";
    case ErrorCode::ZeroWeight: return "ZeroWeight";
    case ErrorCode::TruncationMismatch: return "TruncationMismatch";
    case ErrorCode::UnsupportedTruncation: return "UnsupportedTruncation";
    case ErrorCode::NotInAugmentationIdeal: return "NotInAugmentationIdeal";
    case ErrorCode::TheoryMismatch: return "TheoryMismatch";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorCode::MissingPayload: return "MissingPayload";
    case ErrorCode::ZeroDivisorEulerClass: return "ZeroDivisorEulerClass";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::IllegalExtension: return "IllegalExtension";
    case ErrorCode::InvalidModel: return "InvalidModel";
    case ErrorCode::ZeroTangentWeight: return "ZeroTangentWeight";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::NonGenericCoweight: return "NonGenericCoweight";
    case ErrorCode::ClosureOrderMismatch: return "ClosureOrderMismatch";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace eqcoh
