#include "torusbt/error.hpp"

namespace torusbt {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonPermutation: return "NonPermutation";
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::NotHomomorphism: return "NotHomomorphism";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::NoSolution: return "NoSolution";
    case ErrorCode::NotRational: return "NotRational";
    case ErrorCode::NonAbelianRealization: return "NonAbelianRealization";
    case ErrorCode::MultiplicityNotInteger: return "MultiplicityNotInteger";
    case ErrorCode::NotSurjective: return "NotSurjective";
    case ErrorCode::IncompleteRealization: return "IncompleteRealization";
    case ErrorCode::NotTotallyReal: return "NotTotallyReal";
    case ErrorCode::StabilizationBoundExceeded: return "StabilizationBoundExceeded";
    case ErrorCode::BadReduction: return "BadReduction";
    case ErrorCode::CharacterMismatch: return "CharacterMismatch";
    case ErrorCode::InconsistentRank: return "InconsistentRank";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OracleMismatch: return "OracleMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace torusbt
