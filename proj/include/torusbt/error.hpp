#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torusbt {

enum class ErrorCode {
  ShapeMismatch,
  NonPermutation,
  InvalidGroup,
  GroupTooLarge,
  NotUnimodular,
  NotHomomorphism,
  GroupMismatch,
  NoSolution,
  NotRational,
  NonAbelianRealization,
  MultiplicityNotInteger,
  NotSurjective,
  IncompleteRealization,
  NotTotallyReal,
  StabilizationBoundExceeded,
  BadReduction,
  CharacterMismatch,
  InconsistentRank,
  InvalidArgument,
  OracleMismatch,
  ParseError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// the manifest runner can embed it per command.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace torusbt
