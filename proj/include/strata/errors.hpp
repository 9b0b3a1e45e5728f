#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace strata {

// Machine-readable error codes. The CLI prints the code name verbatim on
// its error line and maps domain codes to exit status 2, usage/io to 1.
enum class ErrorCode {
    Overflow,
    DivisionByZero,
    InvalidGenus,
    EmptyType,
    NonPositiveRank,
    LengthMismatch,
    NonDecreasingParameter,
    RankCapExceeded,
    RankTooSmall,
    NotAdmissible,
    NonIntegralTableValue,
    AllRanksOne,
    HNWindowViolated,
    SaturationOutOfRange,
    CaseGapError,
    MissingSaturationDegree,
    LevelOverflow,
    NotDestabilizing,
    ZeroOrFullDestabilizer,
    InvalidGradedType,
    IoError,
    UsageError,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code),
          message_(message) {}

    ErrorCode code() const { return code_; }
    const std::string& message() const { return message_; }

  private:
    ErrorCode code_;
    std::string message_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace strata
