#include "strata/errors.hpp"

namespace strata {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::InvalidGenus: return "InvalidGenus";
        case ErrorCode::EmptyType: return "EmptyType";
        case ErrorCode::NonPositiveRank: return "NonPositiveRank";
        case ErrorCode::LengthMismatch: return "LengthMismatch";
        case ErrorCode::NonDecreasingParameter: return "NonDecreasingParameter";
        case ErrorCode::RankCapExceeded: return "RankCapExceeded";
        case ErrorCode::RankTooSmall: return "RankTooSmall";
        case ErrorCode::NotAdmissible: return "NotAdmissible";
        case ErrorCode::NonIntegralTableValue: return "NonIntegralTableValue";
        case ErrorCode::AllRanksOne: return "AllRanksOne";
        case ErrorCode::HNWindowViolated: return "HNWindowViolated";
        case ErrorCode::SaturationOutOfRange: return "SaturationOutOfRange";
        case ErrorCode::CaseGapError: return "CaseGapError";
        case ErrorCode::MissingSaturationDegree: return "MissingSaturationDegree";
        case ErrorCode::LevelOverflow: return "LevelOverflow";
        case ErrorCode::NotDestabilizing: return "NotDestabilizing";
        case ErrorCode::ZeroOrFullDestabilizer: return "ZeroOrFullDestabilizer";
        case ErrorCode::InvalidGradedType: return "InvalidGradedType";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::UsageError: return "UsageError";
    }
    return "UnknownError";
}

}  // namespace strata
