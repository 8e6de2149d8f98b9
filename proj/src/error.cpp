#include "secant/error.hpp"

namespace secant {

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::NonPositivePart: return "NonPositivePart";
    case ErrorCode::TooFewParts: return "TooFewParts";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidRange: return "InvalidRange";
    case ErrorCode::NegativeDegree: return "NegativeDegree";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::DegreeOverflow: return "DegreeOverflow";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InapplicableHypotheses: return "InapplicableHypotheses";
    }
    return "Unknown";
}

}  // namespace secant
