#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace secant {

enum class ErrorCode {
    EmptyInput,
    NonPositivePart,
    TooFewParts,
    Overflow,
    InvalidRange,
    NegativeDegree,
    NotPrime,
    DegreeOverflow,
    InvalidArgument,
    InapplicableHypotheses,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every validation failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what)
        , code_(code)
    {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace secant
