#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mldeg {

enum class ErrorCode {
    InvalidInput,
    DimensionMismatch,
    NonUnit,
    UndefinedGcd,
    NotHomogeneous,
    DegreeMismatch,
    CommonFactor,
    NotDominant,
    SharedReducedComponent,
    NotLinear,
    NotZeroDimensional,
    DegenerateChart,
    NonGenericWeights,
    Disagreement,
    BudgetExceeded,
    Internal,
};

std::string_view error_name(ErrorCode code) noexcept;

// All library failures are raised as Error; the code drives CLI exit status.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace mldeg
