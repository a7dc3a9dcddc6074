#include "mldeg/error.hpp"

namespace mldeg {

std::string_view error_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonUnit: return "NonUnit";
    case ErrorCode::UndefinedGcd: return "UndefinedGcd";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::CommonFactor: return "CommonFactor";
    case ErrorCode::NotDominant: return "NotDominant";
    case ErrorCode::SharedReducedComponent: return "SharedReducedComponent";
    case ErrorCode::NotLinear: return "NotLinear";
    case ErrorCode::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorCode::DegenerateChart: return "DegenerateChart";
    case ErrorCode::NonGenericWeights: return "NonGenericWeights";
    case ErrorCode::Disagreement: return "Disagreement";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace mldeg
