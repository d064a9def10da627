#include <molly/error.hpp>

namespace molly
{

std::string_view to_string(ErrorCode code) noexcept
{
    switch (code) {
        case ErrorCode::Overflow:
            return "Overflow";
        case ErrorCode::ParseError:
            return "ParseError";
        case ErrorCode::InvalidArgument:
            return "InvalidArgument";
        case ErrorCode::NotPrime:
            return "NotPrime";
        case ErrorCode::UnsupportedPrime:
            return "UnsupportedPrime";
        case ErrorCode::DegreeTooLarge:
            return "DegreeTooLarge";
        case ErrorCode::KernelNotFound:
            return "KernelNotFound";
        case ErrorCode::FieldMismatch:
            return "FieldMismatch";
        case ErrorCode::VariableCountMismatch:
            return "VariableCountMismatch";
        case ErrorCode::NotAMonomial:
            return "NotAMonomial";
        case ErrorCode::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorCode::NonpositiveWeight:
            return "NonpositiveWeight";
        case ErrorCode::ZeroDenominator:
            return "ZeroDenominator";
        case ErrorCode::NonpositivePi:
            return "NonpositivePi";
        case ErrorCode::InvalidIndex:
            return "InvalidIndex";
        case ErrorCode::BoundOverflow:
            return "BoundOverflow";
        case ErrorCode::EmptyFamily:
            return "EmptyFamily";
        case ErrorCode::InvalidInterval:
            return "InvalidInterval";
        case ErrorCode::WeightsNonpositive:
            return "WeightsNonpositive";
        case ErrorCode::NonNegativeNP:
            return "NonNegativeNP";
        case ErrorCode::AlreadyOptimal:
            return "AlreadyOptimal";
        case ErrorCode::NotPDivisible:
            return "NotPDivisible";
        case ErrorCode::WeightsDependent:
            return "WeightsDependent";
        case ErrorCode::PiNotMonomial:
            return "PiNotMonomial";
        case ErrorCode::NotPolynomial:
            return "NotPolynomial";
        case ErrorCode::DivisorObstruction:
            return "DivisorObstruction";
        case ErrorCode::TooShort:
            return "TooShort";
        case ErrorCode::RecurrenceViolated:
            return "RecurrenceViolated";
        case ErrorCode::RelationFails:
            return "RelationFails";
        case ErrorCode::TruncationTooShallow:
            return "TruncationTooShallow";
        case ErrorCode::IterationLimit:
            return "IterationLimit";
    }
    return "Unknown";
}

} // namespace molly
