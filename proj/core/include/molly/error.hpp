#ifndef MOLLY_ERROR_HPP
#define MOLLY_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace molly
{

enum class ErrorCode {
    Overflow,
    ParseError,
    InvalidArgument,
    NotPrime,
    UnsupportedPrime,
    DegreeTooLarge,
    KernelNotFound,
    FieldMismatch,
    VariableCountMismatch,
    NotAMonomial,
    DimensionMismatch,
    NonpositiveWeight,
    ZeroDenominator,
    NonpositivePi,
    InvalidIndex,
    BoundOverflow,
    EmptyFamily,
    InvalidInterval,
    WeightsNonpositive,
    NonNegativeNP,
    AlreadyOptimal,
    NotPDivisible,
    WeightsDependent,
    PiNotMonomial,
    NotPolynomial,
    DivisorObstruction,
    TooShort,
    RecurrenceViolated,
    RelationFails,
    TruncationTooShallow,
    IterationLimit,
};

std::string_view to_string(ErrorCode code) noexcept;

// Base exception for every failure reported by the library. The code is
// stable and machine-readable; the message is for humans.
class Error : public std::runtime_error
{
public:
    Error(ErrorCode code, const std::string &message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), m_code(code)
    {
    }

    [[nodiscard]] ErrorCode code() const noexcept
    {
        return m_code;
    }

private:
    ErrorCode m_code;
};

} // namespace molly

#endif
