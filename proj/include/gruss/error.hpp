#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gruss {

enum class ErrorCode {
    EmptyInput,
    NonFinite,
    NegativeWeight,
    SumNotOne,
    ZeroSum,
    LengthMismatch,
    DimensionMismatch,
    FieldMismatch,
    TooShort,
    EnclosureViolation,
    InvalidEnclosure,
    NotReal,
    InvalidNorm,
    InvalidHolder,
    InvalidParameter,
    SingularOmega,
    ZEqualsOne,
    ZeroLeadingCoefficient,
    NoKnownWitness,
    InfeasibleProblem,
    UnknownBoundId,
    ParseError,
    Internal,
};

[[nodiscard]] constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::EmptyInput: return "EMPTY_INPUT";
        case ErrorCode::NonFinite: return "NON_FINITE";
        case ErrorCode::NegativeWeight: return "NEGATIVE_WEIGHT";
        case ErrorCode::SumNotOne: return "SUM_NOT_ONE";
        case ErrorCode::ZeroSum: return "ZERO_SUM";
        case ErrorCode::LengthMismatch: return "LENGTH_MISMATCH";
        case ErrorCode::DimensionMismatch: return "DIMENSION_MISMATCH";
        case ErrorCode::FieldMismatch: return "FIELD_MISMATCH";
        case ErrorCode::TooShort: return "TOO_SHORT";
        case ErrorCode::EnclosureViolation: return "ENCLOSURE_VIOLATION";
        case ErrorCode::InvalidEnclosure: return "INVALID_ENCLOSURE";
        case ErrorCode::NotReal: return "NOT_REAL";
        case ErrorCode::InvalidNorm: return "INVALID_NORM";
        case ErrorCode::InvalidHolder: return "INVALID_HOLDER";
        case ErrorCode::InvalidParameter: return "INVALID_PARAMETER";
        case ErrorCode::SingularOmega: return "SINGULAR_OMEGA";
        case ErrorCode::ZEqualsOne: return "Z_EQUALS_ONE";
        case ErrorCode::ZeroLeadingCoefficient: return "ZERO_LEADING_COEFFICIENT";
        case ErrorCode::NoKnownWitness: return "NO_KNOWN_WITNESS";
        case ErrorCode::InfeasibleProblem: return "INFEASIBLE_PROBLEM";
        case ErrorCode::UnknownBoundId: return "UNKNOWN_BOUND_ID";
        case ErrorCode::ParseError: return "PARSE_ERROR";
        case ErrorCode::Internal: return "INTERNAL";
    }
    return "UNKNOWN";
}

/// Exception carrying a machine-readable code; what() is "CODE: detail".
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace gruss
