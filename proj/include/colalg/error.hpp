#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace colalg {

enum class ErrorCode {
    EvenModulus,
    BadModulus,
    BadPrime,
    NotAUnit,
    ParseError,
    WrongRing,
    NotHermitian,
    Degenerate,
    DeterminantNotTrivial,
    MorphismConditionFailed,
    NotCubeRoot,
    NotIsometry,
    NotSLinear,
    NotTraceZero,
    BadDegrees,
    NotHomogeneous,
    BaseNotField,
    SuiteNotApplicable,
    ExhaustiveTooLarge,
    InvalidConfig,
};

constexpr std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::EvenModulus: return "EvenModulus";
        case ErrorCode::BadModulus: return "BadModulus";
        case ErrorCode::BadPrime: return "BadPrime";
        case ErrorCode::NotAUnit: return "NotAUnit";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::WrongRing: return "WrongRing";
        case ErrorCode::NotHermitian: return "NotHermitian";
        case ErrorCode::Degenerate: return "Degenerate";
        case ErrorCode::DeterminantNotTrivial: return "DeterminantNotTrivial";
        case ErrorCode::MorphismConditionFailed: return "MorphismConditionFailed";
        case ErrorCode::NotCubeRoot: return "NotCubeRoot";
        case ErrorCode::NotIsometry: return "NotIsometry";
        case ErrorCode::NotSLinear: return "NotSLinear";
        case ErrorCode::NotTraceZero: return "NotTraceZero";
        case ErrorCode::BadDegrees: return "BadDegrees";
        case ErrorCode::NotHomogeneous: return "NotHomogeneous";
        case ErrorCode::BaseNotField: return "BaseNotField";
        case ErrorCode::SuiteNotApplicable: return "SuiteNotApplicable";
        case ErrorCode::ExhaustiveTooLarge: return "ExhaustiveTooLarge";
        case ErrorCode::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so it survives a plain `what()`.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Parse failures additionally record the byte offset into the input.
class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& detail)
        : Error(ErrorCode::ParseError, detail + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace colalg
