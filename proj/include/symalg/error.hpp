#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symalg {

enum class ErrorCode {
    SyntaxError,
    UnknownVariable,
    ZeroDenominator,
    ArityMismatch,
    SumMismatch,
    NotSorted,
    IndexOutOfRange,
    UnsupportedBasisPair,
    NotSymmetric,
    NonTermination,
    TooManyVariables,
    ZeroPolynomial,
    EncodingMismatch,
    LeadingCoefficientVanishes,
    InvalidParam,
    PositiveDimensional,
    SeparationFailure,
    PatternMismatch,
    DegenerateInstance,
    AssumptionViolated,
    OddDegree,
    DimensionMismatch,
    IoError,
    TooFewVariables,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

class SyntaxError : public Error {
public:
    SyntaxError(std::size_t pos, const std::string& what)
        : Error(ErrorCode::SyntaxError, what + " at position " + std::to_string(pos)),
          pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

}  // namespace symalg
