#include "symalg/error.hpp"

namespace symalg {

const char* error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UnknownVariable: return "UnknownVariable";
        case ErrorCode::ZeroDenominator: return "ZeroDenominator";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::SumMismatch: return "SumMismatch";
        case ErrorCode::NotSorted: return "NotSorted";
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::UnsupportedBasisPair: return "UnsupportedBasisPair";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::NonTermination: return "NonTermination";
        case ErrorCode::TooManyVariables: return "TooManyVariables";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::EncodingMismatch: return "EncodingMismatch";
        case ErrorCode::LeadingCoefficientVanishes: return "LeadingCoefficientVanishes";
        case ErrorCode::InvalidParam: return "InvalidParam";
        case ErrorCode::PositiveDimensional: return "PositiveDimensional";
        case ErrorCode::SeparationFailure: return "SeparationFailure";
        case ErrorCode::PatternMismatch: return "PatternMismatch";
        case ErrorCode::DegenerateInstance: return "DegenerateInstance";
        case ErrorCode::AssumptionViolated: return "AssumptionViolated";
        case ErrorCode::OddDegree: return "OddDegree";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::IoError: return "IoError";
        case ErrorCode::TooFewVariables: return "TooFewVariables";
    }
    return "Unknown";
}

}  // namespace symalg
