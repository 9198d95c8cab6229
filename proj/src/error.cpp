#include "gsp/error.hpp"

namespace gsp {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::NonFiniteWeight: return "NonFiniteWeight";
        case ErrorCode::InvalidSize: return "InvalidSize";
        case ErrorCode::UnknownKind: return "UnknownKind";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::DimensionMismatch: return "DimensionMismatch";
        case ErrorCode::NonDiagonalizable: return "NonDiagonalizable";
        case ErrorCode::NumericalFailure: return "NumericalFailure";
        case ErrorCode::ZeroModulusEigenvalue: return "ZeroModulusEigenvalue";
        case ErrorCode::DegenerateFrequencies: return "DegenerateFrequencies";
        case ErrorCode::IllConditioned: return "IllConditioned";
        case ErrorCode::DegenerateRange: return "DegenerateRange";
        case ErrorCode::InternalError: return "InternalError";
    }
    return "InternalError";
}

bool is_input_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::IndexOutOfRange:
        case ErrorCode::DuplicateEdge:
        case ErrorCode::NonFiniteWeight:
        case ErrorCode::InvalidSize:
        case ErrorCode::UnknownKind:
        case ErrorCode::ParseError:
        case ErrorCode::DimensionMismatch:
            return true;
        default:
            return false;
    }
}

}  // namespace gsp
