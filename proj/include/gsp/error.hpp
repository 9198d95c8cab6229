#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gsp {

enum class ErrorCode {
    IndexOutOfRange,
    DuplicateEdge,
    NonFiniteWeight,
    InvalidSize,
    UnknownKind,
    ParseError,
    DimensionMismatch,
    NonDiagonalizable,
    NumericalFailure,
    ZeroModulusEigenvalue,
    DegenerateFrequencies,
    IllConditioned,
    DegenerateRange,
    InternalError,
};

const char* to_string(ErrorCode code);

/// True for errors caused by malformed or inconsistent input (CLI exit 1),
/// false for mathematical precondition failures (CLI exit 2).
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string detail, std::vector<long> indices = {})
        : std::runtime_error(std::string(to_string(code)) + ": " + detail),
          code_(code),
          detail_(std::move(detail)),
          indices_(std::move(indices)) {}

    ErrorCode code() const noexcept { return code_; }
    const std::string& detail() const noexcept { return detail_; }
    const std::vector<long>& indices() const noexcept { return indices_; }

private:
    ErrorCode code_;
    std::string detail_;
    std::vector<long> indices_;
};

}  // namespace gsp
