#pragma once

#include <string>

#include <doctest.h>

#include "gsp/error.hpp"
#include "gsp/graph.hpp"

namespace testutil {

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
    return m.derived().cwiseAbs().maxCoeff();
}

// Asserts the statement throws gsp::Error with the given code.
#define CHECK_GSP_ERROR(code_, ...)                                         \
    do {                                                                     \
        bool thrown_ = false;                                                \
        try {                                                                \
            __VA_ARGS__;                                                     \
        } catch (const gsp::Error& e_) {                                     \
            thrown_ = true;                                                  \
            CHECK(std::string(gsp::to_string(e_.code())) == #code_);         \
        }                                                                    \
        CHECK_MESSAGE(thrown_, "expected " #code_ " from: " #__VA_ARGS__);   \
    } while (0)

}  // namespace testutil
