#pragma once

#include <stdexcept>

namespace qrwell {

// An adaptive routine ran out of its subdivision budget before reaching the
// requested tolerance, or an iterative solver failed to bracket/converge.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed quantity violated a rigorous a-priori bound or cross-check.
// This always indicates a defect in the implementation (or a misuse severe
// enough to invalidate the arithmetic), never a legitimate runtime state.
struct ConsistencyError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace qrwell
