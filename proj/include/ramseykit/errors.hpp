#pragma once

#include <stdexcept>
#include <string>

namespace ramseykit {

// Error taxonomy shared by the library and the CLI exit-code contract:
// parameter/parse problems exit 2, capacity limits exit 3, violated
// runtime assertions exit 1.

struct ParameterError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text (graph6, digraph6, RB colouring files).
struct ParseError : ParameterError {
    using ParameterError::ParameterError;
};

// A request that exceeds a configured search cap.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A guaranteed property failed to hold at runtime; always a bug or a
// corrupted input, never a legal outcome.
struct AssertionError : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw ParameterError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw AssertionError(msg);
}

} // namespace ramseykit
