#pragma once

#include <stdexcept>
#include <string>

namespace interplab {

/// A precondition on the inputs was violated (bad index, degenerate interval,
/// invalid node set, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A numerical procedure could not certify its own result (non-integer
/// winding number, missed roots, non-convergent series, ...).
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace interplab
