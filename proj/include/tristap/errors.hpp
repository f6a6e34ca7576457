// errors.hpp — exception types shared across the library
#pragma once

#include <stdexcept>
#include <string>

namespace tristap {

// Bad arguments, malformed specs, space mismatches. CLI maps this to exit 1.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Divergence, convergence-cap overruns, non-finite values. CLI maps this to exit 2.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tristap
