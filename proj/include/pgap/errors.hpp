#pragma once

#include <stdexcept>
#include <string>

namespace pgap {

// Bad input: mismatched dimensions, malformed files, parameter range violations.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Filesystem failures while reading or writing artifacts.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A weight or the threshold stopped being finite during training.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace pgap
