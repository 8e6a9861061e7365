#pragma once

#include <stdexcept>
#include <string>

namespace relcone {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data violates a documented invariant (not a cocycle, bad shapes, ...).
class ValidationError : public Error {
public:
    using Error::Error;
};

class DimensionError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Two independent computations disagreed. Always an implementation bug.
class ComputationError : public Error {
public:
    using Error::Error;
};

} // namespace relcone
