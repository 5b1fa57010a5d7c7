#pragma once

#include <stdexcept>
#include <string>

namespace weylchar {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad Cartan data, wrong vector lengths, non-dominant weights.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// An internal consistency check failed (normalization drift, inconsistent
/// special-root system, non-exact division).
class ConsistencyError : public Error {
public:
    using Error::Error;
};

}  // namespace weylchar
