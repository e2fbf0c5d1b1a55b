#pragma once

#include <stdexcept>
#include <string>

namespace ficl {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Operand shapes do not conform to a primitive's contract.
struct ShapeError : Error {
    using Error::Error;
};

// A file could not be parsed or a dataset violates its invariants.
struct DataError : Error {
    using Error::Error;
};

// An experiment configuration is malformed or inconsistent.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace ficl
