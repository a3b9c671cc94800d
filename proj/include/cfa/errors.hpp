#pragma once

#include <stdexcept>
#include <string>

namespace cfa {

// Error taxonomy shared across the library. The CLI maps these onto
// process exit codes, so new error kinds should extend this hierarchy
// instead of throwing std::runtime_error directly.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape or dimension disagreement between operands.
struct DimensionError : Error {
    using Error::Error;
};

// Violated API precondition (non-scalar backward root, missing grad, ...).
struct ContractError : Error {
    using Error::Error;
};

// NaN/Inf or out-of-range numeric input detected.
struct NumericError : Error {
    using Error::Error;
};

// Invalid user-supplied configuration.
struct ConfigError : Error {
    using Error::Error;
};

// Filesystem / serialization failure.
struct IoError : Error {
    using Error::Error;
};

// Training diverged or could not proceed.
struct TrainingError : Error {
    using Error::Error;
};

// Input gives the algorithm nothing to work with (e.g. zero gradient).
struct DegenerateInputError : Error {
    using Error::Error;
};

// Too few samples survive filtering to produce a trustworthy estimate.
struct LowSupportError : Error {
    using Error::Error;
};

}  // namespace cfa
