#pragma once

#include <stdexcept>
#include <string>

namespace fairtab {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Shape disagreement between tensors or encoded rows.
struct DimensionError : Error {
    using Error::Error;
};

// Math domain violation (log/sqrt of negatives, CDF argument outside [0,1], ...).
struct DomainError : Error {
    using Error::Error;
};

// Table does not match its declared schema, or a recipe asks for columns
// that are not there.
struct SchemaError : Error {
    using Error::Error;
};

// Invalid run/train configuration.
struct ConfigError : Error {
    using Error::Error;
};

// API misuse (e.g. backward from a non-scalar root).
struct ContractError : Error {
    using Error::Error;
};

// A metric is undefined for the given data (empty protected group).
struct MetricError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

}  // namespace fairtab
