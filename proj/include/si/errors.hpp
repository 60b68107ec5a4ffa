#pragma once

#include <stdexcept>
#include <string>

namespace si {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File could not be read or written.
struct IoError : Error {
    using Error::Error;
};

// File structure is recognized but malformed (bad magic, truncation, version).
struct FormatError : Error {
    using Error::Error;
};

// Manifest and data disagree (modality counts, shapes, missing label files).
struct SchemaError : Error {
    using Error::Error;
};

// Arguments violate an operation's preconditions.
struct DomainError : Error {
    using Error::Error;
};

// Invalid configuration value or cross-field constraint.
struct ConfigError : Error {
    using Error::Error;
};

// Not enough patients or slices to draw the requested sources.
struct SamplingError : Error {
    using Error::Error;
};

// Dataset has no usable samples for the requested operation.
struct DataError : Error {
    using Error::Error;
};

// Input is structurally valid but numerically degenerate (empty mask,
// zero-variance foreground).
struct DegenerateInputError : Error {
    using Error::Error;
};

}  // namespace si
