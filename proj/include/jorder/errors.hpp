#pragma once

#include <stdexcept>
#include <string>

namespace jorder {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two operands live over different ring / algebra descriptors.
struct DescriptorMismatch : Error {
    using Error::Error;
};

// The descriptor carries no partial order (e.g. rings containing i).
struct NoOrder : Error {
    using Error::Error;
};

struct NotInvertible : Error {
    using Error::Error;
};

// A partial map on the two-point chart left V + {infinity}.
struct LeavesChart : Error {
    using Error::Error;
};

struct NotTransversal : Error {
    using Error::Error;
};

struct NotApplicable : Error {
    using Error::Error;
};

struct DegenerateEndpoint : Error {
    using Error::Error;
};

struct EqualPoints : Error {
    using Error::Error;
};

struct UnsupportedProjection : Error {
    using Error::Error;
};

struct UnsupportedSize : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

// A condition the library guarantees internally failed anyway; always a bug.
struct InternalInvariantViolation : Error {
    using Error::Error;
};

} // namespace jorder
