#pragma once

#include <stdexcept>
#include <string>

namespace nhb {

// Error taxonomy shared by all modules. The CLI maps each class to a distinct
// exit code (see tools/main.cpp): usage 2, config 3, precondition 4, internal 5.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad argument to an operation (fraction out of range, damping outside (0,1), ...).
struct ArgumentError : Error {
    using Error::Error;
};

// A run-config / generator-config problem.
struct ConfigError : Error {
    using Error::Error;
};

// Operation invoked against a state that does not satisfy its precondition
// (store not empty, index not built, slice not loaded, ...).
struct StateError : Error {
    using Error::Error;
};

// An entity invariant would be violated.
struct InvariantError : Error {
    using Error::Error;
};

// Malformed input bytes. `offset` is the byte position when known.
struct ParseError : Error {
    explicit ParseError(const std::string& msg, size_t offset = static_cast<size_t>(-1))
        : Error(msg), offset(offset) {}
    size_t offset;
};

// Backend: key not present.
struct NotFoundError : Error {
    using Error::Error;
};

// Backend: duplicate key / duplicate node.
struct ConflictError : Error {
    using Error::Error;
};

// Backend: no live replica can serve the shard.
struct UnavailableError : Error {
    using Error::Error;
};

// Generator/slicing: corpus exhausted, no extra data to load.
struct NoExtraDataError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

} // namespace nhb
