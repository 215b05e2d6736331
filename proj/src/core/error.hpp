#pragma once

#include <stdexcept>
#include <string>

namespace revsim {

// Base class for all library errors so the C API can map them uniformly.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct IllegalMove : Error {
    int move_index;  // position in the replayed sequence, -1 for a single apply
    explicit IllegalMove(const std::string& what, int index = -1)
        : Error(what), move_index(index) {}
};

struct NotReversible : Error {
    using Error::Error;
};

struct InstanceTooLarge : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct InvalidParameters : Error {
    using Error::Error;
};

struct NoApplicableQuadruple : Error {
    using Error::Error;
};

struct StepCapExceeded : Error {
    using Error::Error;
};

struct NoPredecessor : Error {
    using Error::Error;
};

struct CorruptLog : Error {
    using Error::Error;
};

struct MissingCheckpoint : Error {
    using Error::Error;
};

struct CancelMismatch : Error {
    using Error::Error;
};

struct CapExceeded : Error {
    using Error::Error;
};

}  // namespace revsim
