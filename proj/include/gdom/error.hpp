#pragma once

#include <stdexcept>
#include <string>

namespace gdom {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input to a constructor or query (bad vertex id, self-loop, ...).
struct GraphError : Error {
    using Error::Error;
};

struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
    std::size_t line;
};

// G or its complement is disconnected; solvers and bounds require both connected.
struct ConnectivityError : Error {
    using Error::Error;
};

struct TimeoutError : Error {
    using Error::Error;
};

// Instance exceeds a configured size limit of an exponential routine.
struct LimitError : Error {
    using Error::Error;
};

struct InvariantError : Error {
    using Error::Error;
};

}  // namespace gdom
