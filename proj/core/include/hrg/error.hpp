#pragma once

#include <stdexcept>
#include <string>

namespace hrg {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// File could not be read, written, or parsed.
class IoError : public Error {
public:
    explicit IoError(const std::string& what) : Error(what) {}
};

/// Caller-supplied argument violates a precondition.
class ArgumentError : public Error {
public:
    explicit ArgumentError(const std::string& what) : Error(what) {}
};

/// A generation request cannot be satisfied (infeasible size, step cap).
class GenerationError : public Error {
public:
    explicit GenerationError(const std::string& what) : Error(what) {}
};

/// An internal invariant failed; indicates a bug rather than bad input.
class InternalError : public Error {
public:
    explicit InternalError(const std::string& what) : Error(what) {}
};

} // namespace hrg
