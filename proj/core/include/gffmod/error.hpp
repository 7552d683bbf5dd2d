#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gffmod {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class DimensionError : public Error {
public:
    using Error::Error;
};

// Raised by numerical routines that cannot meet their contract (degenerate
// input, non-convergence, broken root pairing).
class NumericalError : public Error {
public:
    using Error::Error;
};

// The input describes something outside the admissible model class.
class ModelError : public Error {
public:
    using Error::Error;
};

// Bad command line input: unknown command, malformed flag value.
class UsageError : public Error {
public:
    using Error::Error;
};

}  // namespace gffmod
