#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qsvand {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A polynomial system violates its family invariants (zero leading coefficient, bad preset parameters).
class InvalidSystem : public Error {
public:
    using Error::Error;
};

// Zero, duplicated or non-finite nodes.
class InvalidNodes : public Error {
public:
    using Error::Error;
};

// Shapes or lengths that do not conform.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Elimination met a pivot below the singularity threshold.
class SingularMatrix : public Error {
public:
    SingularMatrix(std::size_t step, const std::string& what)
        : Error(what), step_(step) {}

    // 1-based elimination step at which the breakdown was detected (0 when not step-related).
    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

// Malformed instance file or matrix dump.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace qsvand
