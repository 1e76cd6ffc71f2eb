#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gessel {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A letter index outside [1, d], a bad token, or a word that is not
// (complete) Gessel where one is required.
class MalformedWordError : public Error {
public:
    using Error::Error;
};

// Violated operation precondition (bad ranges, mismatched list sizes).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Enumeration or DP request beyond the configured size cap.
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// A path that does not satisfy a (P,H) floor. `segment` is the 1-based
// index i of the violated floor H_i (0 for the axis floor).
class ConstraintViolationError : public Error {
public:
    ConstraintViolationError(std::size_t segment, int abscissa, const std::string& message)
        : Error(message), segment_(segment), abscissa_(abscissa) {}

    std::size_t segment() const noexcept { return segment_; }
    int abscissa() const noexcept { return abscissa_; }

private:
    std::size_t segment_;
    int abscissa_;
};

// A closed form that must be integral produced a non-integer. Indicates
// a bug; never expected to fire.
class IntegralityError : public Error {
public:
    using Error::Error;
};

}  // namespace gessel
