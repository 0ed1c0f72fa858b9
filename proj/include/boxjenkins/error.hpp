#pragma once

#include <stdexcept>
#include <string>

namespace bj {

// Base for every data or model failure raised by the library. The CLI maps
// these to exit status 1; anything else is a usage error or a bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A precondition on sizes, orders or argument ranges was violated.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

// Not enough observations for the requested operation.
class InsufficientData : public Error {
public:
    using Error::Error;
};

// Zero variance, a singular recursion, or some other input the statistics
// cannot be computed on.
class DegenerateSeries : public Error {
public:
    using Error::Error;
};

// Parameters outside the stationary/invertible region, a filter breakdown, or
// an optimizer that never produced a finite likelihood.
class ModelError : public Error {
public:
    using Error::Error;
};

// Malformed CSV input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace bj
