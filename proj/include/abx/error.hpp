#pragma once

#include <stdexcept>
#include <string>

namespace abx {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Inputs of different ambient dimension were combined.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// A documented precondition does not hold for the given input.
class PreconditionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace abx
