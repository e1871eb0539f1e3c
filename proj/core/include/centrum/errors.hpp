#pragma once

#include <stdexcept>
#include <string>

namespace centrum {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Division by zero, incompatible prime fields.
class ArithmeticError : public Error {
public:
    using Error::Error;
};

// Dimension or object mismatch between composed data.
class ShapeError : public Error {
public:
    using Error::Error;
};

// A map that should factor through a quotient does not.
class DescentError : public Error {
public:
    using Error::Error;
};

// Input data violates the invariants of its type.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Malformed serialized input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace centrum
