#pragma once

#include <stdexcept>
#include <string>

namespace hmcl {

// Base of every exception raised by the engine.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent user input (job files, presentations, tables).
class InputError : public Error {
public:
    using Error::Error;
};

// A mathematical precondition of an operation does not hold
// (shape mismatch, non-free action, characteristic divides |G|, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// An internal invariant failed (d^2 != 0, broken axioms after construction).
class InvariantError : public Error {
public:
    using Error::Error;
};

} // namespace hmcl
