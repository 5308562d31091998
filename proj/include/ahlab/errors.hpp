#pragma once

#include <stdexcept>
#include <string>

namespace ahlab {

// Caller passed arguments outside an operation's contract.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A rational with denominator divisible by p was asked to reduce mod p.
// This is a mathematically meaningful finding, not a plain usage error:
// several claims hinge on p-integrality holding.
struct NotPIntegral : std::domain_error {
    using std::domain_error::domain_error;
};

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotInvertible : std::domain_error {
    using std::domain_error::domain_error;
};

// Operands live over different prime fields.
struct FieldMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A coefficient table was not computed deep enough for the request.
struct TableTooShallow : std::length_error {
    using std::length_error::length_error;
};

// A closed form was requested outside its validity range.
struct RangeError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

} // namespace ahlab
