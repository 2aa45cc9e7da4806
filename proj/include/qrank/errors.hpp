#pragma once

#include <stdexcept>
#include <string>

namespace qrank {

// Base of every error the library raises. The verifier maps these to
// ERROR statuses using `kind()`.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "error"; }
};

// Two operands live in incompatible coefficient rings (e.g. Q(zeta5) and
// Q(zeta7), or a cyclotomic unit pushed into the integers).
class ring_mismatch : public error {
public:
    using error::error;
    const char* kind() const noexcept override { return "ring-mismatch"; }
};

class division_by_zero : public error {
public:
    using error::error;
    const char* kind() const noexcept override { return "division-by-zero"; }
};

// A leading coefficient that must be inverted is not a unit of its ring.
class non_unit : public error {
public:
    using error::error;
    const char* kind() const noexcept override { return "non-unit"; }
};

// A specialization hits a pole or a theta zero.
class non_generic : public error {
public:
    using error::error;
    const char* kind() const noexcept override { return "non-generic"; }
};

// A comparison or extraction asked for coefficients the operands do not
// determine.
class precision_error : public error {
public:
    using error::error;
    const char* kind() const noexcept override { return "precision"; }
};

// An enumeration bound failed its boundary assertion, or a lattice region
// is not bounded below.
class bound_error : public error {
public:
    using error::error;
    const char* kind() const noexcept override { return "bound"; }
};

class invalid_argument : public error {
public:
    using error::error;
    const char* kind() const noexcept override { return "invalid-argument"; }
};

// Two independent computations that must agree did not.
class internal_error : public error {
public:
    using error::error;
    const char* kind() const noexcept override { return "internal"; }
};

} // namespace qrank
