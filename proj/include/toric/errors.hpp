#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Input files / JSON shapes that do not match the documented schemas.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Ray values that do not extend to a continuous piecewise-linear function
// on the fan (no local equation on some cone).
struct CartierError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A cone whose span lies outside the domain of the complement map.
struct GenericityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An internal cross-check failed (e.g. lattice count vs. enumeration).
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact division by a linear form left a nonzero remainder.
struct NotDivisibleError : std::runtime_error {
    NotDivisibleError(const std::string& msg, int degree)
        : std::runtime_error(msg), offending_degree(degree) {}
    int offending_degree;
};

}  // namespace toric
