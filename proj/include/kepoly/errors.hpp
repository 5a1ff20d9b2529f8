#pragma once

#include <stdexcept>
#include <string>

namespace kepoly {

// Error vocabulary shared by all modules.  Every exception carries a
// human-readable message naming the violated condition.

struct DivisionByZero : std::domain_error {
    using std::domain_error::domain_error;
};

struct RangeError : std::range_error {
    using std::range_error::range_error;
};

// Geometric input that breaks a precondition (zero vector, singular
// system, degenerate triangle, ...).
struct DegenerateInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct EmptyRegion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnboundedRegion : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LowerDimensional : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Density integrates to zero over the polytope.
struct ZeroMass : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace kepoly
