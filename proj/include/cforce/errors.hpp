#pragma once

#include <stdexcept>
#include <string>

namespace cforce {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge endpoint out of range, or a self-loop.
struct InvalidEdgeError : Error {
    using Error::Error;
};

// An operation was called on input violating its stated precondition.
struct PreconditionError : Error {
    using Error::Error;
};

// A forcing trace that could not have been produced by a closure run.
struct InvalidTraceError : Error {
    using Error::Error;
};

// An exhaustive search exceeded its candidate budget, or an enumeration
// was requested outside its supported size range.
struct BudgetError : Error {
    using Error::Error;
};

// Malformed family spec (bad name, arity, or parameter constraint).
struct FamilyError : Error {
    using Error::Error;
};

// Malformed edge-list input.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace cforce
