#pragma once

#include <stdexcept>
#include <string>

namespace qaoa {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed model input: self-loops, bad vertex ids, invalid contraction
// arguments, inconsistent constructor data.
struct InvalidModelError : Error {
    using Error::Error;
};

// A spin assignment does not cover the model's vertex set.
struct IncompleteAssignmentError : Error {
    using Error::Error;
};

// Problem exceeds a configured size cap (brute force, simulator).
struct SizeLimitError : Error {
    using Error::Error;
};

// Edge-list / JSON parse failure. `line` is 1-based, 0 if not applicable.
struct ParseError : Error {
    int line = 0;
    ParseError(int line_, const std::string& what)
        : Error("line " + std::to_string(line_) + ": " + what), line(line_) {}
    explicit ParseError(const std::string& what) : Error(what) {}
};

// A constraint stack that cannot be replayed into a full assignment.
struct InconsistentStackError : Error {
    using Error::Error;
};

// Statevector register does not match the model's vertex set.
struct RegistrationError : Error {
    using Error::Error;
};

// Argument outside a formula's domain (n < 2, t outside [0,1], singular gamma).
struct DomainError : Error {
    using Error::Error;
};

// All pairwise correlations are below the degenerate tolerance; rounding on
// noise is unsound, so the round aborts.
struct DegenerateCorrelationError : Error {
    using Error::Error;
};

// Round requested on a model with no couplings left.
struct NothingToContractError : Error {
    using Error::Error;
};

}  // namespace qaoa
