#pragma once

#include <stdexcept>
#include <string>

namespace commring {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An axiom of the ring definition failed; carries the first bad witness.
struct AxiomError : Error {
    AxiomError(const std::string& msg, int a, int b, int c)
        : Error(msg), a(a), b(b), c(c) {}
    int a, b, c;  // first failing triple (c = -1 when a pair suffices)
};

struct NotAbelianGroup : AxiomError {
    using AxiomError::AxiomError;
};

struct NotAssociativeMul : AxiomError {
    using AxiomError::AxiomError;
};

struct NotDistributive : AxiomError {
    using AxiomError::AxiomError;
};

struct NotPrime : Error {
    using Error::Error;
};

struct OverflowGuard : Error {
    using Error::Error;
};

struct UnsupportedOrder : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

struct EmptyVertexSet : Error {
    using Error::Error;
};

struct TooSmall : Error {
    using Error::Error;
};

struct TooLarge : Error {
    using Error::Error;
};

/// Malformed input file (ring file, DIMACS, manifest).
struct ParseError : Error {
    using Error::Error;
};

}  // namespace commring
