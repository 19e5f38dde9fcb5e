#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordexp {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally invalid input: dimension mismatch, non-finite entries,
// axes out of range, unassigned word generator, malformed construction.
struct InvalidInput : Error {
    using Error::Error;
};

// Numeric-domain violation: matrix log outside its convergence ball,
// singular gauge at an evaluation point, evaluation at a pole,
// non-periodic input to a circle integral, non-flat connection where
// flatness is a precondition.
struct DomainError : Error {
    using Error::Error;
};

// Invalid experiment configuration (CLI layer).
struct ConfigError : Error {
    using Error::Error;
};

// Syntax error from the expression parser.  Carries the byte offset of
// the failure and the set of tokens that would have been accepted there.
struct ParseError : Error {
    std::size_t offset;
    std::vector<std::string> expected;

    ParseError(const std::string& what, std::size_t off, std::vector<std::string> exp = {})
        : Error(what), offset(off), expected(std::move(exp)) {}
};

// Evaluation-domain error (log of zero, division by zero, ...) with the
// byte offset of the offending subexpression.
struct EvalDomainError : DomainError {
    std::size_t offset;

    EvalDomainError(const std::string& what, std::size_t off)
        : DomainError(what), offset(off) {}
};

} // namespace ordexp
