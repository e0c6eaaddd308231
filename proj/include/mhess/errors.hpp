// Error taxonomy. The CLI maps ParseError to exit 2 and every MathError
// subclass to exit 3; everything else is a programming error and may assert.
#pragma once

#include <stdexcept>
#include <string>

namespace mhess {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input text could not be parsed. Carries 1-based line/column of the offender.
struct ParseError : Error {
    int line, column;
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

// Base for conditions that are mathematically meaningful, not bugs.
struct MathError : Error {
    using Error::Error;
};

// Operands carry incompatible variable layouts (x-only vs x+y, or counts).
struct LayoutError : MathError {
    using MathError::MathError;
};

// A stated precondition on the mathematical domain fails (m out of range,
// non-homogeneous input where a form is required, ...).
struct DomainError : MathError {
    using MathError::MathError;
};

// Caller broke an interface contract (mismatched ambient degrees, ranks, ...).
struct ContractError : MathError {
    using MathError::MathError;
};

// Ideal reduction could not be set up (no usable pivot even after the
// coordinate-change search, Buchberger failure, ...).
struct ReductionError : MathError {
    using MathError::MathError;
};

// Modular arithmetic hit a denominator divisible by the prime; retry with a
// different prime.
struct ModularError : MathError {
    using MathError::MathError;
};

// No interlocking chain of nonvanishing minors exists (complex not generically
// exact on the curve, e.g. vanishing resultant or singular curve).
struct DegenerateComplexError : MathError {
    using MathError::MathError;
};

// A previously selected minor chain no longer certifies: an exact determinant
// came out zero or the denominator reduced into the ideal.
struct StaleChainError : MathError {
    using MathError::MathError;
};

// Truncated series order too small to certify the requested valuation.
struct PrecisionError : MathError {
    using MathError::MathError;
};

// A branch parameterization was requested at a singular point of the curve.
struct SingularPointError : MathError {
    using MathError::MathError;
};

// Both sections vanish on the curve; no comparison scalar exists.
struct IndeterminateError : MathError {
    using MathError::MathError;
};

// A work budget was exhausted before the computation decided anything.
struct BudgetError : MathError {
    using MathError::MathError;
};

}  // namespace mhess
