#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace bracekit {

// Base class for every failure this library reports deliberately.
struct BraceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structural defects in raw input tables (non-square, entries out of range).
struct TableFormatError : BraceError {
    using BraceError::BraceError;
};

// One of the two operations is not a group law. `op` is '+' or 'o'.
struct NotAGroupError : BraceError {
    char op;
    std::array<int, 3> witness;  // failing triple, or {a,-1,-1} for a missing inverse
    NotAGroupError(char op_, std::array<int, 3> w, const std::string& what_)
        : BraceError(what_), op(op_), witness(w) {}
};

// Both operations are groups but their shared identity is not index 0.
struct IdentityMismatchError : BraceError {
    using BraceError::BraceError;
};

// The brace compatibility law fails at (a, b, c).
struct CompatibilityError : BraceError {
    int a, b, c;
    CompatibilityError(int a_, int b_, int c_, const std::string& what_)
        : BraceError(what_), a(a_), b(b_), c(c_) {}
};

// A map failed the homomorphism check. op is '+', 'o', or '0' (identity not fixed).
struct NotHomError : BraceError {
    char op;
    int x, y;
    NotHomError(char op_, int x_, int y_, const std::string& what_)
        : BraceError(what_), op(op_), x(x_), y(y_) {}
};

// An element set handed to an ideal-expecting operation is not an ideal.
struct NotAnIdealError : BraceError {
    using BraceError::BraceError;
};

// Two element sets (or a set and an operation) belong to different braces.
struct AmbientMismatchError : BraceError {
    using BraceError::BraceError;
};

// Quotient construction found a pair of representatives with inconsistent images.
struct WellDefinednessError : BraceError {
    char op;
    int a, b;
    WellDefinednessError(char op_, int a_, int b_, const std::string& what_)
        : BraceError(what_), op(op_), a(a_), b(b_) {}
};

// Pullback legs do not share a target.
struct TargetMismatchError : BraceError {
    using BraceError::BraceError;
};

// Two routes that must agree on the same question returned different answers.
// This is always a bug in the library or a refuted expectation, never user error.
struct OracleDisagreementError : BraceError {
    using BraceError::BraceError;
};

// A minimum was requested from a family that has no least element.
struct NoMinimumError : BraceError {
    using BraceError::BraceError;
};

// An enumeration or search was asked to exceed its configured size bound.
struct BoundExceededError : BraceError {
    using BraceError::BraceError;
};

// A brace handed to a variety-restricted operation is not in that variety.
struct NotInVarietyError : BraceError {
    using BraceError::BraceError;
};

// Malformed .sbrace input. `line` is 1-based.
struct ParseError : BraceError {
    int line;
    ParseError(int line_, const std::string& what_)
        : BraceError("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Catch-all for violated preconditions that have no dedicated type.
struct InvalidArgumentError : BraceError {
    using BraceError::BraceError;
};

}  // namespace bracekit
