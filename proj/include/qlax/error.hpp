#pragma once

#include <stdexcept>
#include <string>

namespace qlax {

/// Base of every exception thrown by the kernel.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two truncated q-series with different truncation orders were combined.
class TruncationMismatch : public Error {
public:
    TruncationMismatch(int lhs, int rhs)
        : Error("truncation mismatch: q^" + std::to_string(lhs + 1) + " vs q^" + std::to_string(rhs + 1)) {}
};

/// An operation needed a series of a different q-valuation (exp/log/inverse domains).
class ValuationError : public Error {
public:
    using Error::Error;
};

class NotAUnit : public Error {
public:
    using Error::Error;
};

class Singular : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// A symbol coefficient below the tracked precision floor was requested or needed.
class PrecisionExhausted : public Error {
public:
    using Error::Error;
};

/// Bad user input: problem files, flags, precondition violations on inputs.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Parse failure in the operator DSL, with a 1-based line/column.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& what, int line, int column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what), line_(line), column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

class UnboundIdentifier : public SyntaxError {
public:
    UnboundIdentifier(const std::string& name, int line, int column)
        : SyntaxError("unknown identifier '" + name + "'", line, column), name_(name) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

} // namespace qlax
