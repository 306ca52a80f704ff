#pragma once

#include <stdexcept>
#include <string>

namespace exmoves {

// Base for all toolkit errors; CLI maps anything derived from this to exit code 1.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Volume/grid geometry violations (out-of-range coordinates, invalid volumes).
class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

// Model and video disagree on codebook layout, descriptor length, etc.
class IncompatibilityError : public Error {
public:
    explicit IncompatibilityError(const std::string& msg) : Error(msg) {}
};

// Training set lacks a positive or negative side, or has a single class.
class DegenerateSetError : public Error {
public:
    explicit DegenerateSetError(const std::string& msg) : Error(msg) {}
};

// API misuse that the type system cannot express (e.g. pooling an uncalibrated model).
class ContractError : public Error {
public:
    explicit ContractError(const std::string& msg) : Error(msg) {}
};

// Malformed file content; carries a 1-based line number when known.
class FormatError : public Error {
public:
    FormatError(const std::string& msg, long line = 0)
        : Error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg), line_(line) {}
    long line() const { return line_; }

private:
    long line_ = 0;
};

} // namespace exmoves
