#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exactlin {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Division with a zero divisor.
class DivisionByZero : public Error {
public:
    using Error::Error;
};

/// A division that is guaranteed to be remainder-free left a remainder.
/// This signals an internal algorithm bug or corrupted input; it is never
/// a normal data condition in correct runs.
class ExactDivisionViolation : public Error {
public:
    using Error::Error;
};

/// Row lists of differing lengths were given where a rectangular grid is
/// required.
class RaggedInput : public Error {
public:
    using Error::Error;
};

/// An empty grid was given where at least one row and column is required.
class EmptyInput : public Error {
public:
    using Error::Error;
};

/// Matrix or vector dimensions do not fit the requested operation.
class ShapeMismatch : public Error {
public:
    using Error::Error;
};

/// A 1-based row or column index fell outside its valid range.
class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

/// An elimination step was asked to pivot on a zero diagonal entry.
class ZeroPivot : public Error {
public:
    using Error::Error;
};

/// The coefficient matrix has determinant zero, so the requested quantity
/// is undefined.
class SingularMatrix : public Error {
public:
    using Error::Error;
};

/// A brute-force reference routine was invoked beyond its size guard.
class TooLarge : public Error {
public:
    using Error::Error;
};

/// Malformed text input. Line and column are 1-based; zero means unknown.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
        : Error(message), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace exactlin
