#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace condw {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed formula, conditional or belief-base text. Positions are 1-based.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

class UnknownAtomError : public ParseError {
public:
    UnknownAtomError(const std::string& atom, std::size_t line, std::size_t column)
        : ParseError("unknown atom '" + atom + "'", line, column), atom_(atom) {}

    const std::string& atom() const noexcept { return atom_; }

private:
    std::string atom_;
};

/// Signature construction or sub-signature misuse (duplicates, cap, overlap).
class SignatureError : public Error {
public:
    using Error::Error;
};

/// Raised where a consistent belief base is required but none was given.
class InconsistentBaseError : public Error {
public:
    InconsistentBaseError() : Error("belief base is inconsistent") {}
    using Error::Error;
};

}  // namespace condw
