#pragma once

#include <stdexcept>
#include <string>

namespace mnesor {

// Root of the library's error hierarchy.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A value or parameter lies outside its mathematical domain.
class DomainError : public Error {
public:
    using Error::Error;
};

// Binary set operation over mismatched universes or grids.
class CarrierMismatch : public Error {
public:
    using Error::Error;
};

// Reference to a variable with no binding in the environment.
class NameError : public Error {
public:
    using Error::Error;
};

// Malformed set-definition file.
class FormatError : public Error {
public:
    using Error::Error;
};

// A capability bundle that cannot be checked (missing or failing pieces).
class InstanceError : public Error {
public:
    using Error::Error;
};

// Lexical or syntax error with a 1-based source position.
class ParseError : public Error {
public:
    ParseError(int line, int column, const std::string& message)
        : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace mnesor
