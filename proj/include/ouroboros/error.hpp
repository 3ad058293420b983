#pragma once

#include <stdexcept>
#include <string>

namespace ouroboros {

/// Base of every exception raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument (index, dimension, exponent) was violated.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Two operands live in different variable spaces.
class VarSpaceMismatch : public Error {
public:
    explicit VarSpaceMismatch(const std::string& what)
        : Error("incompatible variable spaces: " + what) {}
};

/// Document parsing failed; `field()` names the offending location (e.g. "terms[2].coeff").
class ParseError : public Error {
public:
    ParseError(std::string field, const std::string& message)
        : Error(message + " (at " + field + ")"), field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

}  // namespace ouroboros
