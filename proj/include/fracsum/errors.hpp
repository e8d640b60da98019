#pragma once

#include <stdexcept>
#include <string>

#include "fracsum/complex.hpp"

namespace fracsum {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a function (log of zero, 0^s with Re s <= 0, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// A function was evaluated at one of its poles.
class PoleError : public DomainError {
public:
    PoleError(Complex where, const std::string& what)
        : DomainError(what), where_(where) {}

    Complex where() const noexcept { return where_; }

private:
    Complex where_;
};

/// A documented precondition of an operation was violated by the caller.
class ContractError : public Error {
public:
    using Error::Error;
};

/// The request is valid but not supported by this implementation.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

}  // namespace fracsum
