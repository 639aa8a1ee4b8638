#pragma once

#include <stdexcept>
#include <string>

namespace qhopf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad parameters: n < 2, exponent not coprime to n^2, rank mismatch, ...
class InvalidArgument : public Error {
public:
    using Error::Error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero in cyclotomic field") {}
};

/// An element that has no inverse. `witness()` names the fact that proves it.
class SingularElement : public Error {
public:
    explicit SingularElement(std::string witness)
        : Error("singular element: " + witness), witness_(std::move(witness)) {}
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

/// A construction produced an element outside the subalgebra it must live in.
class ClosureError : public Error {
public:
    explicit ClosureError(std::string witness)
        : Error("closure failure: " + witness), witness_(std::move(witness)) {}
    const std::string& witness() const noexcept { return witness_; }

private:
    std::string witness_;
};

}  // namespace qhopf
