#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fupdate {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero field element") {}
};

/// Operands live over different fields.
class SpecMismatch : public Error {
public:
    using Error::Error;
};

class NotATower : public Error {
public:
    NotATower() : Error("field has no base field") {}
};

class Singular : public Error {
public:
    Singular() : Error("matrix is singular") {}
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class InvalidParams : public Error {
public:
    using Error::Error;
};

/// An enumeration or search would exceed its configured budget.
class BudgetExceeded : public Error {
public:
    BudgetExceeded(const std::string& what, std::uint64_t required, std::uint64_t budget)
        : Error(what + ": needs " + std::to_string(required) + " steps, budget " +
                std::to_string(budget)),
          required_(required), budget_(budget) {}

    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t budget() const noexcept { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

/// No admissible update explains the received codeword.
class NoCandidate : public Error {
public:
    NoCandidate() : Error("no candidate update matches the codeword") {}
};

/// Several admissible updates explain the codeword; the encoder is not valid.
class AmbiguousCandidate : public Error {
public:
    AmbiguousCandidate() : Error("several candidate updates match the codeword") {}
};

class NoSavings : public Error {
public:
    NoSavings() : Error("every nonzero vector is a syndrome; no transmission can be saved") {}
};

class NoConstruction : public Error {
public:
    using Error::Error;
};

class InsufficientSubspaces : public Error {
public:
    using Error::Error;
};

class BadShape : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace fupdate
