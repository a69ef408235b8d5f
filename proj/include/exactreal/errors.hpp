#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace exact {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rational with a zero or negative denominator.
struct InvalidRational : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
    using Error::Error;
};

// Non-positive tolerance handed to a comparison or Cauchy check.
struct InvalidTolerance : Error {
    InvalidTolerance() : Error("tolerance must be positive") {}
    using Error::Error;
};

// Apartness witness failed verification, or no witness could be derived.
struct InvalidApartness : Error {
    using Error::Error;
};

// Every scanned denominator term was zero; the quotient subsequence is empty.
struct EmptyQuotient : Error {
    using Error::Error;
};

struct InvalidInterval : Error {
    using Error::Error;
};

struct DomainError : Error {
    using Error::Error;
};

// Syntax error with byte offset and the token set that would have been accepted.
struct ParseError : Error {
    ParseError(std::size_t offset, std::vector<std::string> expected, std::string found);

    std::size_t offset;
    std::vector<std::string> expected;
    std::string found;
};

} // namespace exact
