#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exsf {

// Base class for all library errors. The message names the violated
// condition so callers can surface it without extra context.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Input outside the mathematical domain of the operation.
class DomainError : public Error {
public:
    using Error::Error;
};

// Evaluation requested at (or too near) a pole of the function.
class PoleError : public Error {
public:
    using Error::Error;
};

// Iterative scheme exhausted its budget before reaching the tolerance.
class NoConvergence : public Error {
public:
    using Error::Error;
};

// Partial sums of a half-line integral keep growing; the integral is
// probably divergent for the given parameters.
class DivergenceSuspected : public Error {
public:
    using Error::Error;
};

// Repeated identical poles where pairwise-distinct poles are required.
class DegenerateError : public Error {
public:
    using Error::Error;
};

// Numerator degree not below denominator degree.
class DegreeError : public Error {
public:
    using Error::Error;
};

// Mismatched list lengths.
class DimensionError : public Error {
public:
    using Error::Error;
};

// Polynomial root polishing failed to converge to the residual target.
class RootConditionError : public Error {
public:
    using Error::Error;
};

// Rational-function text that does not match the accepted grammar.
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

}  // namespace exsf
