#pragma once

#include <stdexcept>
#include <string>

namespace fewlee {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands disagree in length or modulus.
class DimensionError : public Error {
public:
    using Error::Error;
};

/// A parameter is outside the domain of an operation (bad prime, r out of
/// range, p = 2 for an odd-p formula, malformed input text).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// A computation would exceed its configured work budget. Raised before any
/// work is done; results are never silently truncated.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace fewlee

namespace fewlee {

/// Two independent computations of the same quantity disagree.
class VerificationMismatch : public Error {
public:
    using Error::Error;
};

} // namespace fewlee
