#pragma once

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace kwss {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Modulus below 2, or too large for the fixed-width residue path.
class InvalidModulus : public InvalidArgument {
public:
    using InvalidArgument::InvalidArgument;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The k-hypotheses (4 does not divide k, (k^2+4)/gcd(2,k)^2 squarefree) fail.
class HypothesisViolation : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// A criterion was asked for at a prime where it is not defined (p = 2).
class UnsupportedCriterion : public Error {
public:
    using Error::Error;
};

/// Two ring elements with different (k, m) were combined.
class IncompatibleElements : public Error {
public:
    using Error::Error;
};

/// Pollard rho ran out of its iteration budget.
class FactorizationIncomplete : public Error {
public:
    FactorizationIncomplete(const std::string& what, mpz_class cofactor)
        : Error(what), cofactor_(std::move(cofactor)) {}

    const mpz_class& cofactor() const noexcept { return cofactor_; }

private:
    mpz_class cofactor_;
};

/// An iterative search hit its configured cap before terminating.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace kwss
