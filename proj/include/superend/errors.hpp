#ifndef SUPEREND_ERRORS_HPP
#define SUPEREND_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace superend {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Precondition violation: the input is outside the contract of the
// operation (wrong divisibility case, degree too small, non-unit
// multiplier, ...). Maps to CLI exit code 2.
struct DomainError : Error {
    using Error::Error;
};

// gcd(f, f') is nonconstant mod p; the caller must skip this prime.
struct NotSquarefreeError : DomainError {
    using DomainError::DomainError;
};

// The prime divides the leading coefficient or the discriminant.
struct BadPrimeError : DomainError {
    using DomainError::DomainError;
};

struct UsageError : Error {
    using Error::Error;
};

}  // namespace superend

#endif
