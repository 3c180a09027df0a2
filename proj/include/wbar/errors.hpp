#pragma once

#include <stdexcept>
#include <string>

namespace wbar {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CompositionError : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

/// An operation needed a degree beyond the materialized truncation.
class InsufficientTruncation : public Error {
public:
    using Error::Error;
};

/// Enumeration would exceed the configured element budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// An ordinal or chain cap was exceeded.
class CapExceeded : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

/// A machine check failed; the message names the offending object.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

class NotSimplicial : public VerificationFailure {
public:
    using VerificationFailure::VerificationFailure;
};

class FactorizationFailure : public VerificationFailure {
public:
    using VerificationFailure::VerificationFailure;
};

}  // namespace wbar
