#pragma once

#include <stdexcept>
#include <string>

namespace tirewake {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Contract violation: argument outside its documented domain.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// Signed 64-bit slot arithmetic would wrap.
class OverflowError : public Error {
public:
    using Error::Error;
};

/// gcd(C_L, W+S) != 1: some arrival phases are never received.
class NotFiniteError : public Error {
public:
    using Error::Error;
};

/// Arrival phase outside 1..C_L.
class InvalidPhaseError : public Error {
public:
    using Error::Error;
};

/// C_L <= S: the worst-arrival formula has no valid phase.
class DegenerateConfigError : public Error {
public:
    using Error::Error;
};

/// Exact never-received verdict requested with a horizon below the safe bound.
class InsufficientHorizonError : public Error {
public:
    using Error::Error;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

class ZeroDenominatorError : public Error {
public:
    using Error::Error;
};

// Frame codec errors.

class BadLengthError : public Error {
public:
    using Error::Error;
};

class ChecksumMismatchError : public Error {
public:
    using Error::Error;
};

class FieldOutOfRangeError : public Error {
public:
    using Error::Error;
};

} // namespace tirewake
