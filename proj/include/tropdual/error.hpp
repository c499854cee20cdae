#pragma once

#include <stdexcept>
#include <string>

namespace tropdual {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad index, bad document, violated precondition).
class InputError : public Error {
public:
    using Error::Error;
};

/// The requested operation is not implemented for this support shape or size.
class UnsupportedShape : public Error {
public:
    using Error::Error;
};

/// An exact-arithmetic result did not fit the 64-bit rational representation.
class OverflowError : public Error {
public:
    using Error::Error;
};

}  // namespace tropdual
