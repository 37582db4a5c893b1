#pragma once

#include <stdexcept>
#include <string>

namespace amdesign {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: ragged matrices, bad files, out-of-range parameters.
class InputError : public Error {
public:
    using Error::Error;
};

/// An operation was applied to an object outside its hypothesis class.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A resource guard tripped (enumeration size, matrix size, search budget).
class GuardError : public Error {
public:
    using Error::Error;
};

}  // namespace amdesign
