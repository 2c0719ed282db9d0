#ifndef IDEALSYNC_ERRORS_HPP
#define IDEALSYNC_ERRORS_HPP

#include <stdexcept>

namespace idealsync {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates an operation's contract.
class InputError : public Error {
public:
    using Error::Error;
};

/// Text input could not be parsed; the message carries a line number.
class ParseError : public InputError {
public:
    using InputError::InputError;
};

/// An operation would exceed a configured resource bound.
class ResourceError : public Error {
public:
    using Error::Error;
};

} // namespace idealsync

#endif
