#pragma once

#include <stdexcept>
#include <string>

namespace distcol {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfRangeError : Error {
    using Error::Error;
};

struct SelfLoopError : Error {
    using Error::Error;
};

struct BadSizeError : Error {
    using Error::Error;
};

struct MalformedGraph6Error : Error {
    using Error::Error;
};

struct TooLargeError : Error {
    using Error::Error;
};

struct SizeMismatchError : Error {
    using Error::Error;
};

struct NotAutomorphismError : Error {
    using Error::Error;
};

struct TooLargeForOracleError : Error {
    using Error::Error;
};

struct NotSuitableInputError : Error {
    using Error::Error;
};

struct TooLargeForSearchError : Error {
    using Error::Error;
};

struct VerificationFailedError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

}  // namespace distcol
