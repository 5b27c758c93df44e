#pragma once

#include <stdexcept>
#include <string>

namespace b4 {

/// Raised for malformed input and violated preconditions throughout the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (word syntax, machine files, generator words).
class ParseError : public Error {
public:
    using Error::Error;
};

/// File system failures while reading or writing machine files.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace b4
