#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eea {

// Base for every domain error raised by the library. The CLI maps these to
// exit code 1; I/O and usage problems map to 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidConfiguration : public Error {
public:
    using Error::Error;
};

class InvalidInput : public Error {
public:
    using Error::Error;
};

class InvalidIndividual : public Error {
public:
    using Error::Error;
};

class IncompatibleParents : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

class DegenerateSample : public Error {
public:
    using Error::Error;
};

class UndefinedDelta : public Error {
public:
    using Error::Error;
};

/// Parse failure carrying the 1-based line it was detected on (0 when the
/// error is not tied to a single line, e.g. a token count mismatch).
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what)
        , line_(line)
    {
    }

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace eea
