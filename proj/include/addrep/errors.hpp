#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace addrep {

// Base of every error raised by the library. The CLI maps subclasses onto
// exit codes, so keep the hierarchy flat.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A query needed membership information beyond the stored truncation bound.
class HorizonError : public Error {
public:
    HorizonError(std::int64_t requested, std::int64_t horizon);

    std::int64_t requested() const noexcept { return requested_; }
    std::int64_t horizon() const noexcept { return horizon_; }

private:
    std::int64_t requested_;
    std::int64_t horizon_;
};

class OverflowError : public Error {
public:
    using Error::Error;
};

class LengthError : public Error {
public:
    using Error::Error;
};

class ParameterError : public Error {
public:
    using Error::Error;
};

// A theorem's hypothesis on the weights (sign of the weight sum) failed.
class HypothesisError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

// A construction produced an empty intermediate set.
class DegenerateConstruction : public Error {
public:
    using Error::Error;
};

// Input on which a diagnostic is undefined (e.g. an all-zero base series).
class DegenerateInput : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line);

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace addrep
