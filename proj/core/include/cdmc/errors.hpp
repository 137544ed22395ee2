#pragma once

#include <stdexcept>
#include <string>

namespace cdmc {

/// Base class for all cdmc errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid arguments: dimension mismatch, bad vertex index, non-±1 entries.
class InputError : public Error {
public:
    using Error::Error;
};

/// Instance exceeds a hard size limit (e.g. the brute-force cap).
class SizeError : public InputError {
public:
    using InputError::InputError;
};

/// Malformed instance file. Carries the 1-based line number when known.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0)
        : Error(line > 0 ? msg + " (line " + std::to_string(line) + ")" : msg),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_ = 0;
};

/// Instance uses an EDGE_WEIGHT_TYPE/FORMAT outside the supported set.
class UnsupportedFormatError : public ParseError {
public:
    using ParseError::ParseError;
};

/// Numerical failure: non-finite objective, factorization breakdown.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Dual function evaluated at a point outside the feasible cone.
class DualInfeasibleError : public NumericError {
public:
    using NumericError::NumericError;
};

} // namespace cdmc
