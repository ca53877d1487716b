#pragma once

#include <stdexcept>
#include <string>

namespace parares {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input text (graph files, CSV). Carries a 1-based line number
/// when the failing line is known, 0 otherwise.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

/// Numerical failure: non-convergence of an iteration, invalid domain value.
class NumericError : public Error {
public:
    using Error::Error;
};

/// Non-finite state detected during time integration. Signals either a
/// genuine overflow of an exponentially growing solution or a bad step size.
class BlowupError : public NumericError {
public:
    BlowupError(long step, double time)
        : NumericError("non-finite state at step " + std::to_string(step) +
                       ", t = " + std::to_string(time)),
          step_(step), time_(time) {}
    long step() const { return step_; }
    double time() const { return time_; }

private:
    long step_;
    double time_;
};

}  // namespace parares
