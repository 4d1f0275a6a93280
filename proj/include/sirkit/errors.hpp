#pragma once

#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace sirkit {

namespace detail {
inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}
}  // namespace detail

/// Base class for all sirkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A rate parameter was zero or negative (beta and gamma must be strictly positive).
class NonPositiveParameter : public Error {
public:
    NonPositiveParameter(std::string which, double value)
        : Error("parameter '" + which + "' must be strictly positive, got " +
                detail::fmt(value)),
          which_(std::move(which)),
          value_(value) {}

    const std::string& which() const noexcept { return which_; }
    double value() const noexcept { return value_; }

private:
    std::string which_;
    double value_;
};

/// A rate parameter was NaN or infinite.
class NonFiniteParameter : public Error {
public:
    using Error::Error;
};

/// A state or coefficient input was NaN or infinite.
class NonFiniteInput : public Error {
public:
    using Error::Error;
};

/// Initial data handed to the integrator had a negative compartment.
class NegativeInitialData : public Error {
public:
    using Error::Error;
    NegativeInitialData(double s, double i, double r)
        : Error("initial data must be componentwise nonnegative, got (" + detail::fmt(s) +
                ", " + detail::fmt(i) + ", " + detail::fmt(r) + ")") {}
};

/// The integrator hit its step budget before reaching t_end.
class StepBudgetExhausted : public Error {
public:
    using Error::Error;
    StepBudgetExhausted(std::size_t budget, double t)
        : Error("step budget of " + std::to_string(budget) + " exhausted at t = " +
                detail::fmt(t)) {}
};

/// The required step size fell below machine resolution.
class StepUnderflow : public Error {
public:
    using Error::Error;
    StepUnderflow(double h, double t)
        : Error("step size " + detail::fmt(h) + " underflowed at t = " + detail::fmt(t)) {}
};

/// A query time was outside the covered interval.
class TimeOutOfRange : public Error {
public:
    using Error::Error;
    TimeOutOfRange(double t, double lo, double hi)
        : Error("time " + detail::fmt(t) + " outside [" + detail::fmt(lo) + ", " +
                detail::fmt(hi) + "]") {}
};

/// A tolerance argument was negative.
class NegativeTolerance : public Error {
public:
    using Error::Error;
};

/// Coefficient samples were not strictly increasing in time.
class UnorderedSamples : public Error {
public:
    using Error::Error;
};

/// The susceptible value was not strictly positive where ln(S) is needed.
class NonpositiveS : public Error {
public:
    using Error::Error;
};

/// An S-range or similar interval argument was empty or inverted.
class InvalidRange : public Error {
public:
    using Error::Error;
};

/// The infectious compartment was negative where the growth factorization requires I >= 0.
class NegativeI : public Error {
public:
    using Error::Error;
};

/// A scenario config or trajectory file failed to parse or validate.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace sirkit
