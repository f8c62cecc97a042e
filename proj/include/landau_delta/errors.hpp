#pragma once

#include <stdexcept>
#include <string>

namespace landau_delta {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A parameter violates its documented domain (non-positive mass, N < 1, ...).
class InvalidParameter : public Error {
public:
    using Error::Error;
};

/// Evaluation point lies within the singularity guard of a Landau level.
class SingularityError : public Error {
public:
    SingularityError(const std::string& what, double x, long level)
        : Error(what), x_(x), level_(level) {}
    double x() const noexcept { return x_; }
    long level() const noexcept { return level_; }

private:
    double x_;
    long level_;
};

/// A bisection bracket has no sign change; carries the evaluated endpoints.
class BracketingError : public Error {
public:
    BracketingError(const std::string& what, double lo, double hi, double f_lo, double f_hi)
        : Error(what), lo_(lo), hi_(hi), f_lo_(f_lo), f_hi_(f_hi) {}
    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double f_lo() const noexcept { return f_lo_; }
    double f_hi() const noexcept { return f_hi_; }

private:
    double lo_, hi_, f_lo_, f_hi_;
};

/// The physical approximation behind a formula does not hold (e.g. strong field).
class ValidityError : public Error {
public:
    using Error::Error;
};

/// A sampled function returned a non-finite value.
class EvaluationError : public Error {
public:
    EvaluationError(const std::string& what, double location) : Error(what), location_(location) {}
    double location() const noexcept { return location_; }

private:
    double location_;
};

/// Quadrature failed to reach its tolerance within the allowed depth.
class QuadratureError : public Error {
public:
    using Error::Error;
};

namespace detail {

inline void require(bool condition, const char* message) {
    if (!condition) throw InvalidParameter(message);
}

}  // namespace detail
}  // namespace landau_delta
