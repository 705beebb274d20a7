#pragma once

#include <stdexcept>
#include <string>

namespace wavelab {

/// Numerical guard violation. `guard()` names the invariant that tripped;
/// the CLI maps these to exit code 3.
class GuardError : public std::runtime_error {
public:
    GuardError(std::string guard, const std::string &what)
        : std::runtime_error(what), guard_(std::move(guard)) {}
    const std::string &guard() const noexcept { return guard_; }

private:
    std::string guard_;
};

/// Time step violates the integrator stability guard. Carries the largest
/// admissible step so callers can retry.
class StepSizeError : public GuardError {
public:
    StepSizeError(double dt, double dt_max, const std::string &what)
        : GuardError("stability", what), dt_(dt), dt_max_(dt_max) {}
    double dt() const noexcept { return dt_; }
    double suggested_dt() const noexcept { return dt_max_; }

private:
    double dt_;
    double dt_max_;
};

/// Potential took a negative value below tolerance (the estimates require V >= 0).
class PotentialSignError : public GuardError {
public:
    PotentialSignError(double value, double x)
        : GuardError("potential-sign",
                     "potential is negative (V(" + std::to_string(x) +
                         ") = " + std::to_string(value) + "); V >= 0 is required"),
          value_(value), x_(x) {}
    double value() const noexcept { return value_; }
    double location() const noexcept { return x_; }

private:
    double value_;
    double x_;
};

/// Mollifier support would overlap the boundary and lose mass.
class BoundaryClippingError : public GuardError {
public:
    BoundaryClippingError(double x0, double eps)
        : GuardError("boundary-clipping",
                     "mollifier support [" + std::to_string(x0 - eps) + ", " +
                         std::to_string(x0 + eps) + "] is not strictly interior to the domain"),
          x0_(x0), eps_(eps) {}
    double x0() const noexcept { return x0_; }
    double eps() const noexcept { return eps_; }

private:
    double x0_;
    double eps_;
};

/// Boundary data incompatible with the initial data (consistency conditions).
class ConsistencyError : public GuardError {
public:
    explicit ConsistencyError(const std::string &what) : GuardError("consistency", what) {}
};

} // namespace wavelab
