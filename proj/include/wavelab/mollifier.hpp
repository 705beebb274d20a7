#pragma once

#include <string>

namespace wavelab {

/// Even, nonnegative, unit-mass reference profiles supported in [-1, 1].
/// psi_eps(x) = psi(x/eps)/eps.
enum class MollifierShape { StandardBump, Triangle, QuadraticSpline };

class Mollifier {
public:
    explicit Mollifier(MollifierShape shape) : shape_(shape) {}

    MollifierShape shape() const { return shape_; }

    /// Reference profile psi(s); zero for |s| >= 1.
    double operator()(double s) const;

    /// psi(0).
    double peak() const;

    std::string name() const;

private:
    MollifierShape shape_;
};

Mollifier mollifier_from_name(const std::string &name);

/// psi((x - x0)/eps)/eps. Requires 0 < eps <= 1.
double mollifier_eval(const Mollifier &psi, double eps, double x0, double x);

} // namespace wavelab
