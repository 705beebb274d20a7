#include "wavelab/mollifier.hpp"

#include <cmath>
#include <stdexcept>

namespace wavelab {

namespace {
// int_{-1}^{1} exp(-1/(1-s^2)) ds
constexpr double kBumpMass = 0.44399381616807944;
} // namespace

double Mollifier::operator()(double s) const {
    const double a = std::abs(s);
    if (a >= 1.0)
        return 0.0;
    switch (shape_) {
    case MollifierShape::StandardBump:
        return std::exp(-1.0 / (1.0 - s * s)) / kBumpMass;
    case MollifierShape::Triangle:
        return 1.0 - a;
    case MollifierShape::QuadraticSpline:
        return 0.75 * (1.0 - s * s);
    }
    return 0.0;
}

double Mollifier::peak() const {
    switch (shape_) {
    case MollifierShape::StandardBump:
        return std::exp(-1.0) / kBumpMass;
    case MollifierShape::Triangle:
        return 1.0;
    case MollifierShape::QuadraticSpline:
        return 0.75;
    }
    return 0.0;
}

std::string Mollifier::name() const {
    switch (shape_) {
    case MollifierShape::StandardBump:
        return "standard_bump";
    case MollifierShape::Triangle:
        return "triangle";
    case MollifierShape::QuadraticSpline:
        return "quadratic_spline";
    }
    return "?";
}

Mollifier mollifier_from_name(const std::string &name) {
    if (name == "standard_bump")
        return Mollifier(MollifierShape::StandardBump);
    if (name == "triangle")
        return Mollifier(MollifierShape::Triangle);
    if (name == "quadratic_spline")
        return Mollifier(MollifierShape::QuadraticSpline);
    throw std::invalid_argument("unknown mollifier shape: " + name);
}

double mollifier_eval(const Mollifier &psi, double eps, double x0, double x) {
    if (eps <= 0.0 || eps > 1.0)
        throw std::invalid_argument("mollifier scale must satisfy 0 < eps <= 1");
    return psi((x - x0) / eps) / eps;
}

} // namespace wavelab
