#include "wavelab/spectral.hpp"

#include "wavelab/errors.hpp"
#include "wavelab/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wavelab {

EigenBasis::EigenBasis(const Interval &iv, int modes)
    : EigenBasis(iv, modes, Quadrature::build(iv)) {}

EigenBasis::EigenBasis(const Interval &iv, int modes, Quadrature quad)
    : interval_(iv), quad_(std::move(quad)), modes_(modes) {
    if (iv.length <= 0.0)
        throw std::invalid_argument("interval length must be positive");
    if (modes < 1)
        throw std::invalid_argument("mode count must be >= 1");

    const double L = iv.length;
    lambdas_.resize(modes);
    node_values_.resize(std::size_t(modes) * quad_.size());
    const double amp = std::sqrt(2.0 / L);
    for (int k = 1; k <= modes; ++k) {
        const double freq = k * std::numbers::pi / L;
        lambdas_[k - 1] = freq * freq;
        double *row = node_values_.data() + std::size_t(k - 1) * quad_.size();
        for (std::size_t i = 0; i < quad_.size(); ++i)
            row[i] = amp * std::sin(freq * quad_.nodes()[i]);
    }
}

double EigenBasis::eval_mode(int k, double x) const {
    const double L = interval_.length;
    return std::sqrt(2.0 / L) * std::sin(k * std::numbers::pi * x / L);
}

double EigenBasis::eval_mode_deriv(int k, double x) const {
    const double L = interval_.length;
    const double freq = k * std::numbers::pi / L;
    return std::sqrt(2.0 / L) * freq * std::cos(freq * x);
}

EigenBasis build_eigenbasis(const Interval &iv, int modes) { return EigenBasis(iv, modes); }

SpectralCoeffs project(const GridFunction &u, const EigenBasis &basis) {
    const auto &q = basis.quad();
    if (u.size() != q.size())
        throw std::invalid_argument("grid function length does not match basis quadrature");
    SpectralCoeffs d(basis.modes());
    for (int k = 1; k <= basis.modes(); ++k)
        d[k - 1] = kernels::dot3(q.weights().data(), u.data(), basis.mode_row(k), q.size());
    return d;
}

GridFunction reconstruct(const SpectralCoeffs &d, const EigenBasis &basis) {
    if (static_cast<int>(d.size()) != basis.modes())
        throw std::invalid_argument("coefficient length does not match basis mode count");
    GridFunction u(basis.quad().size(), 0.0);
    for (int k = 1; k <= basis.modes(); ++k)
        kernels::axpy(d[k - 1], basis.mode_row(k), u.data(), u.size());
    return u;
}

double reconstruct_at(const SpectralCoeffs &d, const EigenBasis &basis, double x) {
    double s = 0.0;
    for (int k = 1; k <= static_cast<int>(d.size()); ++k)
        s += d[k - 1] * basis.eval_mode(k, x);
    return s;
}

double spectral_norm(NormKind kind, const SpectralCoeffs &d, const EigenBasis &basis) {
    if (static_cast<int>(d.size()) != basis.modes())
        throw std::invalid_argument("coefficient length does not match basis mode count");
    const auto &lam = basis.lambdas();
    double s = 0.0;
    switch (kind) {
    case NormKind::L2:
        for (double v : d)
            s += v * v;
        break;
    case NormKind::H10:
        for (std::size_t k = 0; k < d.size(); ++k)
            s += lam[k] * d[k] * d[k];
        break;
    case NormKind::Hminus1:
        for (std::size_t k = 0; k < d.size(); ++k)
            s += d[k] * d[k] / lam[k];
        break;
    case NormKind::H20:
        for (std::size_t k = 0; k < d.size(); ++k)
            s += lam[k] * lam[k] * d[k] * d[k];
        break;
    }
    return std::sqrt(s);
}

double grid_l2_norm(const GridFunction &u, const Quadrature &quad) {
    if (u.size() != quad.size())
        throw std::invalid_argument("grid function length does not match quadrature");
    return std::sqrt(kernels::dot3(quad.weights().data(), u.data(), u.data(), u.size()));
}

double weighted_l2_norm(const GridFunction &v, const GridFunction &u, const Quadrature &quad) {
    if (u.size() != quad.size() || v.size() != quad.size())
        throw std::invalid_argument("grid function length does not match quadrature");
    double s = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (v[i] < -1e-12)
            throw PotentialSignError(v[i], quad.nodes()[i]);
        s += quad.weights()[i] * v[i] * u[i] * u[i];
    }
    return std::sqrt(std::max(s, 0.0));
}

double grid_max_norm(const GridFunction &v) {
    double m = 0.0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    return m;
}

} // namespace wavelab
