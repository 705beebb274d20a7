#pragma once

#include "wavelab/quadrature.hpp"

#include <memory>
#include <vector>

namespace wavelab {

/// Samples of a spatial function at the quadrature nodes.
using GridFunction = std::vector<double>;

/// Coefficients d_k against the orthonormal Dirichlet eigenbasis.
using SpectralCoeffs = std::vector<double>;

/// Dirichlet eigenpairs of -d^2/dx^2 on (0, L):
///   lambda_k = (k pi / L)^2,  w_k(x) = sqrt(2/L) sin(k pi x / L),
/// with w_k pre-sampled at the quadrature nodes (row-major, m x N).
class EigenBasis {
public:
    EigenBasis(const Interval &iv, int modes);
    EigenBasis(const Interval &iv, int modes, Quadrature quad);

    const Interval &interval() const { return interval_; }
    const Quadrature &quad() const { return quad_; }
    int modes() const { return modes_; }
    const std::vector<double> &lambdas() const { return lambdas_; }

    /// Row of w_k samples (k is 1-based).
    const double *mode_row(int k) const { return node_values_.data() + std::size_t(k - 1) * quad_.size(); }
    const std::vector<double> &node_values() const { return node_values_; }

    /// w_k at an arbitrary point.
    double eval_mode(int k, double x) const;
    /// w_k' at an arbitrary point.
    double eval_mode_deriv(int k, double x) const;

private:
    Interval interval_;
    Quadrature quad_;
    int modes_ = 0;
    std::vector<double> lambdas_;
    std::vector<double> node_values_;
};

using BasisPtr = std::shared_ptr<const EigenBasis>;

EigenBasis build_eigenbasis(const Interval &iv, int modes);

/// d_k = (u, w_k) by quadrature.
SpectralCoeffs project(const GridFunction &u, const EigenBasis &basis);

/// sum_k d_k w_k at the quadrature nodes.
GridFunction reconstruct(const SpectralCoeffs &d, const EigenBasis &basis);

/// sum_k d_k w_k at one point.
double reconstruct_at(const SpectralCoeffs &d, const EigenBasis &basis, double x);

enum class NormKind { L2, H10, Hminus1, H20 };

/// Sobolev norms over the truncated basis:
///   L2 = (sum d_k^2)^{1/2}          H10 = (sum lambda_k d_k^2)^{1/2}
///   Hminus1 = (sum d_k^2/lambda_k)^{1/2}   H20 = (sum lambda_k^2 d_k^2)^{1/2}
double spectral_norm(NormKind kind, const SpectralCoeffs &d, const EigenBasis &basis);

/// (sum_i w_i u_i^2)^{1/2}
double grid_l2_norm(const GridFunction &u, const Quadrature &quad);

/// || sqrt(V) u ||_{L2} = (int V u^2)^{1/2}. Rejects V below -1e-12 at a node.
double weighted_l2_norm(const GridFunction &v, const GridFunction &u, const Quadrature &quad);

/// max_i |v_i|
double grid_max_norm(const GridFunction &v);

/// Sample a pointwise function at the quadrature nodes.
template <typename F> GridFunction sample(F &&f, const Quadrature &quad) {
    GridFunction g(quad.size());
    for (std::size_t i = 0; i < quad.size(); ++i)
        g[i] = f(quad.nodes()[i]);
    return g;
}

} // namespace wavelab
