#pragma once

#include "wavelab/mollifier.hpp"
#include "wavelab/spectral.hpp"

#include <functional>
#include <vector>

namespace wavelab {

struct DiracComponent {
    double x0 = 0.0;
    double weight = 0.0;
};

/// A datum that is a smooth function, a weighted sum of Dirac masses, or a
/// finite sum of both.
class DistributionSpec {
public:
    DistributionSpec() = default;

    static DistributionSpec zero() { return {}; }
    static DistributionSpec smooth(std::function<double(double)> fn);
    static DistributionSpec dirac(double x0, double weight);
    static DistributionSpec sum(std::vector<DistributionSpec> parts);

    bool has_dirac() const { return !diracs_.empty(); }
    bool is_zero() const { return diracs_.empty() && smooth_parts_.empty(); }
    const std::vector<DiracComponent> &diracs() const { return diracs_; }

    /// Pointwise value of the smooth parts (Dirac parts excluded).
    double eval_smooth(double x) const;

    /// Support windows of the Dirac parts at scale eps.
    std::vector<SupportWindow> support_windows(double eps) const;

private:
    std::vector<std::function<double(double)>> smooth_parts_;
    std::vector<DiracComponent> diracs_;
};

/// Samples of the smooth parts only; throws if a Dirac part is present.
GridFunction sample_unregularized(const DistributionSpec &spec, const Quadrature &quad);

/// Regularization at scale eps:
///   Dirac part  -> weight * psi_eps(x - x0)
///   smooth part -> zero-extension convolution (psi_eps * f)(x) by local quadrature.
/// Dirac supports must be strictly interior (throws BoundaryClippingError).
GridFunction regularize(const DistributionSpec &spec, const Mollifier &psi, double eps,
                        const Interval &iv, const Quadrature &quad);

/// Regularization that mollifies Dirac parts but passes smooth parts through
/// unchanged (the identity is itself an admissible regularization of a smooth
/// datum; sweeps use this so smooth problems stay eps-flat).
GridFunction regularize_singular_only(const DistributionSpec &spec, const Mollifier &psi,
                                      double eps, const Interval &iv, const Quadrature &quad);

/// Zero-extension convolution of a pointwise function at a single point.
double convolve_at(const std::function<double(double)> &fn, const Mollifier &psi, double eps,
                   const Interval &iv, double x);

} // namespace wavelab
