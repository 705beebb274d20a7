#include "wavelab/distribution.hpp"

#include "wavelab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wavelab {

DistributionSpec DistributionSpec::smooth(std::function<double(double)> fn) {
    DistributionSpec s;
    s.smooth_parts_.push_back(std::move(fn));
    return s;
}

DistributionSpec DistributionSpec::dirac(double x0, double weight) {
    DistributionSpec s;
    s.diracs_.push_back({x0, weight});
    return s;
}

DistributionSpec DistributionSpec::sum(std::vector<DistributionSpec> parts) {
    DistributionSpec s;
    for (auto &p : parts) {
        for (auto &f : p.smooth_parts_)
            s.smooth_parts_.push_back(std::move(f));
        for (auto &d : p.diracs_)
            s.diracs_.push_back(d);
    }
    return s;
}

double DistributionSpec::eval_smooth(double x) const {
    double v = 0.0;
    for (const auto &f : smooth_parts_)
        v += f(x);
    return v;
}

std::vector<SupportWindow> DistributionSpec::support_windows(double eps) const {
    std::vector<SupportWindow> w;
    for (const auto &d : diracs_)
        w.push_back({d.x0, eps});
    return w;
}

GridFunction sample_unregularized(const DistributionSpec &spec, const Quadrature &quad) {
    if (spec.has_dirac())
        throw std::invalid_argument("datum has a Dirac part; it must be regularized");
    return sample([&spec](double x) { return spec.eval_smooth(x); }, quad);
}

double convolve_at(const std::function<double(double)> &fn, const Mollifier &psi, double eps,
                   const Interval &iv, double x) {
    // Integrate psi_eps(x - y) f(y) over y in [x-eps, x+eps] clipped to (0, L),
    // on 8 Gauss panels aligned at the kernel center (triangle kink).
    static thread_local std::vector<double> xg, wg;
    if (xg.empty())
        gauss_legendre_reference(8, xg, wg);

    const double lo = std::max(x - eps, 0.0);
    const double hi = std::min(x + eps, iv.length);
    if (hi <= lo)
        return 0.0;
    double acc = 0.0;
    for (int p = 0; p < 8; ++p) {
        double a = x - eps + 2.0 * eps * p / 8.0;
        double b = x - eps + 2.0 * eps * (p + 1) / 8.0;
        a = std::max(a, lo);
        b = std::min(b, hi);
        if (b <= a)
            continue;
        const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
        for (int j = 0; j < 8; ++j) {
            const double y = mid + hw * xg[j];
            acc += hw * wg[j] * psi((x - y) / eps) * fn(y);
        }
    }
    return acc / eps;
}

namespace {

GridFunction regularize_impl(const DistributionSpec &spec, const Mollifier &psi, double eps,
                             const Interval &iv, const Quadrature &quad, bool convolve_smooth) {
    if (eps <= 0.0 || eps > 1.0)
        throw std::invalid_argument("mollifier scale must satisfy 0 < eps <= 1");
    for (const auto &d : spec.diracs()) {
        if (d.x0 - eps <= 0.0 || d.x0 + eps >= iv.length)
            throw BoundaryClippingError(d.x0, eps);
    }

    GridFunction out(quad.size(), 0.0);
    if (convolve_smooth && !spec.is_zero()) {
        auto fn = [&spec](double y) { return spec.eval_smooth(y); };
        for (std::size_t i = 0; i < quad.size(); ++i)
            out[i] = convolve_at(fn, psi, eps, iv, quad.nodes()[i]);
    } else {
        for (std::size_t i = 0; i < quad.size(); ++i)
            out[i] = spec.eval_smooth(quad.nodes()[i]);
    }
    for (const auto &d : spec.diracs()) {
        if (d.weight == 0.0)
            continue;
        for (std::size_t i = 0; i < quad.size(); ++i)
            out[i] += d.weight * mollifier_eval(psi, eps, d.x0, quad.nodes()[i]);
    }
    return out;
}

} // namespace

GridFunction regularize(const DistributionSpec &spec, const Mollifier &psi, double eps,
                        const Interval &iv, const Quadrature &quad) {
    return regularize_impl(spec, psi, eps, iv, quad, true);
}

GridFunction regularize_singular_only(const DistributionSpec &spec, const Mollifier &psi,
                                      double eps, const Interval &iv, const Quadrature &quad) {
    return regularize_impl(spec, psi, eps, iv, quad, false);
}

} // namespace wavelab
