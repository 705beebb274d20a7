#include "wavelab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace wavelab {

void gauss_legendre_reference(int order, std::vector<double> &nodes, std::vector<double> &weights) {
    if (order < 1)
        throw std::invalid_argument("quadrature order must be >= 1");
    const int n = order;
    nodes.assign(n, 0.0);
    weights.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15)
                break;
        }
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if (n % 2 == 1)
        nodes[n / 2] = 0.0;
}

Quadrature Quadrature::from_breakpoints(std::vector<double> breakpoints, int order) {
    if (breakpoints.size() < 2)
        throw std::invalid_argument("need at least two breakpoints");
    if (!std::is_sorted(breakpoints.begin(), breakpoints.end()))
        throw std::invalid_argument("breakpoints must be sorted");

    std::vector<double> xg, wg;
    gauss_legendre_reference(order, xg, wg);

    Quadrature q;
    q.length_ = breakpoints.back() - breakpoints.front();
    q.nodes_.reserve((breakpoints.size() - 1) * order);
    q.weights_.reserve((breakpoints.size() - 1) * order);
    for (std::size_t p = 0; p + 1 < breakpoints.size(); ++p) {
        const double a = breakpoints[p], b = breakpoints[p + 1];
        const double mid = 0.5 * (a + b), hw = 0.5 * (b - a);
        if (hw <= 0.0)
            throw std::invalid_argument("degenerate quadrature panel");
        for (int j = 0; j < order; ++j) {
            q.nodes_.push_back(mid + hw * xg[j]);
            q.weights_.push_back(hw * wg[j]);
        }
    }
    return q;
}

Quadrature Quadrature::build(const Interval &iv) {
    return build(iv, {}, 8);
}

Quadrature Quadrature::build(const Interval &iv, std::span<const SupportWindow> supports,
                             int min_panels_per_support) {
    if (iv.length <= 0.0)
        throw std::invalid_argument("interval length must be positive");
    if (iv.quad_panels < 1 || iv.quad_order < 1)
        throw std::invalid_argument("quadrature resolution must be positive");

    std::vector<double> breaks;
    breaks.reserve(iv.quad_panels + 1);
    for (int p = 0; p <= iv.quad_panels; ++p)
        breaks.push_back(iv.length * p / iv.quad_panels);

    for (const auto &s : supports) {
        if (s.eps <= 0.0)
            continue;
        const double lo = std::max(s.x0 - s.eps, 0.0);
        const double hi = std::min(s.x0 + s.eps, iv.length);
        if (hi <= lo)
            continue;
        const int sub = std::max(min_panels_per_support, 4);
        for (int j = 0; j <= sub; ++j)
            breaks.push_back(lo + (hi - lo) * j / sub);
    }

    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end(),
                             [&](double a, double b) { return b - a < 1e-15 * iv.length; }),
                 breaks.end());
    breaks.front() = 0.0;
    breaks.back() = iv.length;
    return from_breakpoints(std::move(breaks), iv.quad_order);
}

double Quadrature::integrate(std::span<const double> values) const {
    if (values.size() != nodes_.size())
        throw std::invalid_argument("grid function length does not match quadrature");
    double s = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        s += weights_[i] * values[i];
    return s;
}

} // namespace wavelab
