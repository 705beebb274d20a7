#pragma once

#include <span>
#include <vector>

namespace wavelab {

/// Domain (0, L) with its composite Gauss-Legendre quadrature resolution.
struct Interval {
    double length = 0.0;
    int quad_panels = 64;
    int quad_order = 8;
};

/// Half-width window [x0 - eps, x0 + eps] that the quadrature must resolve
/// (mollifier supports).
struct SupportWindow {
    double x0 = 0.0;
    double eps = 0.0;
};

/// Nodes and weights of a composite Gauss-Legendre rule on (0, L).
/// Weights are positive and sum to L.
class Quadrature {
public:
    Quadrature() = default;

    /// Uniform panels per the interval's resolution.
    static Quadrature build(const Interval &iv);

    /// Uniform base panels plus subdivided panels over each support window,
    /// so that at least `min_panels_per_support` panels cover [x0-eps, x0+eps].
    static Quadrature build(const Interval &iv, std::span<const SupportWindow> supports,
                            int min_panels_per_support = 8);

    /// Arbitrary sorted breakpoints (first = 0, last = L), `order` points per panel.
    static Quadrature from_breakpoints(std::vector<double> breakpoints, int order);

    std::size_t size() const { return nodes_.size(); }
    double length() const { return length_; }
    const std::vector<double> &nodes() const { return nodes_; }
    const std::vector<double> &weights() const { return weights_; }

    /// sum_i w_i v_i
    double integrate(std::span<const double> values) const;

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
    double length_ = 0.0;
};

/// Gauss-Legendre nodes/weights on [-1, 1] (Newton iteration on P_n).
void gauss_legendre_reference(int order, std::vector<double> &nodes, std::vector<double> &weights);

} // namespace wavelab
