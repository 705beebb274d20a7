#pragma once

#include "wavelab/spectral.hpp"
#include "wavelab/time_function.hpp"

#include <functional>
#include <span>
#include <vector>

namespace wavelab {

/// Right-hand side f(t, x), evaluated at the quadrature nodes on demand.
/// Evaluation happens at every integrator substep; nothing is cached.
class SourceTerm {
public:
    SourceTerm() = default;

    static SourceTerm zero() { return {}; }

    /// General pointwise form; df_dt may be empty if the time derivative is
    /// unavailable (Theorem-3.5-style checks are then skipped).
    static SourceTerm pointwise(std::function<double(double, double)> f,
                                std::function<double(double, double)> df_dt = {});

    /// Separable form a(t) * s(x) with s pre-sampled at the quadrature nodes.
    static SourceTerm separable(TimeFunction a, GridFunction s);

    /// Node-filling form: the callback writes f(t, .) at the quadrature nodes
    /// directly (used for composed sources like the lifted problem's).
    using NodeFill = std::function<void(double, const Quadrature &, std::span<double>)>;
    static SourceTerm node_filler(NodeFill fill, NodeFill fill_dt = {});

    bool is_zero() const { return kind_ == Kind::Zero; }
    bool has_time_derivative() const;

    /// Source representing f_t. Requires has_time_derivative().
    SourceTerm time_derivative() const;

    void eval(double t, const Quadrature &quad, std::span<double> out) const;
    void eval_dt(double t, const Quadrature &quad, std::span<double> out) const;

private:
    enum class Kind { Zero, Pointwise, Separable, NodeFiller };
    Kind kind_ = Kind::Zero;
    std::function<double(double, double)> f_;
    std::function<double(double, double)> df_;
    TimeFunction a_;
    GridFunction s_;
    NodeFill fill_;
    NodeFill fill_dt_;
};

/// The Galerkin ODE system d'' + (E + G) d = f(t):
/// E = diag(lambda), G[l][k] = (V w_l, w_k), f_k(t) = (f(t,.), w_k).
class GalerkinSystem {
public:
    GalerkinSystem(BasisPtr basis, GridFunction v, SourceTerm f);

    const EigenBasis &basis() const { return *basis_; }
    BasisPtr basis_ptr() const { return basis_; }
    const GridFunction &potential() const { return v_; }
    const std::vector<double> &potential_matrix() const { return g_; }
    const SourceTerm &source() const { return source_; }
    double potential_max() const { return v_max_; }

    /// f_k(t) by quadrature into out (size m).
    void load(double t, std::span<double> out, std::vector<double> &scratch) const;
    void load_dt(double t, std::span<double> out, std::vector<double> &scratch) const;

    /// out_k = f_k(t) - lambda_k d_k - (G d)_k
    void accel(std::span<const double> d, double t, std::span<double> out,
               std::vector<double> &scratch) const;

    /// x^T G x = ||sqrt(V) u||^2 for u with coefficients x.
    double potential_quadratic_form(std::span<const double> x) const;

    /// Largest stable step under the guard dt <= 0.5 / sqrt(lambda_max + ||V||_inf).
    double max_stable_dt() const;

private:
    BasisPtr basis_;
    GridFunction v_;
    SourceTerm source_;
    std::vector<double> g_; // m x m row-major, symmetric
    double v_max_ = 0.0;
};

GalerkinSystem assemble_system(const GridFunction &v, SourceTerm f, BasisPtr basis);

/// Convenience single-call acceleration (allocates scratch).
SpectralCoeffs accel(const GalerkinSystem &system, const SpectralCoeffs &d, double t);

/// Time samples of the Galerkin coefficients and their velocities.
struct Trajectory {
    double dt = 0.0;
    std::vector<double> times;
    std::vector<SpectralCoeffs> d_samples;
    std::vector<SpectralCoeffs> dprime_samples;

    std::size_t steps() const { return times.empty() ? 0 : times.size() - 1; }
};

/// Stoermer-Verlet integration from (d0, d1) up to time T. The step count is
/// round(T/dt) so the grid lands exactly on T; the rounded step is stored in
/// the result. Throws StepSizeError when dt violates the stability guard.
Trajectory integrate(const GalerkinSystem &system, const SpectralCoeffs &d0,
                     const SpectralCoeffs &d1, double T, double dt);

/// Project data, assemble, integrate.
Trajectory solve_ivp(const GridFunction &v, SourceTerm f, const GridFunction &u0,
                     const GridFunction &u1, BasisPtr basis, double T, double dt);

} // namespace wavelab
