#pragma once

#include "wavelab/energy.hpp"
#include "wavelab/galerkin.hpp"
#include "wavelab/time_function.hpp"

#include <functional>

namespace wavelab {

/// Dirichlet boundary values g0(t) at x = 0 and g1(t) at x = L, with first
/// and second time derivatives.
struct BoundaryData {
    TimeFunction g0;
    TimeFunction g1;
};

BoundaryData zero_boundary();

struct ConsistencyReport {
    double res_u0_left = 0.0;  // |g0(0) - u0(0)|
    double res_u0_right = 0.0; // |g1(0) - u0(L)|
    double res_u1_left = 0.0;  // |g0'(0) - u1(0)|
    double res_u1_right = 0.0; // |g1'(0) - u1(L)|
    bool pass = false;
};

/// Compatibility of the boundary data with the endpoint traces of the
/// initial data (pass iff all residuals <= 1e-10).
ConsistencyReport check_consistency(const std::function<double(double)> &u0,
                                    const std::function<double(double)> &u1,
                                    const BoundaryData &bdata, double length);

/// Linear-in-x lifting G(t,x) = g0(t)(1 - x/L) + g1(t) x/L. Laplacian-free,
/// with closed-form Fourier-sine coefficients of the two hat profiles.
class LiftedProblem {
public:
    LiftedProblem(BoundaryData bdata, Interval iv);

    double G(double t, double x) const;
    double Gt(double t, double x) const;
    double Gtt(double t, double x) const;

    /// (1 - x/L, w_k) = sqrt(2L)/(k pi)
    double coeff_left(int k) const;
    /// (x/L, w_k) = sqrt(2L) (-1)^{k+1} / (k pi)
    double coeff_right(int k) const;

    /// Coefficients of G(t,.) / Gt(t,.) against the first m modes.
    void project_g(double t, std::span<double> out) const;
    void project_gt(double t, std::span<double> out) const;

    const BoundaryData &data() const { return bdata_; }
    const Interval &interval() const { return iv_; }

private:
    BoundaryData bdata_;
    Interval iv_;
};

LiftedProblem build_lifting(const BoundaryData &bdata, const Interval &iv);

/// Result of a nonhomogeneous solve: u* (homogeneous-boundary trajectory of
/// the modified problem), the lifting, and the a-priori estimate bookkeeping.
struct LiftedSolution {
    Trajectory ustar;
    GalerkinSystem system; // modified system (source f - Gtt - V G)
    LiftedProblem lift;
    ConsistencyReport consistency;
    double mnorm_ustar = 0.0;
    double rhs_bracket = 0.0; // right side of the a-priori estimate
    double ratio = 0.0;       // mnorm_ustar / rhs_bracket
    double g_f_norm = 0.0;    // H^2-in-time norm of the boundary pair

    /// utilde(t_n, x) = sum_k d_k(t_n) w_k(x) + G(t_n, x).
    double utilde_at(std::size_t n, double x) const;
};

/// Solve the lifted system: u* has data u0 - G(0,.), u1 - Gt(0,.) and source
/// f - Gtt - V G; rejects inconsistent boundary data. u0 and u1 are
/// pointwise functions so the endpoint traces exist.
LiftedSolution solve_nonhomogeneous(const GridFunction &v, const SourceTerm &f,
                                    const std::function<double(double)> &u0,
                                    const std::function<double(double)> &u1,
                                    const BoundaryData &bdata, BasisPtr basis, double T, double dt);

} // namespace wavelab
