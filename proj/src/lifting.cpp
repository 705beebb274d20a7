#include "wavelab/lifting.hpp"

#include "wavelab/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace wavelab {

BoundaryData zero_boundary() { return {time_zero(), time_zero()}; }

ConsistencyReport check_consistency(const std::function<double(double)> &u0,
                                    const std::function<double(double)> &u1,
                                    const BoundaryData &bdata, double length) {
    ConsistencyReport rep;
    rep.res_u0_left = std::abs(bdata.g0.value(0.0) - u0(0.0));
    rep.res_u0_right = std::abs(bdata.g1.value(0.0) - u0(length));
    rep.res_u1_left = std::abs(bdata.g0.d1(0.0) - u1(0.0));
    rep.res_u1_right = std::abs(bdata.g1.d1(0.0) - u1(length));
    rep.pass = rep.res_u0_left <= 1e-10 && rep.res_u0_right <= 1e-10 &&
               rep.res_u1_left <= 1e-10 && rep.res_u1_right <= 1e-10;
    return rep;
}

LiftedProblem::LiftedProblem(BoundaryData bdata, Interval iv)
    : bdata_(std::move(bdata)), iv_(iv) {}

double LiftedProblem::G(double t, double x) const {
    const double s = x / iv_.length;
    return bdata_.g0.value(t) * (1.0 - s) + bdata_.g1.value(t) * s;
}

double LiftedProblem::Gt(double t, double x) const {
    const double s = x / iv_.length;
    return bdata_.g0.d1(t) * (1.0 - s) + bdata_.g1.d1(t) * s;
}

double LiftedProblem::Gtt(double t, double x) const {
    const double s = x / iv_.length;
    return bdata_.g0.d2(t) * (1.0 - s) + bdata_.g1.d2(t) * s;
}

double LiftedProblem::coeff_left(int k) const {
    return std::sqrt(2.0 * iv_.length) / (k * std::numbers::pi);
}

double LiftedProblem::coeff_right(int k) const {
    const double sign = (k % 2 == 1) ? 1.0 : -1.0;
    return sign * std::sqrt(2.0 * iv_.length) / (k * std::numbers::pi);
}

void LiftedProblem::project_g(double t, std::span<double> out) const {
    const double a = bdata_.g0.value(t), b = bdata_.g1.value(t);
    for (std::size_t k = 1; k <= out.size(); ++k)
        out[k - 1] = a * coeff_left(int(k)) + b * coeff_right(int(k));
}

void LiftedProblem::project_gt(double t, std::span<double> out) const {
    const double a = bdata_.g0.d1(t), b = bdata_.g1.d1(t);
    for (std::size_t k = 1; k <= out.size(); ++k)
        out[k - 1] = a * coeff_left(int(k)) + b * coeff_right(int(k));
}

LiftedProblem build_lifting(const BoundaryData &bdata, const Interval &iv) {
    return LiftedProblem(bdata, iv);
}

double LiftedSolution::utilde_at(std::size_t n, double x) const {
    return reconstruct_at(ustar.d_samples[n], system.basis(), x) + lift.G(ustar.times[n], x);
}

LiftedSolution solve_nonhomogeneous(const GridFunction &v, const SourceTerm &f,
                                    const std::function<double(double)> &u0,
                                    const std::function<double(double)> &u1,
                                    const BoundaryData &bdata, BasisPtr basis, double T,
                                    double dt) {
    const Interval iv = basis->interval();
    ConsistencyReport consistency = check_consistency(u0, u1, bdata, iv.length);
    if (!consistency.pass)
        throw ConsistencyError(
            "boundary data incompatible with the initial traces; residuals " +
            std::to_string(consistency.res_u0_left) + ", " +
            std::to_string(consistency.res_u0_right) + ", " +
            std::to_string(consistency.res_u1_left) + ", " +
            std::to_string(consistency.res_u1_right));

    LiftedProblem lift(bdata, iv);
    const auto &quad = basis->quad();
    const std::size_t n = quad.size();
    const double L = iv.length;

    // Node profiles of the two hats and their V-weighted products.
    GridFunction hat_l(n), hat_r(n), v_hat_l(n), v_hat_r(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = quad.nodes()[i] / L;
        hat_l[i] = 1.0 - s;
        hat_r[i] = s;
        v_hat_l[i] = v[i] * hat_l[i];
        v_hat_r[i] = v[i] * hat_r[i];
    }

    // Modified source f* = f - Gtt - V G (Delta G = 0).
    const TimeFunction g0 = bdata.g0, g1 = bdata.g1;
    auto fill = [f, g0, g1, hat_l, hat_r, v_hat_l, v_hat_r](double t, const Quadrature &q,
                                                            std::span<double> out) {
        if (f.is_zero())
            std::fill(out.begin(), out.end(), 0.0);
        else
            f.eval(t, q, out);
        const double a2 = g0.d2(t), b2 = g1.d2(t);
        const double a0 = g0.value(t), b0 = g1.value(t);
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] -= a2 * hat_l[i] + b2 * hat_r[i] + a0 * v_hat_l[i] + b0 * v_hat_r[i];
    };
    SourceTerm fstar = SourceTerm::node_filler(fill);

    // Modified data: u0 - G(0,.), u1 - Gt(0,.); the hats are projected with
    // their closed-form sine coefficients to avoid Gibbs quadrature error.
    GridFunction u0_grid = sample(u0, quad);
    GridFunction u1_grid = sample(u1, quad);
    SpectralCoeffs d0 = project(u0_grid, *basis);
    SpectralCoeffs d1 = project(u1_grid, *basis);
    const int m = basis->modes();
    std::vector<double> gproj(m);
    lift.project_g(0.0, gproj);
    for (int k = 0; k < m; ++k)
        d0[k] -= gproj[k];
    lift.project_gt(0.0, gproj);
    for (int k = 0; k < m; ++k)
        d1[k] -= gproj[k];

    GalerkinSystem system(basis, v, std::move(fstar));
    Trajectory traj = integrate(system, d0, d1, T, dt);

    LiftedSolution sol{std::move(traj), std::move(system), std::move(lift), consistency};
    sol.mnorm_ustar = m_norm(sol.ustar, sol.system);

    // A-priori bracket from the original data norms:
    // (1 + Vmax^{1/2}) (|f|_{H1 L2} + |u0|_{H10} + |u1|_{H10})
    //   + (1 + Vmax) |u0|_{H20} + |g|_F.
    const double vmax = sol.system.potential_max();
    SpectralCoeffs c0 = project(u0_grid, *basis);
    SpectralCoeffs c1 = project(u1_grid, *basis);
    const double u0_h10 = spectral_norm(NormKind::H10, c0, *basis);
    const double u0_h20 = spectral_norm(NormKind::H20, c0, *basis);
    const double u1_h10 = spectral_norm(NormKind::H10, c1, *basis);

    std::vector<double> fsq(sol.ustar.times.size(), 0.0);
    if (!f.is_zero()) {
        std::vector<double> buf(quad.size());
        const bool has_dt = f.has_time_derivative();
        for (std::size_t i = 0; i < sol.ustar.times.size(); ++i) {
            f.eval(sol.ustar.times[i], quad, buf);
            double s = 0.0;
            for (std::size_t j = 0; j < buf.size(); ++j)
                s += quad.weights()[j] * buf[j] * buf[j];
            if (has_dt) {
                f.eval_dt(sol.ustar.times[i], quad, buf);
                for (std::size_t j = 0; j < buf.size(); ++j)
                    s += quad.weights()[j] * buf[j] * buf[j];
            }
            fsq[i] = s;
        }
    }
    const double f_h1l2 = std::sqrt(trapezoid(fsq, sol.ustar.dt));

    std::vector<double> gsq(sol.ustar.times.size());
    for (std::size_t i = 0; i < sol.ustar.times.size(); ++i) {
        const double t = sol.ustar.times[i];
        const double a = bdata.g0.value(t), a1 = bdata.g0.d1(t), a2 = bdata.g0.d2(t);
        const double b = bdata.g1.value(t), b1 = bdata.g1.d1(t), b2 = bdata.g1.d2(t);
        gsq[i] = a * a + a1 * a1 + a2 * a2 + b * b + b1 * b1 + b2 * b2;
    }
    sol.g_f_norm = std::sqrt(trapezoid(gsq, sol.ustar.dt));

    sol.rhs_bracket = (1.0 + std::sqrt(vmax)) * (f_h1l2 + u0_h10 + u1_h10) +
                      (1.0 + vmax) * u0_h20 + sol.g_f_norm;
    sol.ratio = sol.mnorm_ustar == 0.0
                    ? 0.0
                    : (sol.rhs_bracket == 0.0 ? std::numeric_limits<double>::infinity()
                                              : sol.mnorm_ustar / sol.rhs_bracket);
    return sol;
}

} // namespace wavelab
