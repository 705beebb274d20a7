#include "wavelab/energy.hpp"

#include "wavelab/kernels.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace wavelab {

double trapezoid(std::span<const double> values, double dt) {
    if (values.size() < 2)
        return 0.0;
    double s = 0.5 * (values.front() + values.back());
    for (std::size_t i = 1; i + 1 < values.size(); ++i)
        s += values[i];
    return s * dt;
}

std::vector<double> eta_of_t(const Trajectory &traj, const GalerkinSystem &system) {
    const auto &lam = system.basis().lambdas();
    const std::size_t m = lam.size();
    std::vector<double> eta(traj.times.size());
    for (std::size_t n = 0; n < traj.times.size(); ++n) {
        const auto &d = traj.d_samples[n];
        const auto &v = traj.dprime_samples[n];
        double kin = kernels::dot(v.data(), v.data(), m);
        double h10 = 0.0;
        for (std::size_t k = 0; k < m; ++k)
            h10 += lam[k] * d[k] * d[k];
        eta[n] = kin + h10 + system.potential_quadratic_form(d);
    }
    return eta;
}

std::vector<double> xi_of_t(const Trajectory &traj, const GalerkinSystem &system) {
    std::vector<double> xi(traj.times.size(), 0.0);
    if (system.source().is_zero())
        return xi;
    const auto &quad = system.basis().quad();
    std::vector<double> f(quad.size());
    for (std::size_t n = 0; n < traj.times.size(); ++n) {
        system.source().eval(traj.times[n], quad, f);
        xi[n] = kernels::dot3(quad.weights().data(), f.data(), f.data(), quad.size());
    }
    return xi;
}

std::vector<double> gronwall_bound(double eta0, std::span<const double> xi,
                                   std::span<const double> times) {
    if (xi.size() != times.size())
        throw std::invalid_argument("xi and times length mismatch");
    for (double x : xi)
        if (x < 0.0)
            throw std::invalid_argument("xi must be nonnegative");
    std::vector<double> bound(times.size());
    double integral = 0.0;
    for (std::size_t n = 0; n < times.size(); ++n) {
        if (n > 0)
            integral += 0.5 * (xi[n] + xi[n - 1]) * (times[n] - times[n - 1]);
        bound[n] = std::exp(times[n]) * (eta0 + integral);
    }
    return bound;
}

namespace {

struct TrajectoryNorms {
    double sup_dtu = 0.0, sup_h10 = 0.0, sup_sqrtv = 0.0;
    double utt_l2hm1 = 0.0; // ||u_tt||_{L2([0,T];H^-1)}
    double utt_l2l2 = 0.0;  // ||u_tt||_{L2([0,T];L2)}
    double lap_l2l2 = 0.0;  // ||Delta u||_{L2([0,T];L2)}
    double lap_l2hm1 = 0.0; // ||Delta u||_{L2([0,T];H^-1)} (= ||u||_{L2 H10} spectrally)
    double u_l2l2 = 0.0;
    double sqrtv_l2l2 = 0.0;
};

TrajectoryNorms trajectory_norms(const Trajectory &traj, const GalerkinSystem &system) {
    const auto &lam = system.basis().lambdas();
    const std::size_t m = lam.size();
    const std::size_t S = traj.times.size();
    std::vector<double> a(m), scratch;
    std::vector<double> hm1_sq(S), al2_sq(S), lap_sq(S), laphm1_sq(S), u_sq(S), vq_sq(S);
    TrajectoryNorms out;
    for (std::size_t n = 0; n < S; ++n) {
        const auto &d = traj.d_samples[n];
        const auto &v = traj.dprime_samples[n];
        system.accel(d, traj.times[n], a, scratch);
        double dtu = std::sqrt(kernels::dot(v.data(), v.data(), m));
        double h10 = 0.0, hm1 = 0.0, al2 = 0.0, lap = 0.0, ul2 = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            h10 += lam[k] * d[k] * d[k];
            hm1 += a[k] * a[k] / lam[k];
            al2 += a[k] * a[k];
            lap += lam[k] * lam[k] * d[k] * d[k];
            ul2 += d[k] * d[k];
        }
        const double vq = system.potential_quadratic_form(d);
        out.sup_dtu = std::max(out.sup_dtu, dtu);
        out.sup_h10 = std::max(out.sup_h10, std::sqrt(h10));
        out.sup_sqrtv = std::max(out.sup_sqrtv, std::sqrt(std::max(vq, 0.0)));
        hm1_sq[n] = hm1;
        al2_sq[n] = al2;
        lap_sq[n] = lap;
        laphm1_sq[n] = h10; // |Delta u|_{H^-1}^2 = sum lam^2 d^2 / lam
        u_sq[n] = ul2;
        vq_sq[n] = std::max(vq, 0.0);
    }
    out.utt_l2hm1 = std::sqrt(trapezoid(hm1_sq, traj.dt));
    out.utt_l2l2 = std::sqrt(trapezoid(al2_sq, traj.dt));
    out.lap_l2l2 = std::sqrt(trapezoid(lap_sq, traj.dt));
    out.lap_l2hm1 = std::sqrt(trapezoid(laphm1_sq, traj.dt));
    out.u_l2l2 = std::sqrt(trapezoid(u_sq, traj.dt));
    out.sqrtv_l2l2 = std::sqrt(trapezoid(vq_sq, traj.dt));
    return out;
}

double ratio_or_zero(double lhs, double rhs) {
    if (lhs == 0.0)
        return 0.0;
    if (rhs == 0.0)
        return std::numeric_limits<double>::infinity();
    return lhs / rhs;
}

struct DataNorms {
    double u0_l2, u0_h10, u0_h20, u1_l2, u1_h10;
    double f_l2l2, f_h1l2;
    double vmax, sqrt_vmax;
};

DataNorms data_norms(const Trajectory &traj, const GalerkinSystem &system, const GridFunction &u0,
                     const GridFunction &u1) {
    const auto &basis = system.basis();
    DataNorms dn{};
    dn.u0_l2 = grid_l2_norm(u0, basis.quad());
    dn.u1_l2 = grid_l2_norm(u1, basis.quad());
    SpectralCoeffs c0 = project(u0, basis);
    SpectralCoeffs c1 = project(u1, basis);
    dn.u0_h10 = spectral_norm(NormKind::H10, c0, basis);
    dn.u0_h20 = spectral_norm(NormKind::H20, c0, basis);
    dn.u1_h10 = spectral_norm(NormKind::H10, c1, basis);
    dn.vmax = system.potential_max();
    dn.sqrt_vmax = std::sqrt(dn.vmax);

    std::vector<double> xi = xi_of_t(traj, system);
    dn.f_l2l2 = std::sqrt(trapezoid(xi, traj.dt));
    dn.f_h1l2 = dn.f_l2l2;
    if (!system.source().is_zero() && system.source().has_time_derivative()) {
        const auto &quad = basis.quad();
        std::vector<double> ft(quad.size());
        std::vector<double> xidt(traj.times.size());
        for (std::size_t n = 0; n < traj.times.size(); ++n) {
            system.source().eval_dt(traj.times[n], quad, ft);
            xidt[n] = kernels::dot3(quad.weights().data(), ft.data(), ft.data(), quad.size());
        }
        dn.f_h1l2 = std::sqrt(trapezoid(xi, traj.dt) + trapezoid(xidt, traj.dt));
    }
    return dn;
}

} // namespace

EnergyReport verify_energy_estimate(const Trajectory &traj, const GalerkinSystem &system,
                                    const GridFunction &u0, const GridFunction &u1) {
    EnergyReport rep;
    rep.times = traj.times;
    rep.eta = eta_of_t(traj, system);
    rep.xi = xi_of_t(traj, system);
    rep.gronwall = gronwall_bound(rep.eta.front(), rep.xi, rep.times);

    rep.gronwall_pass = true;
    rep.gronwall_max_excess = -std::numeric_limits<double>::infinity();
    for (std::size_t n = 0; n < rep.times.size(); ++n) {
        const double slack = rep.gronwall[n] * (1.0 + 1e-6) + 1e-12;
        rep.gronwall_max_excess = std::max(rep.gronwall_max_excess, rep.eta[n] - rep.gronwall[n]);
        if (rep.eta[n] > slack)
            rep.gronwall_pass = false;
    }

    TrajectoryNorms tn = trajectory_norms(traj, system);
    DataNorms dn = data_norms(traj, system, u0, u1);
    rep.sup_dtu = tn.sup_dtu;
    rep.sup_h10 = tn.sup_h10;
    rep.sup_sqrtv = tn.sup_sqrtv;
    rep.utt_l2hm1 = tn.utt_l2hm1;
    rep.lhs = tn.sup_dtu + tn.sup_h10 + tn.sup_sqrtv + tn.utt_l2hm1;
    rep.rhs = dn.f_l2l2 + (dn.sqrt_vmax + dn.vmax) * dn.u0_l2 + dn.u0_h10 + dn.u1_l2;
    rep.ratio = ratio_or_zero(rep.lhs, rep.rhs);
    return rep;
}

double m_norm(const Trajectory &traj, const GalerkinSystem &system) {
    const auto &lam = system.basis().lambdas();
    const std::size_t m = lam.size();
    std::vector<double> a(m), scratch;
    std::vector<double> density(traj.times.size());
    for (std::size_t n = 0; n < traj.times.size(); ++n) {
        const auto &d = traj.d_samples[n];
        system.accel(d, traj.times[n], a, scratch);
        double s = 0.0;
        for (std::size_t k = 0; k < m; ++k)
            s += lam[k] * lam[k] * d[k] * d[k] + a[k] * a[k];
        density[n] = s + std::max(system.potential_quadratic_form(d), 0.0);
    }
    return std::sqrt(trapezoid(density, traj.dt));
}

double m_norm_difference(const Trajectory &ta, const GalerkinSystem &sa, const Trajectory &tb,
                         const GalerkinSystem &sb) {
    if (ta.times.size() != tb.times.size())
        throw std::invalid_argument("trajectories sampled on different time grids");
    const auto &lam = sa.basis().lambdas();
    const std::size_t m = lam.size();
    std::vector<double> aa(m), ab(m), diff(m), scratch;
    std::vector<double> density(ta.times.size());
    for (std::size_t n = 0; n < ta.times.size(); ++n) {
        const auto &da = ta.d_samples[n];
        const auto &db = tb.d_samples[n];
        sa.accel(da, ta.times[n], aa, scratch);
        sb.accel(db, tb.times[n], ab, scratch);
        double s = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            const double dd = da[k] - db[k];
            const double ddtt = aa[k] - ab[k];
            diff[k] = dd;
            s += lam[k] * lam[k] * dd * dd + ddtt * ddtt;
        }
        density[n] = s + std::max(sa.potential_quadratic_form(diff), 0.0);
    }
    return std::sqrt(trapezoid(density, ta.dt));
}

std::vector<double> CorollaryReport::all_ratios() const {
    std::vector<double> r = {dtu_linf_ratio, u_linf_h10_ratio, sqrtv_linf_ratio, utt_l2hm1_ratio,
                             lap_l2hm1_ratio};
    if (differentiated_available) {
        r.push_back(utt_l2l2_ratio);
        r.push_back(lap_l2l2_ratio);
    }
    return r;
}

CorollaryReport corollary_bounds(const Trajectory &traj, const GalerkinSystem &system,
                                 const GridFunction &u0, const GridFunction &u1) {
    CorollaryReport rep;
    TrajectoryNorms tn = trajectory_norms(traj, system);
    DataNorms dn = data_norms(traj, system, u0, u1);

    const double b1 = dn.f_l2l2 + dn.sqrt_vmax * dn.u0_l2 + dn.u0_h10 + dn.u1_l2;
    const double b4 = dn.f_l2l2 + dn.vmax * dn.u0_l2 + dn.u0_h10 + dn.u1_l2;
    const double b5 =
        (1.0 + dn.sqrt_vmax) * (dn.f_l2l2 + dn.u0_h10 + dn.u1_l2) + dn.vmax * dn.u0_l2;
    rep.dtu_linf_ratio = ratio_or_zero(tn.sup_dtu, b1);
    rep.u_linf_h10_ratio = ratio_or_zero(tn.sup_h10, b1);
    rep.sqrtv_linf_ratio = ratio_or_zero(tn.sup_sqrtv, b1);
    rep.utt_l2hm1_ratio = ratio_or_zero(tn.utt_l2hm1, b4);
    rep.lap_l2hm1_ratio = ratio_or_zero(tn.lap_l2hm1, b5);

    if (!system.source().has_time_derivative())
        return rep;
    rep.differentiated_available = true;

    const double b6 =
        dn.f_h1l2 + (1.0 + dn.sqrt_vmax) * dn.u1_h10 + (1.0 + dn.vmax) * dn.u0_h20;
    const double b7 = (1.0 + dn.sqrt_vmax) * (dn.f_h1l2 + dn.u0_h10 + dn.u1_h10) +
                      (1.0 + dn.vmax) * dn.u0_h20;
    rep.utt_l2l2_ratio = ratio_or_zero(tn.utt_l2l2, b6);
    rep.lap_l2l2_ratio = ratio_or_zero(tn.lap_l2l2, b7);

    // Differentiated problem: v = u_t solves the same equation with source
    // f_t and data v(0) = u1, v_t(0) = Delta u0 - V u0 + f(0).
    const auto &basis = system.basis();
    SpectralCoeffs v0 = project(u1, basis);
    SpectralCoeffs d0 = project(u0, basis);
    SpectralCoeffs v1 = accel(system, d0, 0.0);

    GalerkinSystem vsys(system.basis_ptr(), system.potential(),
                        system.source().time_derivative());
    Trajectory vtraj = integrate(vsys, v0, v1, traj.times.back(), traj.dt);

    // L2(L2) distance between v and the velocity samples of u.
    const std::size_t S = std::min(vtraj.times.size(), traj.times.size());
    std::vector<double> err_sq(S);
    for (std::size_t n = 0; n < S; ++n) {
        double s = 0.0;
        for (std::size_t k = 0; k < v0.size(); ++k) {
            const double e = vtraj.d_samples[n][k] - traj.dprime_samples[n][k];
            s += e * e;
        }
        err_sq[n] = s;
    }
    rep.v_agreement = std::sqrt(trapezoid(err_sq, traj.dt));
    return rep;
}

} // namespace wavelab
