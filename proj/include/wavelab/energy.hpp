#pragma once

#include "wavelab/galerkin.hpp"

#include <optional>
#include <span>
#include <vector>

namespace wavelab {

/// eta(t_n) = ||d'||^2 + sum lambda_k d_k^2 + d^T G d at every sample.
std::vector<double> eta_of_t(const Trajectory &traj, const GalerkinSystem &system);

/// xi(t_n) = ||f(t_n)||^2_{L2}.
std::vector<double> xi_of_t(const Trajectory &traj, const GalerkinSystem &system);

/// e^{t_n} (eta0 + int_0^{t_n} xi) with a trapezoidal integral. Rejects
/// negative xi entries.
std::vector<double> gronwall_bound(double eta0, std::span<const double> xi,
                                   std::span<const double> times);

/// Numerical check of the a-priori energy estimate. The left side combines
/// the sup of each energy norm over the sample times with the time-integrated
/// H^{-1} norm of the acceleration; the right side is the data bracket.
struct EnergyReport {
    std::vector<double> times;
    std::vector<double> eta;
    std::vector<double> xi;
    std::vector<double> gronwall;

    double sup_dtu = 0.0;     // sup ||d'||
    double sup_h10 = 0.0;     // sup ||u||_{H10}
    double sup_sqrtv = 0.0;   // sup ||sqrt(V) u||
    double utt_l2hm1 = 0.0;   // ||u_tt||_{L2 H^-1}
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    bool gronwall_pass = false;
    double gronwall_max_excess = 0.0; // max over n of eta - bound (<= tol when passing)
};

EnergyReport verify_energy_estimate(const Trajectory &traj, const GalerkinSystem &system,
                                    const GridFunction &u0, const GridFunction &u1);

/// || u ||_{M}^2 = int ( ||Delta u||^2 + ||u_tt||^2 + ||sqrt(V) u||^2 ) dt.
double m_norm(const Trajectory &traj, const GalerkinSystem &system);

/// M-norm of the difference of two trajectories on the same basis/time grid.
/// Each side's acceleration comes from its own system; the sqrt(V) weight is
/// the first system's.
double m_norm_difference(const Trajectory &ta, const GalerkinSystem &sa, const Trajectory &tb,
                         const GalerkinSystem &sb);

struct CorollaryReport {
    // Corollary ratios: LHS over data bracket, in statement order.
    double dtu_linf_ratio = 0.0;
    double u_linf_h10_ratio = 0.0;
    double sqrtv_linf_ratio = 0.0;
    double utt_l2hm1_ratio = 0.0;
    double lap_l2hm1_ratio = 0.0;
    // Differentiated-problem ratios (need the source's time derivative).
    bool differentiated_available = false;
    double utt_l2l2_ratio = 0.0;
    double lap_l2l2_ratio = 0.0;
    // L2(L2) distance between the differentiated-problem solve and the
    // integrator's velocity samples.
    double v_agreement = 0.0;

    std::vector<double> all_ratios() const;
};

CorollaryReport corollary_bounds(const Trajectory &traj, const GalerkinSystem &system,
                                 const GridFunction &u0, const GridFunction &u1);

/// Trapezoidal integral on a uniform grid.
double trapezoid(std::span<const double> values, double dt);

} // namespace wavelab
