#include "wavelab/galerkin.hpp"

#include "wavelab/errors.hpp"
#include "wavelab/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace wavelab {

SourceTerm SourceTerm::pointwise(std::function<double(double, double)> f,
                                 std::function<double(double, double)> df_dt) {
    SourceTerm s;
    s.kind_ = Kind::Pointwise;
    s.f_ = std::move(f);
    s.df_ = std::move(df_dt);
    return s;
}

SourceTerm SourceTerm::separable(TimeFunction a, GridFunction sgrid) {
    SourceTerm s;
    s.kind_ = Kind::Separable;
    s.a_ = std::move(a);
    s.s_ = std::move(sgrid);
    return s;
}

SourceTerm SourceTerm::node_filler(NodeFill fill, NodeFill fill_dt) {
    SourceTerm s;
    s.kind_ = Kind::NodeFiller;
    s.fill_ = std::move(fill);
    s.fill_dt_ = std::move(fill_dt);
    return s;
}

bool SourceTerm::has_time_derivative() const {
    switch (kind_) {
    case Kind::Zero:
        return true;
    case Kind::Pointwise:
        return static_cast<bool>(df_);
    case Kind::Separable:
        return static_cast<bool>(a_.d1);
    case Kind::NodeFiller:
        return static_cast<bool>(fill_dt_);
    }
    return false;
}

SourceTerm SourceTerm::time_derivative() const {
    if (!has_time_derivative())
        throw std::invalid_argument("source has no time-derivative provider");
    switch (kind_) {
    case Kind::Zero:
        return zero();
    case Kind::Pointwise:
        return pointwise(df_);
    case Kind::Separable:
        return separable(TimeFunction{a_.d1, a_.d2, {}}, s_);
    case Kind::NodeFiller:
        return node_filler(fill_dt_);
    }
    return zero();
}

void SourceTerm::eval(double t, const Quadrature &quad, std::span<double> out) const {
    switch (kind_) {
    case Kind::Zero:
        std::fill(out.begin(), out.end(), 0.0);
        return;
    case Kind::Pointwise:
        for (std::size_t i = 0; i < quad.size(); ++i)
            out[i] = f_(t, quad.nodes()[i]);
        return;
    case Kind::Separable: {
        if (s_.size() != quad.size())
            throw std::invalid_argument("separable source sampled on a different quadrature");
        const double a = a_.value(t);
        for (std::size_t i = 0; i < quad.size(); ++i)
            out[i] = a * s_[i];
        return;
    }
    case Kind::NodeFiller:
        fill_(t, quad, out);
        return;
    }
}

void SourceTerm::eval_dt(double t, const Quadrature &quad, std::span<double> out) const {
    if (!has_time_derivative())
        throw std::invalid_argument("source has no time-derivative provider");
    switch (kind_) {
    case Kind::Zero:
        std::fill(out.begin(), out.end(), 0.0);
        return;
    case Kind::Pointwise:
        for (std::size_t i = 0; i < quad.size(); ++i)
            out[i] = df_(t, quad.nodes()[i]);
        return;
    case Kind::Separable: {
        const double a = a_.d1(t);
        for (std::size_t i = 0; i < quad.size(); ++i)
            out[i] = a * s_[i];
        return;
    }
    case Kind::NodeFiller:
        fill_dt_(t, quad, out);
        return;
    }
}

GalerkinSystem::GalerkinSystem(BasisPtr basis, GridFunction v, SourceTerm f)
    : basis_(std::move(basis)), v_(std::move(v)), source_(std::move(f)) {
    const auto &quad = basis_->quad();
    const std::size_t n = quad.size();
    const int m = basis_->modes();
    if (v_.size() != n)
        throw std::invalid_argument("potential sampled on a different quadrature");

    for (std::size_t i = 0; i < n; ++i) {
        if (v_[i] < -1e-12)
            throw PotentialSignError(v_[i], quad.nodes()[i]);
        v_max_ = std::max(v_max_, std::abs(v_[i]));
    }

    // g[l][k] = sum_i w_i V_i w_l(x_i) w_k(x_i); fill the upper triangle, mirror.
    g_.assign(std::size_t(m) * m, 0.0);
    std::vector<double> wv(n), p(n);
    kernels::mul(quad.weights().data(), v_.data(), wv.data(), n);
    for (int l = 1; l <= m; ++l) {
        kernels::mul(wv.data(), basis_->mode_row(l), p.data(), n);
        for (int k = l; k <= m; ++k) {
            const double val = kernels::dot(p.data(), basis_->mode_row(k), n);
            g_[std::size_t(l - 1) * m + (k - 1)] = val;
            g_[std::size_t(k - 1) * m + (l - 1)] = val;
        }
    }
}

void GalerkinSystem::load(double t, std::span<double> out, std::vector<double> &scratch) const {
    const auto &quad = basis_->quad();
    const int m = basis_->modes();
    if (source_.is_zero()) {
        std::fill(out.begin(), out.end(), 0.0);
        return;
    }
    scratch.resize(quad.size());
    source_.eval(t, quad, scratch);
    for (int k = 1; k <= m; ++k)
        out[k - 1] =
            kernels::dot3(quad.weights().data(), scratch.data(), basis_->mode_row(k), quad.size());
}

void GalerkinSystem::load_dt(double t, std::span<double> out, std::vector<double> &scratch) const {
    const auto &quad = basis_->quad();
    const int m = basis_->modes();
    if (source_.is_zero()) {
        std::fill(out.begin(), out.end(), 0.0);
        return;
    }
    scratch.resize(quad.size());
    source_.eval_dt(t, quad, scratch);
    for (int k = 1; k <= m; ++k)
        out[k - 1] =
            kernels::dot3(quad.weights().data(), scratch.data(), basis_->mode_row(k), quad.size());
}

void GalerkinSystem::accel(std::span<const double> d, double t, std::span<double> out,
                           std::vector<double> &scratch) const {
    const int m = basis_->modes();
    if (static_cast<int>(d.size()) != m)
        throw std::invalid_argument("coefficient length does not match system");
    load(t, out, scratch);
    std::vector<double> gd(m);
    kernels::gemv(g_.data(), d.data(), gd.data(), m, m);
    const auto &lam = basis_->lambdas();
    for (int k = 0; k < m; ++k)
        out[k] -= lam[k] * d[k] + gd[k];
}

double GalerkinSystem::potential_quadratic_form(std::span<const double> x) const {
    const int m = basis_->modes();
    std::vector<double> gx(m);
    kernels::gemv(g_.data(), x.data(), gx.data(), m, m);
    return kernels::dot(x.data(), gx.data(), m);
}

double GalerkinSystem::max_stable_dt() const {
    return 0.5 / std::sqrt(basis_->lambdas().back() + v_max_);
}

GalerkinSystem assemble_system(const GridFunction &v, SourceTerm f, BasisPtr basis) {
    return GalerkinSystem(std::move(basis), v, std::move(f));
}

SpectralCoeffs accel(const GalerkinSystem &system, const SpectralCoeffs &d, double t) {
    SpectralCoeffs out(d.size());
    std::vector<double> scratch;
    system.accel(d, t, out, scratch);
    return out;
}

Trajectory integrate(const GalerkinSystem &system, const SpectralCoeffs &d0,
                     const SpectralCoeffs &d1, double T, double dt) {
    const int m = system.basis().modes();
    if (static_cast<int>(d0.size()) != m || static_cast<int>(d1.size()) != m)
        throw std::invalid_argument("initial coefficient length does not match system");
    if (T <= 0.0)
        throw std::invalid_argument("final time must be positive");
    if (dt <= 0.0)
        throw std::invalid_argument("time step must be positive");
    const double dt_max = system.max_stable_dt();
    if (dt > dt_max)
        throw StepSizeError(dt, dt_max,
                            "dt = " + std::to_string(dt) + " exceeds the stability guard " +
                                std::to_string(dt_max) + "; reduce the step");

    const std::size_t steps = std::max<std::size_t>(1, std::llround(T / dt));
    const double h = T / double(steps);

    Trajectory traj;
    traj.dt = h;
    traj.times.resize(steps + 1);
    traj.d_samples.assign(steps + 1, SpectralCoeffs(m));
    traj.dprime_samples.assign(steps + 1, SpectralCoeffs(m));
    traj.d_samples[0] = d0;
    traj.dprime_samples[0] = d1;

    std::vector<double> a(m), a_next(m), scratch;
    std::vector<double> d = d0, v = d1;
    system.accel(d, 0.0, a, scratch);
    for (std::size_t n = 0; n < steps; ++n) {
        traj.times[n] = h * double(n);
        for (int k = 0; k < m; ++k)
            d[k] += h * v[k] + 0.5 * h * h * a[k];
        const double t_next = h * double(n + 1);
        system.accel(d, t_next, a_next, scratch);
        for (int k = 0; k < m; ++k)
            v[k] += 0.5 * h * (a[k] + a_next[k]);
        a.swap(a_next);
        traj.d_samples[n + 1] = d;
        traj.dprime_samples[n + 1] = v;
    }
    traj.times[steps] = T;
    return traj;
}

Trajectory solve_ivp(const GridFunction &v, SourceTerm f, const GridFunction &u0,
                     const GridFunction &u1, BasisPtr basis, double T, double dt) {
    SpectralCoeffs d0 = project(u0, *basis);
    SpectralCoeffs d1 = project(u1, *basis);
    GalerkinSystem system(std::move(basis), v, std::move(f));
    return integrate(system, d0, d1, T, dt);
}

} // namespace wavelab
