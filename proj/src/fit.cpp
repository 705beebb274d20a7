#include "wavelab/fit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wavelab {

FitReport loglog_fit(std::span<const double> eps_grid, std::span<const double> norm_values) {
    if (eps_grid.size() != norm_values.size())
        throw std::invalid_argument("eps grid and norm values length mismatch");
    if (eps_grid.size() < 3)
        throw std::invalid_argument("log-log fit needs at least 3 grid points");
    for (std::size_t i = 0; i < eps_grid.size(); ++i) {
        if (eps_grid[i] <= 0.0 || eps_grid[i] > 1.0)
            throw std::invalid_argument("eps values must lie in (0, 1]");
        if (i > 0 && eps_grid[i] >= eps_grid[i - 1])
            throw std::invalid_argument("eps grid must be strictly decreasing");
        if (norm_values[i] < 0.0)
            throw std::invalid_argument("norms must be nonnegative");
    }

    FitReport rep;
    rep.eps_grid.assign(eps_grid.begin(), eps_grid.end());
    rep.norm_values.assign(norm_values.begin(), norm_values.end());

    const bool all_zero = std::all_of(norm_values.begin(), norm_values.end(),
                                      [](double v) { return v == 0.0; });
    if (all_zero) {
        rep.identically_zero = true;
        rep.fitted_N = 0.0;
        rep.fitted_logC = -std::numeric_limits<double>::infinity();
        rep.r_squared = 1.0;
        return rep;
    }
    if (std::any_of(norm_values.begin(), norm_values.end(), [](double v) { return v == 0.0; }))
        throw std::invalid_argument("mixed zero and nonzero norms cannot be fit");

    const std::size_t n = eps_grid.size();
    double sx = 0.0, sy = 0.0;
    std::vector<double> lx(n), ly(n);
    for (std::size_t i = 0; i < n; ++i) {
        lx[i] = std::log(eps_grid[i]);
        ly[i] = std::log(norm_values[i]);
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    const double slope = sxy / sxx;
    rep.fitted_N = -slope;
    rep.fitted_logC = my - slope * mx;

    double ss_res = 0.0, ss_tot = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double pred = rep.fitted_logC + slope * lx[i];
        ss_res += (ly[i] - pred) * (ly[i] - pred);
        ss_tot += (ly[i] - my) * (ly[i] - my);
    }
    rep.r_squared = ss_tot == 0.0 ? 1.0 : std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
    return rep;
}

std::vector<double> pow2_grid(int j_begin, int j_end) {
    std::vector<double> g;
    for (int j = j_begin; j <= j_end; ++j)
        g.push_back(std::pow(2.0, -j));
    return g;
}

std::vector<double> pow2_half_grid(int j_begin, int j_end) {
    std::vector<double> g;
    for (int j = j_begin; j <= j_end; ++j)
        g.push_back(std::pow(2.0, -0.5 * j));
    return g;
}

} // namespace wavelab
