#pragma once

#include <span>
#include <vector>

namespace wavelab {

/// Least-squares fit of log(norm) = logC - N log(eps) over a decreasing
/// eps grid. fitted_N > 0 means the net grows like eps^{-N} (moderate with
/// that N); fitted_N < 0 means it decays like eps^{|N|}.
struct FitReport {
    std::vector<double> eps_grid;
    std::vector<double> norm_values;
    double fitted_N = 0.0;
    double fitted_logC = 0.0;
    double r_squared = 1.0;
    bool identically_zero = false; // all norms zero: negligible of every order
};

FitReport loglog_fit(std::span<const double> eps_grid, std::span<const double> norm_values);

/// Default sweep grid eps_j = 2^{-j}, j = j_begin..j_end.
std::vector<double> pow2_grid(int j_begin, int j_end);

/// Half-octave grid eps_j = 2^{-j/2}, j = j_begin..j_end.
std::vector<double> pow2_half_grid(int j_begin, int j_end);

} // namespace wavelab
