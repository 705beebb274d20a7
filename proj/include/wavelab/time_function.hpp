#pragma once

#include <functional>
#include <vector>

namespace wavelab {

/// Scalar function of time with its first two derivatives.
struct TimeFunction {
    std::function<double(double)> value;
    std::function<double(double)> d1;
    std::function<double(double)> d2;

    bool valid() const { return static_cast<bool>(value); }
};

TimeFunction time_zero();
TimeFunction time_const(double c);
TimeFunction time_sin(double omega);
TimeFunction time_cos(double omega);
TimeFunction time_poly(std::vector<double> coeffs); // sum_j c_j t^j

} // namespace wavelab
