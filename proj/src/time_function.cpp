#include "wavelab/time_function.hpp"

#include <cmath>

namespace wavelab {

TimeFunction time_zero() {
    auto z = [](double) { return 0.0; };
    return {z, z, z};
}

TimeFunction time_const(double c) {
    auto z = [](double) { return 0.0; };
    return {[c](double) { return c; }, z, z};
}

TimeFunction time_sin(double omega) {
    return {[omega](double t) { return std::sin(omega * t); },
            [omega](double t) { return omega * std::cos(omega * t); },
            [omega](double t) { return -omega * omega * std::sin(omega * t); }};
}

TimeFunction time_cos(double omega) {
    return {[omega](double t) { return std::cos(omega * t); },
            [omega](double t) { return -omega * std::sin(omega * t); },
            [omega](double t) { return -omega * omega * std::cos(omega * t); }};
}

TimeFunction time_poly(std::vector<double> coeffs) {
    auto horner = [](const std::vector<double> &c, double t) {
        double s = 0.0;
        for (std::size_t j = c.size(); j-- > 0;)
            s = s * t + c[j];
        return s;
    };
    auto derive = [](const std::vector<double> &c) {
        std::vector<double> d;
        for (std::size_t j = 1; j < c.size(); ++j)
            d.push_back(j * c[j]);
        return d;
    };
    std::vector<double> c1 = derive(coeffs);
    std::vector<double> c2 = derive(c1);
    return {[coeffs, horner](double t) { return horner(coeffs, t); },
            [c1, horner](double t) { return horner(c1, t); },
            [c2, horner](double t) { return horner(c2, t); }};
}

} // namespace wavelab
