// Dimensional constants: unit-ball volumes and sphere surface areas.
#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace mixvol {

/// Volume kappa_m of the unit ball in R^m.  kappa_0 = 1.
/// Values for m <= 16 come from a precomputed table (cross-checked in the
/// test suite against the recurrence kappa_m = kappa_{m-2} * 2*pi/m);
/// larger m falls back to the Gamma-function formula.
inline double unit_ball_volume(int m) {
    if (m < 0) throw std::invalid_argument("unit_ball_volume: negative dimension");
    static const std::array<double, 17> table = [] {
        std::array<double, 17> t{};
        for (int i = 0; i <= 16; ++i)
            t[static_cast<std::size_t>(i)] =
                std::pow(M_PI, i / 2.0) / std::tgamma(i / 2.0 + 1.0);
        return t;
    }();
    if (m <= 16) return table[static_cast<std::size_t>(m)];
    return std::pow(M_PI, m / 2.0) / std::tgamma(m / 2.0 + 1.0);
}

/// Surface area H^{n-1}(S^{n-1}) = n * kappa_n of the unit sphere in R^n.
/// sphere_area(1) = 2 (counting measure of {-1, +1}).
inline double sphere_area(int n) {
    if (n < 1) throw std::invalid_argument("sphere_area: dimension must be >= 1");
    return n * unit_ball_volume(n);
}

}  // namespace mixvol
