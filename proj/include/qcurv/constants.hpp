#pragma once

#include <cmath>
#include <numbers>

#include "qcurv/errors.hpp"

namespace qcurv {

// Normalization conventions used throughout (all even n):
//
//   (-Delta)^{n/2} u            = 2 Q_g e^{n u}
//   (-Delta)^{n/2} log(1/|x|)   = 2 c_n delta_0
//   c_n                         = 2^{n-2} ((n-2)/2)! pi^{n/2}
//
// c_2 = pi (so 2 c_2 = 2 pi, the classical planar fundamental-solution
// constant) and c_4 = 4 pi^2. Under this convention the Gauss-Bonnet count
// for the round sphere is (1/c_n) * total Q = 2 = chi(S^n), and in dimension
// two Q = K/2.

inline void require_even_dimension(int n) {
    if (n < 2 || n % 2 != 0)
        throw invalid_dimension_error("dimension must be even and >= 2, got " + std::to_string(n));
}

inline double factorial_d(int m) {
    double f = 1.0;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
}

// c_n = 2^{n-2} ((n-2)/2)! pi^{n/2}
inline double c_n(int n) {
    require_even_dimension(n);
    return std::pow(2.0, n - 2) * factorial_d((n - 2) / 2) * std::pow(std::numbers::pi, n / 2.0);
}

// Volume of the unit ball in R^n (even n): pi^{n/2} / (n/2)!
inline double unit_ball_volume(int n) {
    require_even_dimension(n);
    return std::pow(std::numbers::pi, n / 2.0) / factorial_d(n / 2);
}

// Surface area of the unit sphere S^{n-1} = n * omega_n.
inline double unit_sphere_area(int n) {
    return n * unit_ball_volume(n);
}

} // namespace qcurv
