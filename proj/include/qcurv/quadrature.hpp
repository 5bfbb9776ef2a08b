#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <vector>

#include "qcurv/errors.hpp"

namespace qcurv {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // estimate
};

namespace detail {

// Gauss-Kronrod 7-15 abscissae/weights on [-1, 1] (positive half; symmetric).
inline constexpr double kGK15x[8] = {
    0.000000000000000, 0.207784955007898, 0.405845151377397, 0.586087235467691,
    0.741531185599394, 0.864864423359769, 0.949107912342759, 0.991455371120813};
inline constexpr double kGK15w[8] = {
    0.209482141084728, 0.204432940075298, 0.190350578064785, 0.169004726639267,
    0.140653259715525, 0.104790010322250, 0.063092092629979, 0.022935322010529};
// Gauss-7 weights aligned with the even-index Kronrod nodes (0, 2, 4, 6).
inline constexpr double kG7w[4] = {
    0.417959183673469, 0.381830050505119, 0.279705391489277, 0.129484966168870};

template <class F>
QuadResult gk15(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double f0 = f(mid);
    double k15 = kGK15w[0] * f0;
    double g7 = kG7w[0] * f0;
    for (int i = 1; i < 8; ++i) {
        const double dx = half * kGK15x[i];
        const double fi = f(mid + dx) + f(mid - dx);
        k15 += kGK15w[i] * fi;
        if (i % 2 == 0) g7 += kG7w[i / 2] * fi;
    }
    k15 *= half;
    g7 *= half;
    const double diff = std::fabs(k15 - g7);
    return {k15, 200.0 * diff * std::sqrt(200.0 * diff)};
}

} // namespace detail

struct QuadOptions {
    double rel_tol = 1e-10;
    double abs_tol = 1e-300;
    int max_intervals = 4000;
};

// Adaptive Gauss-Kronrod on [a, b]. Deterministic: the subdivision order is a
// fixed LIFO, and the accumulation order is fixed by it.
template <class F>
QuadResult integrate(const F& f, double a, double b, QuadOptions opt = {}) {
    if (a == b) return {0.0, 0.0};
    struct Seg { double a, b; };
    std::vector<Seg> stack;
    stack.push_back({a, b});
    double sum = 0.0, err = 0.0;
    int used = 0;
    while (!stack.empty()) {
        Seg s = stack.back();
        stack.pop_back();
        QuadResult q = detail::gk15(f, s.a, s.b);
        const double width_frac = std::fabs(s.b - s.a) / std::fabs(b - a);
        if (q.error <= opt.rel_tol * std::fabs(q.value) + opt.abs_tol ||
            q.error <= opt.rel_tol * width_frac * std::fabs(sum) + opt.abs_tol ||
            width_frac < 1e-14 || used >= opt.max_intervals) {
            sum += q.value;
            err += q.error;
            continue;
        }
        const double mid = 0.5 * (s.a + s.b);
        stack.push_back({mid, s.b});
        stack.push_back({s.a, mid});
        used += 2;
    }
    return {sum, err};
}

// Convenience wrapper splitting at interior breakpoints (kernel kinks etc.).
template <class F>
QuadResult integrate_split(const F& f, double a, double b,
                           const std::vector<double>& breaks, QuadOptions opt = {}) {
    std::vector<double> pts;
    pts.push_back(a);
    for (double x : breaks)
        if (x > a && x < b) pts.push_back(x);
    pts.push_back(b);
    std::sort(pts.begin(), pts.end());
    QuadResult total;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        QuadResult q = integrate(f, pts[i], pts[i + 1], opt);
        total.value += q.value;
        total.error += q.error;
    }
    return total;
}

namespace detail {
// 12-point Gauss-Legendre on [-1, 1] (positive half).
inline constexpr double kGL12x[6] = {
    0.125233408511469, 0.367831498998180, 0.587317954286617,
    0.769902674194305, 0.904117256370475, 0.981560634246719};
inline constexpr double kGL12w[6] = {
    0.249147045813403, 0.233492536538355, 0.203167426723066,
    0.160078328543346, 0.106939325995318, 0.047175336386512};
} // namespace detail

// Fixed-order Gauss-Legendre panel; exact through polynomial degree 23.
template <class F>
double gauss12(const F& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double acc = 0.0;
    for (int i = 0; i < 6; ++i) {
        const double dx = half * detail::kGL12x[i];
        acc += detail::kGL12w[i] * (f(mid + dx) + f(mid - dx));
    }
    return acc * half;
}

// Nodes/weights of an N-point Gauss-Legendre rule on [a, b], computed by
// Newton iteration on Legendre polynomials. Used by the sphere quadratures.
inline void gauss_legendre_nodes(int n, double a, double b,
                                 std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-15) break;
        }
        const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
        x[i] = mid - half * z;
        x[n - 1 - i] = mid + half * z;
        w[i] = w[n - 1 - i] = 2.0 * half / ((1.0 - z * z) * pp * pp);
    }
}

} // namespace qcurv
