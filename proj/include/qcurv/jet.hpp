#pragma once

#include <array>
#include <cmath>
#include <cstddef>

#include "qcurv/errors.hpp"

namespace qcurv {

// Univariate truncated Taylor series ("jet") of fixed order: c[i] = f^(i)(r0)/i!.
// Used to evaluate derivatives of analytic radial closures to machine
// precision, which the curvature stack prefers over finite differences
// whenever a closed form is available.
template <int Order>
struct Jet {
    static constexpr int order = Order;
    std::array<double, Order + 1> c{};

    Jet() = default;
    explicit Jet(double value) { c[0] = value; }

    static Jet variable(double r0) {
        Jet j;
        j.c[0] = r0;
        if constexpr (Order >= 1) j.c[1] = 1.0;
        return j;
    }
    static Jet constant(double v) { return Jet(v); }

    double value() const { return c[0]; }

    // f^(m)(r0) = c[m] * m!
    double derivative(int m) const {
        if (m < 0 || m > Order) throw domain_error("jet derivative order out of range");
        double f = c[m];
        for (int i = 2; i <= m; ++i) f *= i;
        return f;
    }

    Jet& operator+=(const Jet& o) {
        for (int i = 0; i <= Order; ++i) c[i] += o.c[i];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (int i = 0; i <= Order; ++i) c[i] -= o.c[i];
        return *this;
    }
};

template <int N> Jet<N> operator+(Jet<N> a, const Jet<N>& b) { a += b; return a; }
template <int N> Jet<N> operator-(Jet<N> a, const Jet<N>& b) { a -= b; return a; }
template <int N> Jet<N> operator-(const Jet<N>& a) {
    Jet<N> r;
    for (int i = 0; i <= N; ++i) r.c[i] = -a.c[i];
    return r;
}
template <int N> Jet<N> operator+(Jet<N> a, double s) { a.c[0] += s; return a; }
template <int N> Jet<N> operator+(double s, Jet<N> a) { a.c[0] += s; return a; }
template <int N> Jet<N> operator-(Jet<N> a, double s) { a.c[0] -= s; return a; }
template <int N> Jet<N> operator-(double s, const Jet<N>& a) { return -a + s; }

template <int N> Jet<N> operator*(const Jet<N>& a, const Jet<N>& b) {
    Jet<N> r;
    for (int i = 0; i <= N; ++i) {
        double acc = 0.0;
        for (int j = 0; j <= i; ++j) acc += a.c[j] * b.c[i - j];
        r.c[i] = acc;
    }
    return r;
}
template <int N> Jet<N> operator*(Jet<N> a, double s) {
    for (int i = 0; i <= N; ++i) a.c[i] *= s;
    return a;
}
template <int N> Jet<N> operator*(double s, Jet<N> a) { return a * s; }

// c_k = (a_k - sum_{j=1..k} b_j c_{k-j}) / b_0
template <int N> Jet<N> operator/(const Jet<N>& a, const Jet<N>& b) {
    if (b.c[0] == 0.0) throw domain_error("jet division by zero constant term");
    Jet<N> r;
    for (int k = 0; k <= N; ++k) {
        double acc = a.c[k];
        for (int j = 1; j <= k; ++j) acc -= b.c[j] * r.c[k - j];
        r.c[k] = acc / b.c[0];
    }
    return r;
}
template <int N> Jet<N> operator/(Jet<N> a, double s) { return a * (1.0 / s); }
template <int N> Jet<N> operator/(double s, const Jet<N>& b) { return Jet<N>(s) / b; }

// Jet of f' truncated at order N-1 (top coefficient zero-padded).
template <int N> Jet<N> jet_derivative(const Jet<N>& a) {
    Jet<N> r;
    for (int i = 0; i < N; ++i) r.c[i] = (i + 1) * a.c[i + 1];
    return r;
}

// Divide a jet based at 0 by the variable itself: requires a_0 == 0
// (up to roundoff, which is dropped). Used by the radial Laplacian at r = 0.
template <int N> Jet<N> jet_shift_down(const Jet<N>& a) {
    Jet<N> r;
    for (int i = 0; i < N; ++i) r.c[i] = a.c[i + 1];
    return r;
}

template <int N> Jet<N> exp(const Jet<N>& g) {
    Jet<N> e;
    e.c[0] = std::exp(g.c[0]);
    for (int k = 1; k <= N; ++k) {
        double acc = 0.0;
        for (int j = 1; j <= k; ++j) acc += j * g.c[j] * e.c[k - j];
        e.c[k] = acc / k;
    }
    return e;
}

template <int N> Jet<N> log(const Jet<N>& g) {
    if (g.c[0] <= 0.0) throw domain_error("jet log of non-positive value");
    Jet<N> l;
    l.c[0] = std::log(g.c[0]);
    // l' = g'/g, integrated coefficientwise
    Jet<N> h = jet_derivative(g) / g;
    for (int k = 1; k <= N; ++k) l.c[k] = h.c[k - 1] / k;
    return l;
}

template <int N> Jet<N> pow(const Jet<N>& g, double a) {
    if (g.c[0] <= 0.0) throw domain_error("jet pow of non-positive base");
    return exp(log(g) * a);
}

template <int N> Jet<N> pow_int(const Jet<N>& g, int m) {
    if (m < 0) return 1.0 / pow_int(g, -m);
    Jet<N> r(1.0);
    Jet<N> base = g;
    while (m > 0) {
        if (m & 1) r = r * base;
        base = base * base;
        m >>= 1;
    }
    return r;
}

template <int N> Jet<N> sqrt(const Jet<N>& g) { return pow(g, 0.5); }

// Default jet order for the library: supports up to four iterated radial
// Laplacians (dimension <= 8) from a single closure evaluation.
inline constexpr int kJetOrder = 8;
using JetN = Jet<kJetOrder>;

} // namespace qcurv
