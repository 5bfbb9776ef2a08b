#include "qcurv/stencil.hpp"

#include <algorithm>
#include <cmath>

#include "qcurv/constants.hpp"
#include "qcurv/errors.hpp"

namespace qcurv {

std::vector<std::vector<double>> fd_weights(double x0, std::span<const double> x, int max_order) {
    const int nn = static_cast<int>(x.size());
    if (nn == 0) throw degenerate_grid_error("fd_weights: empty node set");
    const int m = std::min(max_order, nn - 1);
    // C[j][k]: weight of f(x[j]) for derivative order k.
    std::vector<std::vector<double>> C(nn, std::vector<double>(max_order + 1, 0.0));
    double c1 = 1.0;
    double c4 = x[0] - x0;
    C[0][0] = 1.0;
    for (int i = 1; i < nn; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    C[i][k] = c1 * (k * C[i - 1][k - 1] - c5 * C[i - 1][k]) / c2;
                C[i][0] = -c1 * c5 * C[i - 1][0] / c2;
            }
            for (int k = mn; k >= 1; --k)
                C[j][k] = (c4 * C[j][k] - k * C[j][k - 1]) / c3;
            C[j][0] = c4 * C[j][0] / c3;
        }
        c1 = c2;
    }
    // Transpose to [order][node].
    std::vector<std::vector<double>> W(max_order + 1, std::vector<double>(nn, 0.0));
    for (int j = 0; j < nn; ++j)
        for (int k = 0; k <= max_order; ++k) W[k][j] = C[j][k];
    return W;
}

namespace {

struct Window {
    std::size_t lo;
    std::size_t width;
};

Window window_at(std::size_t i, std::size_t size) {
    const std::size_t w = std::min<std::size_t>(kStencilWidth, size);
    std::size_t lo = (i > w / 2) ? i - w / 2 : 0;
    if (lo + w > size) lo = size - w;
    return {lo, w};
}

// Node/value arrays extended by even reflection through the origin when the
// profile starts at r = 0. Smooth radial fields are even in r, so reflection
// turns the one-sided stencils near the origin into centered ones, which is
// what keeps the composed operators (Delta^k) accurate there.
struct Extended {
    std::vector<double> r, v;
    std::size_t offset = 0;  // index of the original node 0
};

Extended extend_even(const RadialProfile& f) {
    Extended e;
    const auto& r = f.nodes();
    const auto& v = f.values();
    if (r.front() != 0.0) {
        e.r = r;
        e.v = v;
        return e;
    }
    const std::size_t m = std::min<std::size_t>(kStencilWidth, r.size() - 1);
    e.offset = m;
    e.r.reserve(r.size() + m);
    e.v.reserve(r.size() + m);
    for (std::size_t j = m; j >= 1; --j) {
        e.r.push_back(-r[j]);
        e.v.push_back(v[j]);
    }
    e.r.insert(e.r.end(), r.begin(), r.end());
    e.v.insert(e.v.end(), v.begin(), v.end());
    return e;
}

// First and second derivative at every node.
void derivatives12(const RadialProfile& f, std::vector<double>& d1, std::vector<double>& d2) {
    const Extended e = extend_even(f);
    const std::size_t n = f.size();
    d1.assign(n, 0.0);
    d2.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t ei = i + e.offset;
        const Window w = window_at(ei, e.r.size());
        auto W = fd_weights(e.r[ei], std::span<const double>(e.r.data() + w.lo, w.width), 2);
        // Weights for order >= 1 sum to zero, so differencing against v[i]
        // removes the roundoff term proportional to |v|.
        double a1 = 0.0, a2 = 0.0;
        for (std::size_t j = 0; j < w.width; ++j) {
            const double dv = e.v[w.lo + j] - e.v[ei];
            a1 += W[1][j] * dv;
            a2 += W[2][j] * dv;
        }
        d1[i] = a1;
        d2[i] = a2;
    }
}

} // namespace

RadialProfile profile_derivative(const RadialProfile& f, int order) {
    if (f.size() < 5) throw degenerate_grid_error("derivative needs >= 5 nodes");
    const Extended e = extend_even(f);
    std::vector<double> out(f.size(), 0.0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        const std::size_t ei = i + e.offset;
        const Window w = window_at(ei, e.r.size());
        auto W = fd_weights(e.r[ei], std::span<const double>(e.r.data() + w.lo, w.width), order);
        double acc = 0.0;
        const double base = (order >= 1) ? e.v[ei] : 0.0;
        for (std::size_t j = 0; j < w.width; ++j) acc += W[order][j] * (e.v[w.lo + j] - base);
        out[i] = acc;
    }
    return f.with_values(std::move(out));
}

RadialProfile radial_laplacian(const RadialProfile& f, int n) {
    require_even_dimension(n);
    if (f.size() < 5) throw degenerate_grid_error("radial_laplacian needs >= 5 nodes");
    std::vector<double> d1, d2;
    derivatives12(f, d1, d2);
    const auto& r = f.nodes();
    std::vector<double> out(r.size(), 0.0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0.0)
            out[i] = n * d2[i];
        else
            out[i] = d2[i] + (n - 1) * d1[i] / r[i];
    }
    return f.with_values(std::move(out));
}

RadialProfile radial_polyharmonic(const RadialProfile& f, int n, int k) {
    require_even_dimension(n);
    if (k < 1) throw domain_error("radial_polyharmonic needs k >= 1");
    if (f.size() < static_cast<std::size_t>(4 * k + 1))
        throw degenerate_grid_error("radial_polyharmonic needs >= 4k+1 nodes");
    RadialProfile g = radial_laplacian(f, n);
    for (int i = 1; i < k; ++i) g = radial_laplacian(g, n);
    const std::size_t trim = static_cast<std::size_t>(3 * k);
    const std::size_t lo = (f.nodes().front() == 0.0) ? 0 : std::min(trim, g.size() - 2);
    const std::size_t hi_cut = std::min(trim, g.size() - lo - 2);
    return g.slice(lo, g.size() - 1 - hi_cut);
}

RadialProfile radial_gradient_norm_sq(const RadialProfile& f) {
    if (f.size() < 5) throw degenerate_grid_error("gradient needs >= 5 nodes");
    RadialProfile d = profile_derivative(f, 1);
    std::vector<double> out(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) out[i] = d.values()[i] * d.values()[i];
    return f.with_values(std::move(out));
}

} // namespace qcurv
