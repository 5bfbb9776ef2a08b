#include "qcurv/field_ops.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qcurv/constants.hpp"
#include "qcurv/errors.hpp"
#include "qcurv/quadrature.hpp"

namespace qcurv {

double integrate_profile(const RadialProfile& f, double a, double b,
                         const std::function<double(double, double)>& g) {
    if (b < a) return -integrate_profile(f, b, a, g);
    if (a < f.r_min() - 1e-300 || (!f.tail() && b > f.r_max() * (1 + 1e-12)))
        throw coverage_error("integration range not covered by profile");
    double total = 0.0;
    const auto& nodes = f.nodes();
    const double hi_sampled = std::min(b, f.r_max());
    if (a < hi_sampled) {
        std::size_t iv = f.interval_index(a);
        for (; iv + 1 < nodes.size() && nodes[iv] < hi_sampled; ++iv) {
            const double lo = std::max(a, nodes[iv]);
            const double hi = std::min(hi_sampled, nodes[iv + 1]);
            if (hi <= lo) continue;
            total += gauss12([&](double s) { return g(s, f.eval(s)); }, lo, hi);
        }
    }
    if (b > f.r_max() && f.tail()) {
        const auto tail = *f.tail();
        QuadResult q = integrate([&](double s) { return g(s, tail.eval(s)); },
                                 std::max(a, f.r_max()), b, {1e-12, 1e-300});
        total += q.value;
    }
    return total;
}

double annulus_average(const RadialProfile& f, int n, double r) {
    require_even_dimension(n);
    if (r <= 0.0) throw domain_error("annulus radius must be positive");
    if (!f.covers(r) || !f.covers(2 * r))
        throw coverage_error("annulus [r, 2r] not covered by profile");
    const double num = integrate_profile(
        f, r, 2 * r, [n](double s, double v) { return v * std::pow(s, n - 1); });
    const double den = (std::pow(2 * r, n) - std::pow(r, n)) / n;
    return num / den;
}

namespace {

// Trapezoid mean over the circle of radius r about p (periodic => spectral).
double circle_mean(const AnalyticField& f, const std::vector<double>& p, double r, int m) {
    double acc = 0.0;
    std::vector<double> x(2);
    for (int i = 0; i < m; ++i) {
        const double phi = 2.0 * std::numbers::pi * i / m;
        x[0] = p[0] + r * std::cos(phi);
        x[1] = p[1] + r * std::sin(phi);
        acc += f.value(x);
    }
    return acc / m;
}

// Product cubature mean over S^3 of radius r about p.
double s3_mean(const AnalyticField& f, const std::vector<double>& p, double r, int m) {
    std::vector<double> t1x, t1w, t2x, t2w;
    gauss_legendre_nodes(m, 0.0, std::numbers::pi, t1x, t1w);
    gauss_legendre_nodes(m, 0.0, std::numbers::pi, t2x, t2w);
    const int mphi = 2 * m;
    double acc = 0.0;
    std::vector<double> x(4);
    for (int i = 0; i < m; ++i) {
        const double s1 = std::sin(t1x[i]), c1 = std::cos(t1x[i]);
        for (int j = 0; j < m; ++j) {
            const double s2 = std::sin(t2x[j]), c2 = std::cos(t2x[j]);
            double inner = 0.0;
            for (int k = 0; k < mphi; ++k) {
                const double phi = 2.0 * std::numbers::pi * k / mphi;
                x[0] = p[0] + r * c1;
                x[1] = p[1] + r * s1 * c2;
                x[2] = p[2] + r * s1 * s2 * std::cos(phi);
                x[3] = p[3] + r * s1 * s2 * std::sin(phi);
                inner += f.value(x);
            }
            inner *= 2.0 * std::numbers::pi / mphi;
            acc += t1w[i] * t2w[j] * s1 * s1 * s2 * inner;
        }
    }
    return acc / (2.0 * std::numbers::pi * std::numbers::pi);
}

// Mean of F(|x|) over the sphere of radius r about p, any even n:
// integral over the polar angle with sin^{n-2} weight.
double axial_mean(const RadialFunction& F, int n, double pnorm, double r) {
    const auto integrand = [&](double th) {
        const double ct = std::cos(th);
        const double rho = std::sqrt(std::max(0.0, pnorm * pnorm + 2 * pnorm * r * ct + r * r));
        return F(rho) * std::pow(std::sin(th), n - 2);
    };
    QuadResult num = integrate(integrand, 0.0, std::numbers::pi, {1e-12, 1e-300});
    QuadResult den = integrate([&](double th) { return std::pow(std::sin(th), n - 2); },
                               0.0, std::numbers::pi, {1e-13, 1e-300});
    return num.value / den.value;
}

} // namespace

double sphere_average(const AnalyticField& f, const std::vector<double>& p, double r,
                      double rel_tol) {
    require_even_dimension(f.dim);
    if (static_cast<int>(p.size()) != f.dim)
        throw domain_error("center dimension mismatch");
    if (r <= 0.0) throw domain_error("sphere radius must be positive");
    if (f.dim == 2 || f.dim == 4) {
        double prev = 0.0;
        bool have_prev = false;
        for (int m = 16; m <= 1024; m *= 2) {
            const double cur = (f.dim == 2) ? circle_mean(f, p, r, m) : s3_mean(f, p, r, m);
            if (have_prev && std::fabs(cur - prev) <= rel_tol * std::max(1.0, std::fabs(cur)))
                return cur;
            prev = cur;
            have_prev = true;
            if (f.dim == 4 && m >= 256) break;  // 256^2 x 512 points is already far past 1e-9
        }
        return prev;
    }
    if (f.radial && f.radial->valid()) {
        double pn = 0.0;
        for (double xi : p) pn += xi * xi;
        return axial_mean(*f.radial, f.dim, std::sqrt(pn), r);
    }
    throw unsupported_dimension_error(
        "sphere_average supports n in {2,4} generally, higher even n only for radial fields");
}

} // namespace qcurv
