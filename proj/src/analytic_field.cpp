#include "qcurv/analytic_field.hpp"

#include <cmath>

#include "qcurv/constants.hpp"
#include "qcurv/errors.hpp"

namespace qcurv {

double RadialFunction::derivative(double r, int m) const {
    if (m > valid_order_)
        throw domain_error("radial function jet order exhausted");
    return jet(r).derivative(m);
}

JetN laplacian_jet(const JetN& f, double r0, int n) {
    const JetN d1 = jet_derivative(f);
    const JetN d2 = jet_derivative(d1);
    if (r0 == 0.0) {
        // f'' + (n-1) f'/r with f'(0) = 0: the quotient is the shifted jet.
        JetN q = jet_shift_down(d1);
        return d2 + static_cast<double>(n - 1) * q;
    }
    return d2 + static_cast<double>(n - 1) * (d1 / JetN::variable(r0));
}

double radial_function_polylap(const RadialFunction& f, double r, int n, int k) {
    require_even_dimension(n);
    if (2 * k > f.valid_order())
        throw domain_error("jet order too low for requested Laplacian power");
    JetN j = f.jet(r);
    for (int i = 0; i < k; ++i) j = laplacian_jet(j, r, n);
    return j.value();
}

RadialFunction laplacian_function(const RadialFunction& f, int n) {
    require_even_dimension(n);
    return RadialFunction(
        [f, n](const JetN& x) { return laplacian_jet(f.jet(x.value()), x.value(), n); },
        f.valid_order() - 2);
}

double AnalyticField::iterated_laplacian(const std::vector<double>& x, int k) const {
    if (k == 0) return value(x);
    if (static_cast<std::size_t>(k) <= laplacians.size() && laplacians[k - 1])
        return laplacians[k - 1](x);
    if (radial && radial->valid()) {
        double r = 0.0;
        for (double xi : x) r += xi * xi;
        return radial_function_polylap(*radial, std::sqrt(r), dim, k);
    }
    throw domain_error("no evaluator available for Delta^" + std::to_string(k));
}

AnalyticField make_radial_field(int dim, RadialFunction f) {
    require_even_dimension(dim);
    AnalyticField field;
    field.dim = dim;
    field.radial = f;
    field.value = [f](const std::vector<double>& x) {
        double r = 0.0;
        for (double xi : x) r += xi * xi;
        return f(std::sqrt(r));
    };
    return field;
}

double derivative_consistency(const AnalyticField& f, const std::vector<double>& x, double h) {
    double worst = 0.0;
    const auto fd4 = [&](auto&& g, int axis) {
        std::vector<double> p = x;
        auto at = [&](double d) {
            p[axis] = x[axis] + d;
            double v = g(p);
            p[axis] = x[axis];
            return v;
        };
        return (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
    };
    if (f.gradient) {
        const auto grad = f.gradient(x);
        for (int a = 0; a < f.dim; ++a) {
            const double fd = fd4(f.value, a);
            const double scale = std::max(1.0, std::fabs(grad[a]));
            worst = std::max(worst, std::fabs(fd - grad[a]) / scale);
        }
    }
    if (!f.laplacians.empty() && f.laplacians[0]) {
        double lap_fd = 0.0;
        for (int a = 0; a < f.dim; ++a) {
            std::vector<double> p = x;
            auto at = [&](double d) {
                p[a] = x[a] + d;
                double v = f.value(p);
                p[a] = x[a];
                return v;
            };
            lap_fd += (-at(2 * h) + 16 * at(h) - 30 * at(0) + 16 * at(-h) - at(-2 * h)) / (12 * h * h);
        }
        const double lap = f.laplacians[0](x);
        worst = std::max(worst, std::fabs(lap_fd - lap) / std::max(1.0, std::fabs(lap)));
    }
    return worst;
}

} // namespace qcurv
