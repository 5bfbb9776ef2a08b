#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "qcurv/jet.hpp"

namespace qcurv {

// Analytic scalar function of radius, evaluated through jet arithmetic so
// that derivatives of any order up to `valid_order` come out at machine
// precision. Closures are written once against JetN and reused for values,
// derivatives and iterated Laplacians.
class RadialFunction {
public:
    RadialFunction() = default;
    explicit RadialFunction(std::function<JetN(const JetN&)> f, int valid_order = kJetOrder)
        : f_(std::move(f)), valid_order_(valid_order) {}

    bool valid() const { return static_cast<bool>(f_); }
    int valid_order() const { return valid_order_; }

    JetN jet(double r) const { return f_(JetN::variable(r)); }
    double operator()(double r) const { return jet(r).value(); }
    double derivative(double r, int m) const;

private:
    std::function<JetN(const JetN&)> f_;
    int valid_order_ = kJetOrder;
};

// Jet of the flat radial Laplacian g = f'' + (n-1) f'/r from the jet of f at
// base radius r0. At r0 = 0 the regular limit is used (f'(0) = 0 for smooth
// radial fields; any roundoff residue in that coefficient is dropped).
JetN laplacian_jet(const JetN& f, double r0, int n);

// Delta^k f(r) for an analytic radial closure.
double radial_function_polylap(const RadialFunction& f, double r, int n, int k);

// Delta f as a new RadialFunction (two jet orders are consumed per level).
RadialFunction laplacian_function(const RadialFunction& f, int n);

// Scalar field on R^n. The evaluator is mandatory; gradient and iterated
// Laplacians are optional, as is a radial closure for fields of the form
// F(|x|) (which unlocks sphere means in any even dimension and exact
// iterated Laplacians via jets).
struct AnalyticField {
    int dim = 0;
    std::function<double(const std::vector<double>&)> value;
    std::function<std::vector<double>(const std::vector<double>&)> gradient;  // optional
    std::vector<std::function<double(const std::vector<double>&)>> laplacians;  // optional, [Delta f, Delta^2 f, ...]
    std::optional<RadialFunction> radial;  // optional, f(x) = radial(|x|)

    // Delta^k f at a point, preferring supplied evaluators, falling back to
    // the radial closure. Throws domain_error when neither is available.
    double iterated_laplacian(const std::vector<double>& x, int k) const;
};

// Field for F(|x|) given an analytic radial closure.
AnalyticField make_radial_field(int dim, RadialFunction f);

// Verifies that supplied derivative evaluators are consistent with centered
// finite differences of the evaluator at a probe point; returns the largest
// relative mismatch seen (used by construction-time validation tests).
double derivative_consistency(const AnalyticField& f, const std::vector<double>& x, double h);

} // namespace qcurv
