#pragma once

#include <functional>
#include <vector>

#include "qcurv/analytic_field.hpp"
#include "qcurv/radial_profile.hpp"

namespace qcurv {

// Integral over [a, b] of g(s, f(s)) where f is a profile (interpolant plus
// optional log tail). Inside the sampled range the integral is taken per
// node interval with a fixed 12-point Gauss panel, which integrates the
// local interpolant essentially exactly and keeps results bitwise
// deterministic; the tail section is handled by adaptive quadrature of the
// closed-form tail.
double integrate_profile(const RadialProfile& f, double a, double b,
                         const std::function<double(double, double)>& g);

// Volume average of a radial field over the annulus B_{2r} \ B_r in R^n:
// ( int_r^{2r} f(s) s^{n-1} ds ) / ( int_r^{2r} s^{n-1} ds ).
double annulus_average(const RadialProfile& f, int n, double r);

// Spherical mean of f over the sphere of radius r centered at p.
// n = 2: trapezoid on the circle (spectral for smooth integrands);
// n = 4: product Gauss x Gauss x trapezoid cubature;
// n >= 6: supported for fields radial about the origin via the axial
// reduction to a single polar integral.
double sphere_average(const AnalyticField& f, const std::vector<double>& p, double r,
                      double rel_tol = 1e-9);

} // namespace qcurv
