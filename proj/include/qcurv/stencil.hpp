#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qcurv/radial_profile.hpp"

namespace qcurv {

// Finite-difference weights for arbitrary node locations (Fornberg's
// recurrence). weights[m][j] multiplies f(x[j]) in the approximation of
// f^(m)(x0), for m = 0..max_order. Exact for polynomials of degree
// < x.size(), so a 7-node window is at least 4th-order accurate for first
// and second derivatives on any reasonable layout.
std::vector<std::vector<double>> fd_weights(double x0, std::span<const double> x, int max_order);

inline constexpr int kStencilWidth = 7;

// d^m f / dr^m sampled on f's nodes, via sliding 7-node windows with
// one-sided closures at the ends.
RadialProfile profile_derivative(const RadialProfile& f, int order);

// Flat radial Laplacian: Delta f = f'' + (n-1) f'/r, with the regular limit
// Delta f(0) = n f''(0) at a leading r = 0 node.
RadialProfile radial_laplacian(const RadialProfile& f, int n);

// Delta^k f, computed as the k-fold composition of radial_laplacian on the
// full node set and then trimmed: 3k nodes at the outer end (and at the
// inner end too when the first node is positive; a leading r = 0 node is
// kept because the regular-limit stencil is valid there). The returned node
// set documents the trimming.
RadialProfile radial_polyharmonic(const RadialProfile& f, int n, int k);

// |grad f|^2 = (f')^2 for radial f.
RadialProfile radial_gradient_norm_sq(const RadialProfile& f);

} // namespace qcurv
