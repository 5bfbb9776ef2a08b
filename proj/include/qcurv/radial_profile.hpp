#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qcurv {

// Analytic tail descriptor: f(r) = beta * log(r) + c for r > the last node.
struct LogTail {
    double beta = 0.0;
    double c = 0.0;
    double continuity_tol = 1e-8;

    double eval(double r) const;
};

// Scalar function of radius sampled on a strictly increasing node set,
// optionally extended by a log-affine tail beyond the last node.
// Interpolation between nodes is local Lagrange on a sliding window, so a
// profile built from a smooth function evaluates smoothly to high order.
class RadialProfile {
public:
    RadialProfile() = default;
    RadialProfile(std::vector<double> nodes, std::vector<double> values,
                  std::optional<LogTail> tail = std::nullopt);

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& values() const { return values_; }
    const std::optional<LogTail>& tail() const { return tail_; }

    std::size_t size() const { return nodes_.size(); }
    double r_min() const { return nodes_.front(); }
    double r_max() const { return nodes_.back(); }

    bool covers(double r) const { return (r >= r_min() && r <= r_max()) || (tail_ && r > r_max()); }

    // Interpolated (or tail) value; throws coverage_error outside the range.
    double eval(double r) const;

    // Same nodes, new values; tail is not carried over.
    RadialProfile with_values(std::vector<double> values) const;

    // Restrict to nodes[lo..hi] inclusive.
    RadialProfile slice(std::size_t lo, std::size_t hi) const;

    static constexpr int interp_window = 8;

    // Index of the interval [nodes[i], nodes[i+1]] containing r (clamped).
    std::size_t interval_index(double r) const;
    // First node of the interpolation window used inside interval i.
    std::size_t window_start(std::size_t interval) const;

private:
    std::vector<double> nodes_;
    std::vector<double> values_;
    std::optional<LogTail> tail_;
};

// Node layout: uniform patch on [0, uniform_to] followed by geometrically
// spaced nodes up to r_max. The uniform patch keeps regular-limit stencils
// near the origin well conditioned; the log section carries the dyadic
// annulus diagnostics out to large radius.
struct GridSpec {
    double uniform_to = 1e-4;
    int uniform_count = 24;       // intervals on the uniform patch
    double r_max = 1e6;
    int log_count = 2400;         // intervals on the log section

    std::vector<double> make_nodes() const;
};

// Sample a callable on a node set.
template <class F>
RadialProfile sample_profile(const std::vector<double>& nodes, const F& f,
                             std::optional<LogTail> tail = std::nullopt) {
    std::vector<double> v(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) v[i] = f(nodes[i]);
    return RadialProfile(nodes, std::move(v), std::move(tail));
}

// CSV serialization: "r,value" header, one row per node, 17 significant
// digits, optional trailing "# tail: beta=<..> c=<..> rmax=<..>" comment.
std::string profile_to_csv(const RadialProfile& p);
RadialProfile profile_from_csv(const std::string& text);

} // namespace qcurv
