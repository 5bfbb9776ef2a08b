#include "qcurv/radial_profile.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qcurv/errors.hpp"

namespace qcurv {

double LogTail::eval(double r) const { return beta * std::log(r) + c; }

RadialProfile::RadialProfile(std::vector<double> nodes, std::vector<double> values,
                             std::optional<LogTail> tail)
    : nodes_(std::move(nodes)), values_(std::move(values)), tail_(std::move(tail)) {
    if (nodes_.size() != values_.size())
        throw degenerate_grid_error("node/value length mismatch");
    if (nodes_.size() < 2)
        throw degenerate_grid_error("profile needs at least 2 nodes");
    if (nodes_.front() < 0.0)
        throw degenerate_grid_error("radii must be >= 0");
    for (std::size_t i = 0; i + 1 < nodes_.size(); ++i)
        if (!(nodes_[i] < nodes_[i + 1]))
            throw degenerate_grid_error("nodes must be strictly increasing");
    for (double v : values_)
        if (!std::isfinite(v)) throw degenerate_grid_error("profile values must be finite");
    if (tail_) {
        const double at_end = tail_->eval(nodes_.back());
        const double scale = std::max({1.0, std::fabs(values_.back()), std::fabs(at_end)});
        if (std::fabs(at_end - values_.back()) > tail_->continuity_tol * scale)
            throw degenerate_grid_error("tail does not match sampled value at r_max");
    }
}

std::size_t RadialProfile::interval_index(double r) const {
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), r);
    std::size_t i = static_cast<std::size_t>(it - nodes_.begin());
    if (i == 0) return 0;
    if (i >= nodes_.size()) return nodes_.size() - 2;
    return i - 1;
}

std::size_t RadialProfile::window_start(std::size_t interval) const {
    const std::size_t w = static_cast<std::size_t>(std::min<std::size_t>(interp_window, nodes_.size()));
    const std::size_t half = w / 2;
    std::size_t lo = (interval + 1 > half) ? interval + 1 - half : 0;
    if (lo + w > nodes_.size()) lo = nodes_.size() - w;
    return lo;
}

double RadialProfile::eval(double r) const {
    if (r > r_max()) {
        if (tail_) return tail_->eval(r);
        throw coverage_error("radius " + std::to_string(r) + " beyond covered range");
    }
    if (r < r_min())
        throw coverage_error("radius " + std::to_string(r) + " below first node");
    const std::size_t iv = interval_index(r);
    const std::size_t lo = window_start(iv);
    const std::size_t w = static_cast<std::size_t>(std::min<std::size_t>(interp_window, nodes_.size()));
    // Lagrange interpolation through the window nodes.
    double acc = 0.0;
    for (std::size_t j = 0; j < w; ++j) {
        double term = values_[lo + j];
        for (std::size_t k = 0; k < w; ++k) {
            if (k == j) continue;
            term *= (r - nodes_[lo + k]) / (nodes_[lo + j] - nodes_[lo + k]);
        }
        acc += term;
    }
    return acc;
}

RadialProfile RadialProfile::with_values(std::vector<double> values) const {
    return RadialProfile(nodes_, std::move(values));
}

RadialProfile RadialProfile::slice(std::size_t lo, std::size_t hi) const {
    if (lo > hi || hi >= nodes_.size())
        throw degenerate_grid_error("invalid slice range");
    std::vector<double> n(nodes_.begin() + lo, nodes_.begin() + hi + 1);
    std::vector<double> v(values_.begin() + lo, values_.begin() + hi + 1);
    std::optional<LogTail> t = (hi == nodes_.size() - 1) ? tail_ : std::nullopt;
    return RadialProfile(std::move(n), std::move(v), std::move(t));
}

std::vector<double> GridSpec::make_nodes() const {
    if (uniform_to <= 0.0 || r_max <= uniform_to || uniform_count < 1 || log_count < 1)
        throw degenerate_grid_error("invalid grid spec");
    std::vector<double> nodes;
    nodes.reserve(static_cast<std::size_t>(uniform_count + log_count + 1));
    for (int i = 0; i < uniform_count; ++i)
        nodes.push_back(uniform_to * i / uniform_count);
    const double ratio = std::log(r_max / uniform_to) / log_count;
    for (int i = 0; i <= log_count; ++i)
        nodes.push_back(uniform_to * std::exp(ratio * i));
    nodes.back() = r_max;
    return nodes;
}

namespace {
std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}
} // namespace

std::string profile_to_csv(const RadialProfile& p) {
    std::string out = "r,value\n";
    for (std::size_t i = 0; i < p.size(); ++i)
        out += fmt17(p.nodes()[i]) + "," + fmt17(p.values()[i]) + "\n";
    if (p.tail()) {
        out += "# tail: beta=" + fmt17(p.tail()->beta) + " c=" + fmt17(p.tail()->c) +
               " rmax=" + fmt17(p.r_max()) + "\n";
    }
    return out;
}

RadialProfile profile_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<double> r, v;
    std::optional<LogTail> tail;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            double beta = 0.0, c = 0.0, rmax = 0.0;
            if (std::sscanf(line.c_str(), "# tail: beta=%lf c=%lf rmax=%lf", &beta, &c, &rmax) == 3)
                tail = LogTail{beta, c, 1e-6};
            continue;
        }
        if (!header_seen) {
            header_seen = true;
            if (line.find("r,") == 0 || line.find("r ,") == 0) continue;
        }
        double a = 0.0, b = 0.0;
        if (std::sscanf(line.c_str(), "%lf,%lf", &a, &b) != 2)
            throw io_error("malformed profile CSV line: " + line);
        r.push_back(a);
        v.push_back(b);
    }
    return RadialProfile(std::move(r), std::move(v), tail);
}

} // namespace qcurv
