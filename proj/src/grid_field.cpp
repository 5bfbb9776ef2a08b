#include "qcurv/grid_field.hpp"

#include <cmath>

#include "qcurv/errors.hpp"

namespace qcurv {

GridField::GridField(int dim, double half_width, int cells_per_axis)
    : dim_(dim), L_(half_width), m_(cells_per_axis), h_(2.0 * half_width / cells_per_axis) {
    if (dim != 2 && dim != 4)
        throw unsupported_dimension_error("GridField supports n in {2, 4}");
    if (half_width <= 0.0 || cells_per_axis < 2)
        throw degenerate_grid_error("GridField needs positive extent and >= 2 cells");
    std::size_t total = 1;
    for (int a = 0; a < dim; ++a) total *= static_cast<std::size_t>(m_);
    values_.assign(total, 0.0);
}

std::size_t GridField::flat_index(const std::vector<int>& idx) const {
    std::size_t flat = 0;
    for (int a = 0; a < dim_; ++a) flat = flat * m_ + static_cast<std::size_t>(idx[a]);
    return flat;
}

double& GridField::at(const std::vector<int>& idx) { return values_[flat_index(idx)]; }
double GridField::at(const std::vector<int>& idx) const { return values_[flat_index(idx)]; }

std::vector<double> GridField::cell_center(const std::vector<int>& idx) const {
    std::vector<double> x(dim_);
    for (int a = 0; a < dim_; ++a) x[a] = -L_ + (idx[a] + 0.5) * h_;
    return x;
}

GridField GridField::from_function(int dim, double half_width, int cells_per_axis,
                                   const std::function<double(const std::vector<double>&)>& f) {
    GridField g(dim, half_width, cells_per_axis);
    std::vector<int> idx(dim, 0);
    for (std::size_t flat = 0; flat < g.values_.size(); ++flat) {
        std::size_t rem = flat;
        for (int a = dim - 1; a >= 0; --a) {
            idx[a] = static_cast<int>(rem % g.m_);
            rem /= g.m_;
        }
        const double v = f(g.cell_center(idx));
        if (!std::isfinite(v)) throw degenerate_grid_error("GridField values must be finite");
        g.values_[flat] = v;
    }
    return g;
}

double GridField::integrate() const {
    double acc = 0.0;
    for (double v : values_) acc += v;
    return acc * std::pow(h_, dim_);
}

} // namespace qcurv
