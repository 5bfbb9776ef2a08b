#pragma once

#include <functional>
#include <vector>

namespace qcurv {

// Uniform tensor grid of cell-centered samples on [-L, L]^n, n in {2, 4}.
// Oracle-side container: midpoint integration only, no differential
// operators. Kept deliberately small; 4D extents are feasible only at
// coarse resolution.
class GridField {
public:
    GridField(int dim, double half_width, int cells_per_axis);

    int dim() const { return dim_; }
    double spacing() const { return h_; }
    double half_width() const { return L_; }
    std::size_t cell_count() const { return values_.size(); }

    static GridField from_function(int dim, double half_width, int cells_per_axis,
                                   const std::function<double(const std::vector<double>&)>& f);

    double& at(const std::vector<int>& idx);
    double at(const std::vector<int>& idx) const;
    std::vector<double> cell_center(const std::vector<int>& idx) const;

    // Midpoint-rule integral over the box.
    double integrate() const;

private:
    int dim_;
    double L_;
    int m_;
    double h_;
    std::vector<double> values_;
    std::size_t flat_index(const std::vector<int>& idx) const;
};

} // namespace qcurv
