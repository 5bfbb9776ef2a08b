#pragma once

#include <stdexcept>
#include <string>

namespace qcurv {

// Error taxonomy used across the library. Construction-time validation
// throws invalid_argument subtypes; evaluation outside covered data throws
// runtime_error subtypes.

struct degenerate_grid_error : std::invalid_argument {
    explicit degenerate_grid_error(const std::string& what) : std::invalid_argument(what) {}
};

struct invalid_dimension_error : std::invalid_argument {
    explicit invalid_dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

struct unsupported_dimension_error : std::invalid_argument {
    explicit unsupported_dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

struct coverage_error : std::runtime_error {
    explicit coverage_error(const std::string& what) : std::runtime_error(what) {}
};

struct node_mismatch_error : std::invalid_argument {
    explicit node_mismatch_error(const std::string& what) : std::invalid_argument(what) {}
};

struct domain_error : std::invalid_argument {
    explicit domain_error(const std::string& what) : std::invalid_argument(what) {}
};

struct io_error : std::runtime_error {
    explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace qcurv
