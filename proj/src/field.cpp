#include "dnl/field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dnl {

Field::Field(std::vector<double> values) : values_(std::move(values)) {
    for (double v : values_) {
        if (!std::isfinite(v)) throw std::invalid_argument("field values must be finite");
        scale_ = std::max(scale_, std::abs(v));
    }
}

Field Field::sample(const Grid& grid, const std::function<double(Point)>& fn) {
    std::vector<double> v(grid.size());
    for (NodeIndex k = 0; k < grid.size(); ++k) v[k] = fn(grid.point(k));
    return Field(std::move(v));
}

void Field::check_against(const Grid& grid) const {
    if (values_.size() != grid.size())
        throw std::invalid_argument("field has " + std::to_string(values_.size()) +
                                    " values but the grid has " + std::to_string(grid.size()) + " nodes");
}

}  // namespace dnl
