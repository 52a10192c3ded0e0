#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dnl/grid.hpp"

namespace dnl {

/// One finite real per grid node, with the max-abs scale cached at
/// construction. Immutable; build a new Field to change values.
class Field {
public:
    Field() = default;
    explicit Field(std::vector<double> values);

    /// Samples fn at every node of the grid.
    static Field sample(const Grid& grid, const std::function<double(Point)>& fn);

    std::size_t size() const { return values_.size(); }
    double operator[](NodeIndex k) const { return values_[k]; }
    std::span<const double> values() const { return values_; }
    operator std::span<const double>() const { return values_; }
    double scale() const { return scale_; }

    /// Throws unless size() matches the grid.
    void check_against(const Grid& grid) const;

private:
    std::vector<double> values_;
    double scale_ = 0.0;
};

/// Scale with a floor, for relative tolerances on an all-zero field.
inline double tolerance_scale(double scale) { return scale > 0.0 ? scale : 1.0; }

}  // namespace dnl
