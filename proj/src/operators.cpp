#include "dnl/operators.hpp"

#include <algorithm>
#include <stdexcept>

namespace dnl {

namespace {

void require_size(const Grid& grid, std::span<const double> f) {
    if (f.size() != grid.size()) throw std::invalid_argument("field size does not match grid");
}

void require_flat(const Grid& grid, NodeIndex node) {
    if (node >= grid.size() || grid.role(node) != NodeRole::FlatBoundary)
        throw std::invalid_argument("node is not on the flat boundary");
}

}  // namespace

double laplacian_residual(const Grid& grid, std::span<const double> f, NodeIndex node) {
    require_size(grid, f);
    if (node >= grid.size() || grid.role(node) != NodeRole::Interior)
        throw std::invalid_argument("laplacian_residual needs an interior node");
    const double h = grid.spacing();
    return (f[grid.east(node)] + f[grid.west(node)] + f[grid.north(node)] + f[grid.south(node)] -
            4.0 * f[node]) /
           (h * h);
}

double inward_normal_difference(const Grid& grid, std::span<const double> f, NodeIndex node,
                                int order) {
    require_size(grid, f);
    require_flat(grid, node);
    const double h = grid.spacing();
    const NodeIndex first = grid.east(node);
    if (order == 1) return (f[first] - f[node]) / h;
    if (order != 2) throw std::invalid_argument("normal difference order must be 1 or 2");
    const NodeIndex second = grid.east(first);
    if (second == kNoNode) throw std::invalid_argument("second inward layer missing for order 2");
    return (-3.0 * f[node] + 4.0 * f[first] - f[second]) / (2.0 * h);
}

double upwind_tangential_slope(const Grid& grid, std::span<const double> f, NodeIndex node) {
    require_size(grid, f);
    require_flat(grid, node);
    const double c = f[node];
    return std::max({f[grid.south(node)] - c, f[grid.north(node)] - c, 0.0}) / grid.spacing();
}

double boundary_residual(const Grid& grid, std::span<const double> f, NodeIndex node) {
    return std::min(inward_normal_difference(grid, f, node, 1), upwind_tangential_slope(grid, f, node));
}

}  // namespace dnl
