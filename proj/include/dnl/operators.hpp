#pragma once

#include <span>

#include "dnl/grid.hpp"

namespace dnl {

// Discrete operators of the degenerate Neumann problem.
// All take the node values as a span indexed like the grid (a Field converts
// implicitly) and return raw, unscaled values.

/// (f_E + f_W + f_N + f_S - 4 f_C) / h^2 at an Interior node.
double laplacian_residual(const Grid& grid, std::span<const double> f, NodeIndex node);

/// One-sided inward difference for d/dx1 at a flat node.
/// order 1: (f(h,x2) - f(0,x2)) / h
/// order 2: (-3 f(0,x2) + 4 f(h,x2) - f(2h,x2)) / (2h)
double inward_normal_difference(const Grid& grid, std::span<const double> f, NodeIndex node,
                                int order = 1);

/// Ascending difference max(f_S - f_C, f_N - f_C, 0) / h, the monotone
/// stand-in for |grad' u|. Zero exactly when the node dominates both
/// tangential neighbours. Corner neighbours take part as ordinary values.
double upwind_tangential_slope(const Grid& grid, std::span<const double> f, NodeIndex node);

/// min(order-1 inward difference, upwind tangential slope).
/// Nonincreasing in the centre value, nondecreasing in every neighbour.
double boundary_residual(const Grid& grid, std::span<const double> f, NodeIndex node);

}  // namespace dnl
