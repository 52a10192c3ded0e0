#pragma once

#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "dnl/grid.hpp"

namespace dnl {

/// Factorized discrete Dirichlet problem on the Interior nodes: every
/// non-Interior node (flat, arc, corner) is a boundary value.
class HarmonicExtension {
public:
    explicit HarmonicExtension(const Grid& grid);
    ~HarmonicExtension();
    HarmonicExtension(const HarmonicExtension&) = delete;
    HarmonicExtension& operator=(const HarmonicExtension&) = delete;

    const Grid& grid() const { return grid_; }

    /// Replaces the Interior entries of u by the 5-point harmonic function
    /// with u's values on all other nodes.
    void extend(std::span<double> u) const;

    /// Solution restricted to Interior nodes for a right-hand side given per
    /// Interior slot (slot order = grid.interior_nodes()).
    std::vector<double> solve_slots(const std::vector<double>& rhs) const;

    /// Interior slot of a node, or -1.
    long slot(NodeIndex k) const { return slot_[k]; }

private:
    struct Impl;
    const Grid& grid_;
    std::vector<long> slot_;
    std::unique_ptr<Impl> impl_;
};

/// The flat-boundary reduction of the Dirichlet problem: the first inward
/// layer u(h, x2_j) of the harmonic extension is P b + q, where b holds the
/// flat-node values and q depends only on the arc data. P is dense,
/// entrywise nonnegative, with row sums <= 1.
class FlatBoundaryKernel {
public:
    explicit FlatBoundaryKernel(const HarmonicExtension& ext);

    std::size_t size() const { return n_; }
    std::span<const double> row(std::size_t j) const { return {p_.data() + j * n_, n_}; }

    /// q for the given node values (only Dirichlet entries are read).
    std::vector<double> offset(std::span<const double> arc_values) const;

private:
    const HarmonicExtension& ext_;
    std::size_t n_;
    std::vector<double> p_;
};

/// Lazily built, shareable per-grid factorizations. Thread-safe.
class SolverWorkspace {
public:
    explicit SolverWorkspace(const Grid& grid) : grid_(grid) {}

    const Grid& grid() const { return grid_; }
    const HarmonicExtension& extension() const;
    const FlatBoundaryKernel& kernel() const;

private:
    const Grid& grid_;
    mutable std::once_flag ext_once_, kernel_once_;
    mutable std::unique_ptr<HarmonicExtension> ext_;
    mutable std::unique_ptr<FlatBoundaryKernel> kernel_;
};

}  // namespace dnl
