#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "dnl/boundary_datum.hpp"
#include "dnl/field.hpp"
#include "dnl/grid.hpp"
#include "dnl/harmonic.hpp"

namespace dnl {

struct SolverReport {
    std::string method;
    long iterations = 0;
    double final_max_update = 0.0;
    double interior_residual = 0.0;  // max |laplacian_residual| (raw)
    double boundary_residual = 0.0;  // method-specific flat-node residual (raw)
    double wall_time_s = 0.0;
    bool monotone = true;  // every sweep moved values in one direction (minimal supersolution only)
    bool converged = false;
    double tolerance = 0.0;
};

/// Thrown when a solver exhausts its sweep budget; carries the report and
/// the last iterate.
class SolverFailure : public std::runtime_error {
public:
    SolverFailure(const std::string& what, SolverReport report, Field last)
        : std::runtime_error(what), report_(std::move(report)), last_(std::move(last)) {}
    const SolverReport& report() const { return report_; }
    const Field& last_iterate() const { return last_; }

private:
    SolverReport report_;
    Field last_;
};

struct SolverOptions {
    /// Absolute stop tolerance on the max update; default 1e-10 * max|g|.
    std::optional<double> tol;
    long max_sweeps = 1'000'000;
    /// SOR factor for the Neumann and Signorini sweeps; default is the
    /// near-optimal 2 / (1 + 1.7 h) for the half disc.
    std::optional<double> omega;
    /// Flat update of the Neumann/Signorini sweeps: 1 -> u(0) = u(h),
    /// 2 -> ghost formula u(0) = (4u(h) - u(2h)) / 3.
    int normal_order = 1;
};

struct Solution {
    Field field;
    SolverReport report;
};

/// Maximal subsolution: harmonic, zero inward difference on the flat
/// boundary, arc data imposed strongly. Lexicographic SOR.
Solution solve_neumann(const SolverWorkspace& ws, const BoundaryDatum& g, const SolverOptions& opt = {});
Solution solve_neumann(const Grid& grid, const BoundaryDatum& g, std::optional<double> tol = std::nullopt);

/// Thin obstacle from above: u <= c, inward difference >= 0, complementary.
/// Projected lexicographic SOR. Requires c >= g at both corners.
Solution solve_signorini(const SolverWorkspace& ws, const BoundaryDatum& g, double c,
                         const SolverOptions& opt = {});
Solution solve_signorini(const Grid& grid, const BoundaryDatum& g, double c,
                         std::optional<double> tol = std::nullopt);

/// Perron minimal supersolution: the least discrete supersolution with the
/// given arc data. Every flat node of the result satisfies
///   u(0,x2) = min(u(h,x2), max(u(0,x2-h), u(0,x2+h)))
/// with the interior exactly harmonic.
///
/// Computed by monotone ascent from the constant min g (a subsolution):
/// Gauss-Seidel sweeps over the flat nodes of the reduced problem
/// b = min(P b + q, max(b_left, b_right)), where P b + q is the inward layer
/// of the harmonic extension. Each sweep is nondecreasing and stays below
/// every discrete supersolution, so the limit is the least fixed point.
Solution solve_minimal_supersolution(const SolverWorkspace& ws, const BoundaryDatum& g,
                                     const SolverOptions& opt = {});
Solution solve_minimal_supersolution(const Grid& grid, const BoundaryDatum& g,
                                     std::optional<double> tol = std::nullopt);

/// Max of g over the two corners, the smallest admissible obstacle.
double corner_max(const Grid& grid, const BoundaryDatum& g);

}  // namespace dnl
