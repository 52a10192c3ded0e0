#include "dnl/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "dnl/operators.hpp"

namespace dnl {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct ArcData {
    std::vector<double> values;  // grid-indexed, Dirichlet entries set
    double scale = 0.0;
    double min = 0.0;
    double max = 0.0;
};

ArcData arc_data(const Grid& grid, const BoundaryDatum& g) {
    ArcData a{g.arc_values(grid), 0.0, INFINITY, -INFINITY};
    for (NodeIndex k : grid.arc_nodes()) {
        a.scale = std::max(a.scale, std::abs(a.values[k]));
        a.min = std::min(a.min, a.values[k]);
        a.max = std::max(a.max, a.values[k]);
    }
    return a;
}

double resolve_tol(const SolverOptions& opt, const ArcData& arc) {
    const double tol = opt.tol.value_or(1e-10 * tolerance_scale(arc.scale));
    if (!(tol > 0.0)) throw std::invalid_argument("solver tolerance must be positive");
    return tol;
}

double resolve_omega(const SolverOptions& opt, const Grid& grid) {
    const double omega = opt.omega.value_or(2.0 / (1.0 + 1.7 * grid.spacing()));
    if (!(omega > 0.0 && omega < 2.0)) throw std::invalid_argument("SOR factor must lie in (0, 2)");
    return omega;
}

double interior_residual(const Grid& grid, std::span<const double> u) {
    double r = 0.0;
    for (NodeIndex k : grid.interior_nodes()) r = std::max(r, std::abs(laplacian_residual(grid, u, k)));
    return r;
}

std::vector<double> initial_iterate(const Grid& grid, const ArcData& arc, double fill) {
    std::vector<double> u = arc.values;
    for (NodeIndex k = 0; k < grid.size(); ++k)
        if (!grid.is_dirichlet(k)) u[k] = fill;
    return u;
}

double flat_target(const Grid& grid, const std::vector<double>& u, NodeIndex k, int order) {
    const NodeIndex e = grid.east(k);
    if (order == 1) return u[e];
    return (4.0 * u[e] - u[grid.east(e)]) / 3.0;
}

// Lexicographic (projected) SOR shared by the Neumann and Signorini solvers.
template <class FlatProjection>
Solution relax(const Grid& grid, const ArcData& arc, const SolverOptions& opt, std::string method,
               double fill, FlatProjection project) {
    const auto t0 = Clock::now();
    if (opt.normal_order != 1 && opt.normal_order != 2)
        throw std::invalid_argument("normal_order must be 1 or 2");
    const double tol = resolve_tol(opt, arc);
    const double omega = resolve_omega(opt, grid);
    std::vector<double> u = initial_iterate(grid, arc, fill);

    SolverReport rep;
    rep.method = std::move(method);
    rep.tolerance = tol;
    for (long sweep = 1; sweep <= opt.max_sweeps; ++sweep) {
        double max_update = 0.0;
        for (NodeIndex k = 0; k < grid.size(); ++k) {
            const NodeRole role = grid.role(k);
            double next;
            if (role == NodeRole::Interior) {
                const double avg =
                    0.25 * (u[grid.east(k)] + u[grid.west(k)] + u[grid.north(k)] + u[grid.south(k)]);
                next = u[k] + omega * (avg - u[k]);
            } else if (role == NodeRole::FlatBoundary) {
                next = project(u[k] + omega * (flat_target(grid, u, k, opt.normal_order) - u[k]));
            } else {
                continue;
            }
            max_update = std::max(max_update, std::abs(next - u[k]));
            u[k] = next;
        }
        rep.iterations = sweep;
        rep.final_max_update = max_update;
        if (max_update < tol) {
            rep.converged = true;
            break;
        }
    }
    rep.interior_residual = interior_residual(grid, u);
    rep.wall_time_s = seconds_since(t0);
    Field f(std::move(u));
    if (!rep.converged)
        throw SolverFailure(rep.method + " solver did not converge within " + std::to_string(opt.max_sweeps) +
                                " sweeps",
                            rep, std::move(f));
    return {std::move(f), rep};
}

}  // namespace

double corner_max(const Grid& grid, const BoundaryDatum& g) {
    return std::max(g(project_to_arc(grid, grid.lower_corner())), g(project_to_arc(grid, grid.upper_corner())));
}

Solution solve_neumann(const SolverWorkspace& ws, const BoundaryDatum& g, const SolverOptions& opt) {
    const Grid& grid = ws.grid();
    const ArcData arc = arc_data(grid, g);
    Solution s = relax(grid, arc, opt, "neumann", 0.5 * (arc.min + arc.max), [](double v) { return v; });
    double r = 0.0;
    for (NodeIndex k : grid.flat_nodes())
        r = std::max(r, std::abs(inward_normal_difference(grid, s.field, k, opt.normal_order)));
    s.report.boundary_residual = r;
    return s;
}

Solution solve_signorini(const SolverWorkspace& ws, const BoundaryDatum& g, double c, const SolverOptions& opt) {
    const Grid& grid = ws.grid();
    const double cmin = corner_max(grid, g);
    const ArcData arc = arc_data(grid, g);
    if (!(c >= cmin - 1e-12 * tolerance_scale(arc.scale)))
        throw std::invalid_argument("obstacle level below the corner data");
    Solution s = relax(grid, arc, opt, "signorini", std::min(c, 0.5 * (arc.min + arc.max)),
                       [c](double v) { return std::min(c, v); });
    double r = 0.0;
    for (NodeIndex k : grid.flat_nodes()) {
        const double dn = inward_normal_difference(grid, s.field, k, opt.normal_order);
        r = std::max(r, std::abs(std::min(c - s.field[k], dn)));
    }
    s.report.boundary_residual = r;
    return s;
}

Solution solve_minimal_supersolution(const SolverWorkspace& ws, const BoundaryDatum& g, const SolverOptions& opt) {
    const auto t0 = Clock::now();
    const Grid& grid = ws.grid();
    const ArcData arc = arc_data(grid, g);
    const double tol = resolve_tol(opt, arc);
    const FlatBoundaryKernel& P = ws.kernel();
    const std::vector<double> q = P.offset(arc.values);
    const std::size_t nf = P.size();
    const double lower = arc.values[grid.lower_corner()];
    const double upper = arc.values[grid.upper_corner()];
    // Iterates are subsolutions, so every candidate dominates the current
    // value up to roundoff in the kernel products.
    const double guard = 1e-8 * tolerance_scale(arc.scale);

    std::vector<double> b(nf, arc.min);
    SolverReport rep;
    rep.method = "minimal";
    rep.tolerance = tol;
    for (long sweep = 1; sweep <= opt.max_sweeps; ++sweep) {
        double max_update = 0.0;
        for (std::size_t j = 0; j < nf; ++j) {
            const auto row = P.row(j);
            const double inward = std::inner_product(row.begin(), row.end(), b.begin(), q[j]);
            const double left = j == 0 ? lower : b[j - 1];
            const double right = j + 1 == nf ? upper : b[j + 1];
            const double candidate = std::min(inward, std::max(left, right));
            if (candidate < b[j] - guard) {
                rep.monotone = false;
                throw std::logic_error("minimal supersolution ascent lost monotonicity");
            }
            if (candidate > b[j]) {
                max_update = std::max(max_update, candidate - b[j]);
                b[j] = candidate;
            }
        }
        rep.iterations = sweep;
        rep.final_max_update = max_update;
        if (max_update < tol) {
            rep.converged = true;
            break;
        }
    }

    std::vector<double> u = arc.values;
    const auto& flat = grid.flat_nodes();
    for (std::size_t j = 0; j < nf; ++j) u[flat[j]] = b[j];
    ws.extension().extend(u);
    rep.interior_residual = interior_residual(grid, u);
    double r = 0.0;
    for (NodeIndex k : flat) r = std::max(r, std::abs(boundary_residual(grid, u, k)));
    rep.boundary_residual = r;
    rep.wall_time_s = seconds_since(t0);
    Field f(std::move(u));
    if (!rep.converged)
        throw SolverFailure("minimal supersolution did not converge within " + std::to_string(opt.max_sweeps) +
                                " sweeps",
                            rep, std::move(f));
    return {std::move(f), rep};
}

namespace {

SolverOptions with_tol(std::optional<double> tol) {
    SolverOptions opt;
    opt.tol = tol;
    return opt;
}

}  // namespace

Solution solve_neumann(const Grid& grid, const BoundaryDatum& g, std::optional<double> tol) {
    SolverWorkspace ws(grid);
    return solve_neumann(ws, g, with_tol(tol));
}

Solution solve_signorini(const Grid& grid, const BoundaryDatum& g, double c, std::optional<double> tol) {
    SolverWorkspace ws(grid);
    return solve_signorini(ws, g, c, with_tol(tol));
}

Solution solve_minimal_supersolution(const Grid& grid, const BoundaryDatum& g, std::optional<double> tol) {
    SolverWorkspace ws(grid);
    return solve_minimal_supersolution(ws, g, with_tol(tol));
}

}  // namespace dnl
