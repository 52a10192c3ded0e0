#include "dnl/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "dnl/analysis.hpp"
#include "dnl/harmonic.hpp"
#include "dnl/operators.hpp"
#include "dnl/parallel.hpp"

namespace dnl {

Field tangential_sup_convolution(const Grid& grid, const Field& f, double eps) {
    f.check_against(grid);
    if (!(eps > 0.0)) throw std::invalid_argument("sup-convolution needs eps > 0");
    const double h = grid.spacing();
    std::vector<double> out(grid.size());
    parallel_for(grid.size(), [&](std::size_t k) {
        const int i = grid.i(k), j = grid.j(k);
        const int ext = grid.column_extent(i);
        double best = f[k];
        for (int jj = -ext; jj <= ext; ++jj) {
            const double s = (jj - j) * h;
            best = std::max(best, f[grid.at(i, jj)] - s * s / (2.0 * eps));
        }
        out[k] = best;
    });
    return Field(std::move(out));
}

Field tangential_inf_convolution(const Grid& grid, const Field& f, double eps) {
    std::vector<double> neg(f.values().begin(), f.values().end());
    for (double& v : neg) v = -v;
    const Field t = tangential_sup_convolution(grid, Field(std::move(neg)), eps);
    std::vector<double> out(t.values().begin(), t.values().end());
    for (double& v : out) v = -v;
    return Field(std::move(out));
}

Field full_sup_convolution(const Grid& grid, const Field& f, double eps) {
    f.check_against(grid);
    if (!(eps > 0.0)) throw std::invalid_argument("sup-convolution needs eps > 0");
    std::vector<double> out(grid.size());
    parallel_for(grid.size(), [&](std::size_t k) {
        const Point x = grid.point(k);
        double best = f[k];
        for (NodeIndex y = 0; y < grid.size(); ++y) {
            const Point p = grid.point(y);
            const double d2 = (p.x1 - x.x1) * (p.x1 - x.x1) + (p.x2 - x.x2) * (p.x2 - x.x2);
            best = std::max(best, f[y] - d2 / (2.0 * eps));
        }
        out[k] = best;
    });
    return Field(std::move(out));
}

HarmonicLift harmonic_lift(const Grid& grid, const Field& f, std::optional<double> tol) {
    f.check_against(grid);
    const double h = grid.spacing();
    const double t = tol.value_or(1e-9 * tolerance_scale(f.scale()) / (h * h));
    HarmonicLift lift;
    lift.min_laplacian = INFINITY;
    for (NodeIndex k : grid.interior_nodes()) {
        const double lap = laplacian_residual(grid, f, k);
        if (lap < lift.min_laplacian) {
            lift.min_laplacian = lap;
            lift.worst = k;
        }
    }
    if (grid.interior_nodes().empty()) lift.min_laplacian = 0.0;
    lift.subharmonic = lift.min_laplacian >= -t;
    if (lift.subharmonic) lift.worst.reset();
    const HarmonicExtension ext(grid);
    std::vector<double> u(f.values().begin(), f.values().end());
    ext.extend(u);
    lift.field = Field(std::move(u));
    return lift;
}

std::string to_string(ComparisonStatus status) {
    switch (status) {
        case ComparisonStatus::Pass: return "pass";
        case ComparisonStatus::Fail: return "fail";
        case ComparisonStatus::PreconditionViolated: return "precondition_violated";
    }
    return "?";
}

ComparisonReport comparison_check(const Grid& grid, const Field& sub, const Field& super, double slack,
                                  std::optional<double> residual_tol) {
    sub.check_against(grid);
    super.check_against(grid);
    const double h = grid.spacing();
    const double s = tolerance_scale(std::max(sub.scale(), super.scale()));
    const double tol = residual_tol.value_or(1e-6 * s);
    ComparisonReport rep;

    double sub_lap = 0.0, super_lap = 0.0;
    for (NodeIndex k : grid.interior_nodes()) {
        sub_lap = std::min(sub_lap, h * h * laplacian_residual(grid, sub, k));
        super_lap = std::max(super_lap, h * h * laplacian_residual(grid, super, k));
    }
    double sub_bd = 0.0, super_bd = 0.0;
    for (NodeIndex k : grid.flat_nodes()) {
        sub_bd = std::min(sub_bd, h * boundary_residual(grid, sub, k));
        super_bd = std::max(super_bd, h * boundary_residual(grid, super, k));
    }
    if (sub_lap < -tol) rep.preconditions.push_back("sub is not subharmonic in the interior");
    if (sub_bd < -tol) rep.preconditions.push_back("sub violates the subsolution boundary condition");
    if (super_lap > tol) rep.preconditions.push_back("super is not superharmonic in the interior");
    if (super_bd > tol) rep.preconditions.push_back("super violates the supersolution boundary condition");
    if (!bmp_all_intervals(boundary_trace(grid, sub), tol).pass)
        rep.preconditions.push_back("sub violates the boundary maximum principle");
    for (NodeIndex k : grid.arc_nodes())
        if (sub[k] > super[k] + slack) {
            rep.preconditions.push_back("sub exceeds super on the arc");
            break;
        }

    rep.max_violation = -INFINITY;
    for (NodeIndex k = 0; k < grid.size(); ++k) {
        const double d = sub[k] - super[k];
        if (d > rep.max_violation) {
            rep.max_violation = d;
            rep.worst = k;
        }
    }
    rep.ordering_holds = rep.max_violation <= slack;
    if (!rep.preconditions.empty())
        rep.status = ComparisonStatus::PreconditionViolated;
    else
        rep.status = rep.ordering_holds ? ComparisonStatus::Pass : ComparisonStatus::Fail;
    return rep;
}

}  // namespace dnl
