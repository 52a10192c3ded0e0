#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dnl/field.hpp"
#include "dnl/grid.hpp"

namespace dnl {

/// T^eps f(x1, x2) = max_k f(x1, x2 + k h) - (k h)^2 / (2 eps), shifts
/// restricted to nodes present in the same column. Throws unless eps > 0.
Field tangential_sup_convolution(const Grid& grid, const Field& f, double eps);
/// -T^eps(-f).
Field tangential_inf_convolution(const Grid& grid, const Field& f, double eps);

/// max over all nodes y of f(y) - |x - y|^2 / (2 eps). O(size^2), for checks.
Field full_sup_convolution(const Grid& grid, const Field& f, double eps);

struct HarmonicLift {
    Field field;
    bool subharmonic = true;      // every Interior Laplacian >= -tol
    double min_laplacian = 0.0;   // raw
    std::optional<NodeIndex> worst;
};

/// Dirichlet solve on the Interior nodes with f's values everywhere else.
/// The subharmonicity of f is checked with tol = 1e-9 scale / h^2 by
/// default; the lift is computed either way.
HarmonicLift harmonic_lift(const Grid& grid, const Field& f, std::optional<double> tol = std::nullopt);

enum class ComparisonStatus { Pass, Fail, PreconditionViolated };

std::string to_string(ComparisonStatus status);

struct ComparisonReport {
    ComparisonStatus status = ComparisonStatus::Pass;
    /// sub <= super + slack at every node, regardless of preconditions.
    bool ordering_holds = true;
    std::optional<NodeIndex> worst;
    double max_violation = 0.0;  // max of sub - super over all nodes
    /// Failed hypotheses, one line each, e.g. "sub violates the boundary maximum principle".
    std::vector<std::string> preconditions;
};

/// Checks the hypotheses (sub a discrete subsolution satisfying the boundary
/// maximum principle, super a discrete supersolution, ordered on the arc),
/// then the ordering. Residual checks use |h^2 laplacian| and h * boundary
/// residual against residual_tol (default 1e-6 scale); the boundary maximum
/// principle of sub is checked with the same tolerance, not with slack.
ComparisonReport comparison_check(const Grid& grid, const Field& sub, const Field& super, double slack,
                                  std::optional<double> residual_tol = std::nullopt);

}  // namespace dnl
