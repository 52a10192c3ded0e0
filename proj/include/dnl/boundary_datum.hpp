#pragma once

#include <functional>
#include <istream>
#include <string>
#include <vector>

#include "dnl/grid.hpp"

namespace dnl {

/// Dirichlet data g on the closed arc {|x| = 1, x1 >= 0}.
class BoundaryDatum {
public:
    using Evaluator = std::function<double(Point)>;

    BoundaryDatum(Evaluator fn, std::string description);

    /// Closed-form expression in x1, x2 (see Expression).
    static BoundaryDatum from_expression(const std::string& text);

    /// Samples (arc angle phi = atan2(x2, x1) in [-pi/2, pi/2], value),
    /// linearly interpolated in phi. Must cover the whole closed arc.
    static BoundaryDatum from_table(std::vector<std::pair<double, double>> samples,
                                    std::string description = "table");

    /// Two whitespace- or comma-separated columns per line; '#' starts a comment.
    static BoundaryDatum read_table(std::istream& in, std::string description = "table");

    double operator()(Point p) const { return fn_(p); }
    const std::string& description() const { return description_; }

    /// Value at each Dirichlet (OuterArc/Corner) node, indexed like the grid;
    /// zero elsewhere.
    std::vector<double> arc_values(const Grid& grid) const;

    /// BoundaryDatum(g + c).
    BoundaryDatum shifted(double c) const;

private:
    Evaluator fn_;
    std::string description_;
};

}  // namespace dnl
