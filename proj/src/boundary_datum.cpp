#include "dnl/boundary_datum.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dnl/expression.hpp"

namespace dnl {

BoundaryDatum::BoundaryDatum(Evaluator fn, std::string description)
    : fn_(std::move(fn)), description_(std::move(description)) {}

BoundaryDatum BoundaryDatum::from_expression(const std::string& text) {
    Expression e = Expression::parse(text);
    return BoundaryDatum([e](Point p) { return e(p.x1, p.x2); }, text);
}

BoundaryDatum BoundaryDatum::from_table(std::vector<std::pair<double, double>> samples,
                                        std::string description) {
    if (samples.size() < 2) throw std::invalid_argument("boundary table needs at least two samples");
    std::sort(samples.begin(), samples.end());
    constexpr double half_pi = std::numbers::pi / 2;
    if (samples.front().first > -half_pi + 1e-9 || samples.back().first < half_pi - 1e-9)
        throw std::invalid_argument("boundary table must cover arc angles [-pi/2, pi/2]");
    for (std::size_t k = 1; k < samples.size(); ++k)
        if (samples[k].first == samples[k - 1].first)
            throw std::invalid_argument("boundary table has a repeated angle");
    for (const auto& [a, v] : samples)
        if (!std::isfinite(a) || !std::isfinite(v)) throw std::invalid_argument("boundary table has a non-finite entry");

    auto table = std::make_shared<const std::vector<std::pair<double, double>>>(std::move(samples));
    return BoundaryDatum(
        [table](Point p) {
            const auto& t = *table;
            const double phi = std::clamp(std::atan2(p.x2, p.x1), t.front().first, t.back().first);
            auto hi = std::upper_bound(t.begin(), t.end(), phi,
                                       [](double a, const std::pair<double, double>& s) { return a < s.first; });
            if (hi == t.end()) return t.back().second;
            if (hi == t.begin()) return t.front().second;
            auto lo = hi - 1;
            const double w = (phi - lo->first) / (hi->first - lo->first);
            return (1 - w) * lo->second + w * hi->second;
        },
        std::move(description));
}

BoundaryDatum BoundaryDatum::read_table(std::istream& in, std::string description) {
    std::vector<std::pair<double, double>> samples;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        double a, v;
        if (!(ls >> a)) continue;
        std::string rest;
        if (!(ls >> v) || (ls >> rest))
            throw std::invalid_argument("boundary table line " + std::to_string(lineno) + " must have two numbers");
        samples.emplace_back(a, v);
    }
    return from_table(std::move(samples), std::move(description));
}

std::vector<double> BoundaryDatum::arc_values(const Grid& grid) const {
    std::vector<double> v(grid.size(), 0.0);
    for (NodeIndex k : grid.arc_nodes()) {
        v[k] = fn_(project_to_arc(grid, k));
        if (!std::isfinite(v[k])) throw std::invalid_argument("boundary datum is not finite on the arc");
    }
    return v;
}

BoundaryDatum BoundaryDatum::shifted(double c) const {
    Evaluator f = fn_;
    std::ostringstream d;
    d.precision(17);
    d << "(" << description_ << ")+" << c;
    return BoundaryDatum([f, c](Point p) { return f(p) + c; }, d.str());
}

}  // namespace dnl
