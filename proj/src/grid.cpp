#include "dnl/grid.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace dnl {

std::string_view to_string(NodeRole role) {
    switch (role) {
        case NodeRole::Interior: return "interior";
        case NodeRole::FlatBoundary: return "flat";
        case NodeRole::OuterArc: return "arc";
        case NodeRole::Corner: return "corner";
    }
    return "?";
}

namespace {

int isqrt(long long v) {
    auto r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return static_cast<int>(r);
}

}  // namespace

Grid Grid::with_resolution(int n) {
    if (n < 4) throw std::invalid_argument("grid resolution must be at least 4");
    Grid g;
    g.n_ = n;
    g.h_ = 1.0 / n;
    const long long n2 = static_cast<long long>(n) * n;

    g.column_extent_.resize(n + 1);
    g.column_start_.resize(n + 2);
    std::size_t count = 0;
    for (int i = 0; i <= n; ++i) {
        g.column_extent_[i] = isqrt(n2 - static_cast<long long>(i) * i);
        g.column_start_[i] = count;
        count += 2 * static_cast<std::size_t>(g.column_extent_[i]) + 1;
    }
    g.column_start_[n + 1] = count;

    g.i_.reserve(count);
    g.j_.reserve(count);
    for (int i = 0; i <= n; ++i)
        for (int j = -g.column_extent_[i]; j <= g.column_extent_[i]; ++j) {
            g.i_.push_back(i);
            g.j_.push_back(j);
        }

    g.nb_.resize(count);
    g.role_.resize(count);
    for (NodeIndex k = 0; k < count; ++k) {
        const int i = g.i_[k], j = g.j_[k];
        auto lookup = [&](int a, int b) { return g.find(a, b).value_or(kNoNode); };
        g.nb_[k] = {lookup(i + 1, j), lookup(i - 1, j), lookup(i, j + 1), lookup(i, j - 1)};

        NodeRole role;
        if (i == 0) {
            role = (std::abs(j) == n) ? NodeRole::Corner : NodeRole::FlatBoundary;
        } else {
            bool full = true;
            for (NodeIndex q : g.nb_[k]) full = full && q != kNoNode;
            role = full ? NodeRole::Interior : NodeRole::OuterArc;
        }
        g.role_[k] = role;
        switch (role) {
            case NodeRole::Interior: g.interior_.push_back(k); break;
            case NodeRole::FlatBoundary: g.flat_.push_back(k); break;
            default: g.arc_.push_back(k); break;
        }
    }
    return g;
}

int Grid::column_extent(int i) const {
    if (i < 0 || i > n_) return -1;
    return column_extent_[i];
}

std::optional<NodeIndex> Grid::find(int i, int j) const {
    if (i < 0 || i > n_) return std::nullopt;
    const int e = column_extent_[i];
    if (j < -e || j > e) return std::nullopt;
    return column_start_[i] + static_cast<std::size_t>(j + e);
}

NodeIndex Grid::at(int i, int j) const {
    auto k = find(i, j);
    if (!k) throw std::out_of_range("no lattice node (" + std::to_string(i) + "," + std::to_string(j) + ")");
    return *k;
}

Grid build_half_disc_grid(double h) {
    if (!(h > 0.0) || h > 0.125 + 1e-15)
        throw std::invalid_argument("grid spacing must satisfy 0 < h <= 1/8");
    const double inv = 1.0 / h;
    const double n = std::round(inv);
    if (std::abs(inv - n) > 1e-9 * inv)
        throw std::invalid_argument("1/h must be an integer");
    return Grid::with_resolution(static_cast<int>(n));
}

Point project_to_arc(const Grid& grid, NodeIndex node) {
    const NodeRole role = grid.role(node);
    if (role != NodeRole::OuterArc && role != NodeRole::Corner)
        throw std::invalid_argument("arc projection requested for a non-arc node");
    const Point p = grid.point(node);
    const double r = std::hypot(p.x1, p.x2);
    return {p.x1 / r, p.x2 / r};
}

void write_grid_csv(std::ostream& out, const Grid& grid) {
    out << "i,j,x1,x2,role\n";
    char buf[96];
    for (NodeIndex k = 0; k < grid.size(); ++k) {
        const Point p = grid.point(k);
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,", grid.i(k), grid.j(k), p.x1, p.x2);
        out << buf << to_string(grid.role(k)) << '\n';
    }
}

}  // namespace dnl
