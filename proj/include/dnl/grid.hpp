#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

namespace dnl {

using NodeIndex = std::size_t;
inline constexpr NodeIndex kNoNode = static_cast<NodeIndex>(-1);

enum class NodeRole : std::uint8_t { Interior, FlatBoundary, OuterArc, Corner };

std::string_view to_string(NodeRole role);

struct Point {
    double x1 = 0.0;
    double x2 = 0.0;
};

/// Lattice nodes (i*h, j*h) of the closed half disc {x1 >= 0, |x| <= 1}.
///
/// Nodes are stored lexicographically in (i, j): all of column i = 0 first
/// (j ascending), then i = 1, and so on. The flat boundary {x1 = 0} is the
/// column i = 0 without its two endpoints (0, +-1), which are Corner nodes
/// and carry arc data. A node with i >= 1 is Interior when its whole
/// 5-point stencil lies in the closed half disc, otherwise OuterArc.
///
/// Immutable after construction.
class Grid {
public:
    /// Grid with spacing 1/n. Requires n >= 4; build_half_disc_grid applies
    /// the stricter production bound h <= 1/8.
    static Grid with_resolution(int n);

    int resolution() const { return n_; }
    double spacing() const { return h_; }
    std::size_t size() const { return i_.size(); }

    int i(NodeIndex k) const { return i_[k]; }
    int j(NodeIndex k) const { return j_[k]; }
    Point point(NodeIndex k) const { return {i_[k] * h_, j_[k] * h_}; }
    NodeRole role(NodeIndex k) const { return role_[k]; }

    /// Largest |j| present in column i, or -1 when the column is empty.
    int column_extent(int i) const;

    std::optional<NodeIndex> find(int i, int j) const;
    NodeIndex at(int i, int j) const;  // throws when absent

    // 5-point neighbours; kNoNode when absent. east = +x1, north = +x2.
    NodeIndex east(NodeIndex k) const { return nb_[k][0]; }
    NodeIndex west(NodeIndex k) const { return nb_[k][1]; }
    NodeIndex north(NodeIndex k) const { return nb_[k][2]; }
    NodeIndex south(NodeIndex k) const { return nb_[k][3]; }

    /// Flat-boundary nodes ordered by ascending x2.
    const std::vector<NodeIndex>& flat_nodes() const { return flat_; }
    const std::vector<NodeIndex>& interior_nodes() const { return interior_; }
    /// OuterArc and Corner nodes (the Dirichlet layer), lexicographic.
    const std::vector<NodeIndex>& arc_nodes() const { return arc_; }

    /// Corner node indices: (0,-1) and (0,+1).
    NodeIndex lower_corner() const { return at(0, -n_); }
    NodeIndex upper_corner() const { return at(0, n_); }

    bool is_dirichlet(NodeIndex k) const {
        return role_[k] == NodeRole::OuterArc || role_[k] == NodeRole::Corner;
    }

private:
    Grid() = default;

    int n_ = 0;
    double h_ = 0.0;
    std::vector<int> i_, j_;
    std::vector<NodeRole> role_;
    std::vector<std::array<NodeIndex, 4>> nb_;
    std::vector<std::size_t> column_start_;
    std::vector<int> column_extent_;
    std::vector<NodeIndex> flat_, interior_, arc_;
};

/// Validates 0 < h <= 1/8 with 1/h integral (to 1e-9 relative), then builds.
Grid build_half_disc_grid(double h);

/// Radial projection of an OuterArc or Corner node onto the unit circle.
Point project_to_arc(const Grid& grid, NodeIndex node);

/// CSV with header `i,j,x1,x2,role`.
void write_grid_csv(std::ostream& out, const Grid& grid);

}  // namespace dnl
