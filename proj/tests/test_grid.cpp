#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dnl/grid.hpp"

using namespace dnl;

namespace {

// Independent enumeration of the lattice and its roles.
std::map<std::pair<int, int>, NodeRole> brute_force_roles(int n) {
    auto inside = [n](int i, int j) { return i >= 0 && i * i + j * j <= n * n; };
    std::map<std::pair<int, int>, NodeRole> roles;
    for (int i = 0; i <= n; ++i)
        for (int j = -n; j <= n; ++j) {
            if (!inside(i, j)) continue;
            NodeRole r;
            if (i == 0)
                r = std::abs(j) == n ? NodeRole::Corner : NodeRole::FlatBoundary;
            else if (inside(i + 1, j) && inside(i - 1, j) && inside(i, j + 1) && inside(i, j - 1))
                r = NodeRole::Interior;
            else
                r = NodeRole::OuterArc;
            roles[{i, j}] = r;
        }
    return roles;
}

}  // namespace

TEST_CASE("roles match a brute-force enumeration") {
    for (int n : {4, 8, 13, 32}) {
        const Grid g = Grid::with_resolution(n);
        const auto ref = brute_force_roles(n);
        REQUIRE(g.size() == ref.size());
        for (NodeIndex k = 0; k < g.size(); ++k) {
            const auto it = ref.find({g.i(k), g.j(k)});
            REQUIRE(it != ref.end());
            CHECK(g.role(k) == it->second);
        }
    }
}

TEST_CASE("h = 1/8 node counts") {
    const Grid g = build_half_disc_grid(0.125);
    std::size_t flat = 0, corner = 0;
    for (NodeIndex k = 0; k < g.size(); ++k) {
        flat += g.role(k) == NodeRole::FlatBoundary;
        corner += g.role(k) == NodeRole::Corner;
    }
    CHECK(flat == 15);
    CHECK(corner == 2);
    CHECK(g.flat_nodes().size() == 15);
    CHECK(g.point(g.upper_corner()).x2 == doctest::Approx(1.0));
}

TEST_CASE("lexicographic order and neighbours") {
    const Grid g = Grid::with_resolution(16);
    for (NodeIndex k = 1; k < g.size(); ++k) {
        const bool ordered = g.i(k - 1) < g.i(k) || (g.i(k - 1) == g.i(k) && g.j(k - 1) < g.j(k));
        CHECK(ordered);
    }
    for (NodeIndex k : g.interior_nodes()) {
        CHECK(g.i(g.east(k)) == g.i(k) + 1);
        CHECK(g.j(g.north(k)) == g.j(k) + 1);
        CHECK(g.west(g.east(k)) == k);
        CHECK(g.south(g.north(k)) == k);
    }
    for (std::size_t m = 1; m < g.flat_nodes().size(); ++m)
        CHECK(g.point(g.flat_nodes()[m]).x2 > g.point(g.flat_nodes()[m - 1]).x2);
}

TEST_CASE("mirror symmetry and refinement nesting") {
    const Grid g = Grid::with_resolution(32);
    for (NodeIndex k = 0; k < g.size(); ++k) {
        const auto m = g.find(g.i(k), -g.j(k));
        REQUIRE(m);
        CHECK(g.role(*m) == g.role(k));
    }
    const Grid fine = Grid::with_resolution(64);
    for (NodeIndex k = 0; k < g.size(); ++k) CHECK(fine.find(2 * g.i(k), 2 * g.j(k)).has_value());
}

TEST_CASE("spacing validation") {
    CHECK_THROWS_AS(build_half_disc_grid(1.0 / 3.0), std::invalid_argument);
    CHECK_THROWS_AS(build_half_disc_grid(0.25), std::invalid_argument);
    CHECK_THROWS_AS(build_half_disc_grid(0.0), std::invalid_argument);
    CHECK_THROWS_AS(build_half_disc_grid(-0.125), std::invalid_argument);
    CHECK_THROWS_AS(build_half_disc_grid(0.3), std::invalid_argument);
    CHECK(build_half_disc_grid(1.0 / 64).resolution() == 64);
}

TEST_CASE("projection onto the arc") {
    const Grid g = Grid::with_resolution(4);
    const Point c = project_to_arc(g, g.upper_corner());
    CHECK(c.x1 == doctest::Approx(0.0));
    CHECK(c.x2 == doctest::Approx(1.0));
    const Point e = project_to_arc(g, g.at(4, 0));
    CHECK(e.x1 == doctest::Approx(1.0));
    const NodeIndex k = g.at(3, 2);
    REQUIRE(g.role(k) == NodeRole::OuterArc);
    const Point p = project_to_arc(g, k);
    // 0.75 / sqrt(0.8125), 0.5 / sqrt(0.8125)
    CHECK(p.x1 == doctest::Approx(0.8320502943378437).epsilon(1e-14));
    CHECK(p.x2 == doctest::Approx(0.5547001962252291).epsilon(1e-14));
    CHECK_THROWS_AS(project_to_arc(g, g.at(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(project_to_arc(g, g.at(1, 0)), std::invalid_argument);

    const Grid f = Grid::with_resolution(32);
    for (NodeIndex a : f.arc_nodes()) {
        const Point q = project_to_arc(f, a);
        const Point x = f.point(a);
        CHECK(std::hypot(q.x1, q.x2) == doctest::Approx(1.0));
        CHECK(std::hypot(q.x1 - x.x1, q.x2 - x.x2) <= f.spacing() * std::sqrt(2.0));
    }
}

TEST_CASE("grid CSV") {
    const Grid g = Grid::with_resolution(4);
    std::ostringstream out;
    write_grid_csv(out, g);
    const std::string s = out.str();
    CHECK(s.rfind("i,j,x1,x2,role\n", 0) == 0);
    CHECK(s.find("0,-4,0,-1,corner\n") != std::string::npos);
    CHECK(s.find("1,0,0.25,0,interior\n") != std::string::npos);
    std::size_t lines = 0;
    for (char ch : s) lines += ch == '\n';
    CHECK(lines == g.size() + 1);
}
