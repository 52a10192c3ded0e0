#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "dnl/analysis.hpp"
#include "dnl/homogeneous.hpp"

using namespace dnl;

namespace {

Field closed_form(const Grid& g, Family f, int halves) {
    const HomogeneousSolution s(f, Kappa{halves});
    return Field::sample(g, [&](Point p) { return s(p); });
}

double example_form(Point p) { return -std::pow(std::complex<double>(p.x2, p.x1), 1.5).real(); }

// Quadratic-time oracle for the all-intervals boundary maximum principle.
bool bmp_brute_force(const std::vector<double>& v, double slack) {
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 2; b < v.size(); ++b)
            for (std::size_t m = a + 1; m < b; ++m)
                if (v[m] > std::max(v[a], v[b]) + slack) return false;
    return true;
}

}  // namespace

TEST_CASE("traces of linear fields") {
    const Grid g = Grid::with_resolution(32);
    const BoundaryTrace a = boundary_trace(g, Field::sample(g, [](Point p) { return p.x1; }));
    const BoundaryTrace b = boundary_trace(g, Field::sample(g, [](Point p) { return p.x2; }));
    for (std::size_t m = 0; m < a.size(); ++m) {
        CHECK(a.sigma[m] == doctest::Approx(1.0));
        CHECK(a.tau[m] == doctest::Approx(0.0));
        CHECK(std::abs(b.sigma[m]) < 1e-12);
        CHECK(b.tau[m] == doctest::Approx(1.0));
    }
    CHECK(b.lower_corner == doctest::Approx(-1.0));
}

TEST_CASE("trace of the closed form against its symbolic derivative") {
    const Grid g = Grid::with_resolution(128);
    const BoundaryTrace t = boundary_trace(g, Field::sample(g, example_form));
    for (std::size_t m = 0; m < t.size(); ++m) {
        const double x2 = t.x2[m];
        if (std::abs(x2) < 0.1) continue;
        if (x2 < 0)
            CHECK(t.sigma[m] == doctest::Approx(1.5 * std::sqrt(-x2)).epsilon(0.01));
        else
            CHECK(std::abs(t.sigma[m]) < 0.01);
    }
}

TEST_CASE("partition of closed forms") {
    const Grid g = Grid::with_resolution(128);
    const double h = g.spacing();
    SUBCASE("|x1|: all contact, one facet at 0") {
        const BoundaryTrace t = boundary_trace(g, closed_form(g, Family::AbsX1, 2));
        const BoundaryPartition p = extract_partition(t, h);
        CHECK(p.contact.size() == t.size());
        CHECK(p.noncontact.empty());
        CHECK(p.free_boundary.empty());
        REQUIRE(p.facets.size() == 1);
        CHECK(p.facets[0].value == doctest::Approx(0.0));
        CHECK(p.facets[0].touches_lower_corner);
        CHECK(p.facets[0].touches_upper_corner);
        CHECK(std::isinf(p.gap));
    }
    SUBCASE("x2: all noncontact") {
        const BoundaryTrace t = boundary_trace(g, Field::sample(g, [](Point p) { return p.x2; }));
        const BoundaryPartition p = extract_partition(t, h);
        CHECK(p.noncontact.size() == t.size());
        CHECK(p.facets.empty());
    }
    SUBCASE("Im^(3/2): contact x2 > 0, free boundary at 0") {
        const BoundaryTrace t = boundary_trace(g, closed_form(g, Family::ImPow, 3));
        const BoundaryPartition p = extract_partition(t, h);
        REQUIRE(p.free_boundary.size() == 1);
        // x2 = 0 sits on the zero level and may join the facet
        CHECK(std::abs(t.x2[p.free_boundary[0]]) <= h);
        for (std::size_t m : p.contact) CHECK(t.x2[m] >= 0.0);
        for (std::size_t m : p.noncontact) CHECK(t.x2[m] < 0.0);
        CHECK(p.contact.size() + p.noncontact.size() + p.free_boundary.size() == t.size());
        REQUIRE(p.facets.size() == 1);
        CHECK(p.facets[0].spread < 1e-12);
    }
    SUBCASE("two facet values and their gap") {
        // u = x1 (1 - x2^2) + step in x2: two level runs at -1 and 1
        auto f = [](Point p) { return p.x1 + (p.x2 < 0 ? -1.0 : 1.0); };
        const BoundaryTrace t = boundary_trace(g, Field::sample(g, f));
        const BoundaryPartition p = extract_partition(t, h);
        CHECK(p.facets.size() == 2);
        CHECK(p.distinct_values == 2);
        CHECK(p.gap == doctest::Approx(2.0));
    }
}

TEST_CASE("threshold calibration on the kappa = 3/2 profile") {
    // Free boundary node x2 = 0 must fall below eps, its contact neighbour above.
    for (int n : {64, 128, 256, 512}) {
        const Grid g = Grid::with_resolution(n);
        const BoundaryTrace t = boundary_trace(g, closed_form(g, Family::ImPow, 3));
        const std::size_t zero = static_cast<std::size_t>(n - 1);
        REQUIRE(t.x2[zero] == 0.0);
        const double sq = std::sqrt(g.spacing());
        const double at_gamma = std::min(t.sigma[zero], t.tau[zero]) / sq;
        const double next = t.sigma[zero + 1] / sq;
        CHECK(at_gamma == doctest::Approx(0.414).epsilon(0.01));
        CHECK(next > 1.0);
        CHECK(at_gamma < kTraceThresholdFactor);
        CHECK(next > kTraceThresholdFactor);
    }
}

TEST_CASE("even interpolation") {
    const Grid g = Grid::with_resolution(16);
    auto bil = [](Point p) { return 1 + 2 * p.x1 - p.x2 + 3 * p.x1 * p.x2; };
    const Field f = Field::sample(g, bil);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> U(-0.6, 0.6);
    for (int t = 0; t < 100; ++t) {
        const Point p{std::abs(U(rng)), U(rng)};
        CHECK(interpolate_even(g, f, p) == doctest::Approx(bil(p)));
        CHECK(interpolate_even(g, f, {-p.x1, p.x2}) == doctest::Approx(bil(p)));
    }
}

TEST_CASE("frequency of homogeneous fields") {
    const Grid g = Grid::with_resolution(256);
    const std::vector<double> radii = {0.1, 0.2, 0.3, 0.4};
    const FrequencyProfile a = almgren_frequency(g, closed_form(g, Family::AbsX1, 2), 0.0, radii);
    for (const auto& s : a.samples) {
        const double r = s.r;
        CHECK(s.H == doctest::Approx(std::numbers::pi * r * r * r).epsilon(1e-3));
        CHECK(s.D == doctest::Approx(std::numbers::pi * r * r).epsilon(1e-3));
        CHECK(s.N == doctest::Approx(1.0).epsilon(2e-3));
    }
    const FrequencyProfile b = almgren_frequency(g, closed_form(g, Family::ImPow, 3), 0.0, radii);
    for (const auto& s : b.samples) CHECK(s.N == doctest::Approx(1.5).epsilon(0.01));
    const FrequencyProfile c =
        almgren_frequency(g, Field::sample(g, [](Point p) { return p.x2; }), 0.0, radii);
    for (const auto& s : c.samples) CHECK(s.N == doctest::Approx(1.0).epsilon(2e-3));
    CHECK(max_frequency_drop(b) < 1e-3);

    const FrequencyProfile d = almgren_frequency(g, Field::sample(g, [](Point) { return 2.0; }), 0.0, radii);
    CHECK(d.degenerate);
    CHECK_THROWS_AS(almgren_frequency(g, a.samples.empty() ? Field() : closed_form(g, Family::AbsX1, 2), 0.5, std::vector<double>{0.6}),
                    std::invalid_argument);
}

TEST_CASE("frequency of a shifted field with explicit offset") {
    const Grid g = Grid::with_resolution(128);
    const HomogeneousSolution s(Family::ImPow, Kappa{3});
    const Field f = Field::sample(g, [&](Point p) { return s({p.x1, p.x2 - 0.25}) + 4.0; });
    const FrequencyProfile prof = almgren_frequency(g, f, 0.25, std::vector<double>{0.1, 0.2}, 4.0);
    for (const auto& q : prof.samples) CHECK(q.N == doctest::Approx(1.5).epsilon(0.02));
    CHECK(prof.offset == 4.0);
}

TEST_CASE("exponent fits") {
    const Grid g = Grid::with_resolution(256);
    const double h = g.spacing();
    const ExponentFit lin = fit_regularity_exponent(g, closed_form(g, Family::AbsX1, 2), 0.0,
                                                    default_exponent_radii(h, 0.0));
    CHECK(lin.smooth);
    const ExponentFit f32 = fit_regularity_exponent(g, closed_form(g, Family::ImPow, 3), 0.0,
                                                    default_exponent_radii(h, 0.0));
    CHECK_FALSE(f32.smooth);
    CHECK(f32.alpha == doctest::Approx(0.5).epsilon(0.1));
    CHECK(f32.r_squared > 0.99);
    for (std::size_t k = 1; k < f32.osc.size(); ++k) CHECK(f32.osc[k] >= f32.osc[k - 1]);
    const ExponentFit f52 = fit_regularity_exponent(g, closed_form(g, Family::ImPow, 5), 0.0,
                                                    default_exponent_radii(h, 0.0));
    CHECK(f52.at_least_c11);
    CHECK_THROWS_AS(fit_regularity_exponent(g, closed_form(g, Family::ImPow, 3), 0.0, std::vector<double>{0.1, 0.2}),
                    std::invalid_argument);
    CHECK_THROWS_AS(fit_regularity_exponent(g, closed_form(g, Family::ImPow, 3), 0.0, geometric_radii(h, 0.1, 5)),
                    std::invalid_argument);
}

TEST_CASE("complex square") {
    const Grid g = Grid::with_resolution(64);
    const ComplexSquareReport lin = complex_square_check(g, Field::sample(g, [](Point p) { return p.x2; }));
    CHECK(lin.max_abs_V < 1e-10);
    CHECK(lin.max_sigma2_residual < 1e-10);
    for (double u : lin.U) CHECK(u == doctest::Approx(1.0));

    double prevV = INFINITY, prevS = INFINITY;
    for (int n : {64, 128, 256}) {
        const Grid gg = Grid::with_resolution(n);
        const ComplexSquareReport r = complex_square_check(gg, Field::sample(gg, example_form));
        CHECK(r.max_abs_V < prevV);
        CHECK(r.max_sigma2_residual < prevS);
        prevV = r.max_abs_V;
        prevS = r.max_sigma2_residual;
        for (std::size_t m = 0; m < r.x2.size(); ++m)
            if (r.included[m] && r.x2[m] < -0.1) CHECK(r.U_minus[m] == doctest::Approx(2.25 * -r.x2[m]).epsilon(0.02));
    }
}

TEST_CASE("boundary maximum principle") {
    const Grid g = Grid::with_resolution(32);
    const BoundaryTrace lin = boundary_trace(g, Field::sample(g, [](Point p) { return p.x2; }));
    CHECK(boundary_max_principle_check(lin, std::size_t{0}, lin.size() - 1, 0.0).pass);
    CHECK(boundary_max_principle_check(lin, -0.5, 0.5, 0.0).pass);
    CHECK_THROWS_AS(boundary_max_principle_check(lin, -0.5, 0.51, 0.0), std::invalid_argument);
    const BoundaryTrace hump = boundary_trace(g, Field::sample(g, [](Point p) { return 1 - 4 * p.x2 * p.x2; }));
    const BmpResult r = boundary_max_principle_check(hump, -0.5, 0.5, 0.0);
    CHECK_FALSE(r.pass);
    REQUIRE(r.witness);
    CHECK(hump.x2[*r.witness] == doctest::Approx(0.0));
    CHECK(r.excess == doctest::Approx(1.0));
    CHECK(boundary_max_principle_check(hump, -0.5, 0.5, 1.5).pass);
    CHECK_FALSE(bmp_all_intervals(hump, 0.0).pass);
    const BmpSweep sw = bmp_random_intervals(hump, 200, 42, 0.0);
    CHECK(sw.intervals == 200);
    CHECK(sw.failures > 0);
    const BmpSweep again = bmp_random_intervals(hump, 200, 42, 0.0);
    CHECK(again.failures == sw.failures);
}

TEST_CASE("all-intervals check matches brute force (property)") {
    const Grid g = Grid::with_resolution(8);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (int t = 0; t < 300; ++t) {
        std::vector<double> v(g.size());
        const int mode = t % 3;
        for (NodeIndex k = 0; k < g.size(); ++k) {
            const double x2 = g.point(k).x2;
            v[k] = mode == 0 ? U(rng) : mode == 1 ? std::abs(x2) + 0.05 * U(rng) : std::floor(3 * x2 * U(rng));
        }
        const BoundaryTrace tr = boundary_trace(g, Field(v));
        std::vector<double> closed = {tr.lower_corner};
        closed.insert(closed.end(), tr.u.begin(), tr.u.end());
        closed.push_back(tr.upper_corner);
        CHECK(bmp_all_intervals(tr, 0.0).pass == bmp_brute_force(closed, 0.0));
    }
}

TEST_CASE("lipschitz ratio") {
    const Grid g = Grid::with_resolution(256);
    CHECK(lipschitz_ratio(g, Field::sample(g, [](Point p) { return p.x2; })) == doctest::Approx(1.0));
    CHECK(lipschitz_ratio(g, Field::sample(g, [](Point p) { return p.x1; })) == doctest::Approx(1.0));
    // (3/2) (1/2)^(1/2) with max |f| = 1
    CHECK(lipschitz_ratio(g, closed_form(g, Family::ImPow, 3)) == doctest::Approx(1.0607).epsilon(0.02));
}
