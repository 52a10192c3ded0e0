#include "dnl/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "dnl/operators.hpp"

namespace dnl {

BoundaryTrace boundary_trace(const Grid& grid, const Field& f) {
    f.check_against(grid);
    BoundaryTrace t;
    t.h = grid.spacing();
    t.scale = f.scale();
    t.lower_corner = f[grid.lower_corner()];
    t.upper_corner = f[grid.upper_corner()];
    const auto& flat = grid.flat_nodes();
    const std::size_t n = flat.size();
    t.nodes = flat;
    t.x2.resize(n);
    t.u.resize(n);
    t.sigma.resize(n);
    t.tau.resize(n);
    for (std::size_t m = 0; m < n; ++m) {
        const NodeIndex k = flat[m];
        t.x2[m] = grid.point(k).x2;
        t.u[m] = f[k];
        t.sigma[m] = inward_normal_difference(grid, f, k, 2);
        t.tau[m] = std::abs(f[grid.north(k)] - f[grid.south(k)]) / (2.0 * t.h);
    }
    return t;
}

PartitionThresholds default_thresholds(double h, double scale) {
    const double s = tolerance_scale(scale);
    const double eps = std::max(kTraceThresholdFactor * std::sqrt(h) * s, 1e-8 * s);
    return {eps, eps, 10.0 * h * s};
}

BoundaryPartition extract_partition(const BoundaryTrace& trace, double h) {
    return extract_partition(trace, default_thresholds(h, trace.scale));
}

BoundaryPartition extract_partition(const BoundaryTrace& trace, const PartitionThresholds& thr) {
    const std::size_t n = trace.size();
    BoundaryPartition part;
    part.thresholds = thr;
    part.labels.assign(n, FlatLabel::Noncontact);
    std::vector<bool> candidate(n, false);
    for (std::size_t m = 0; m < n; ++m) {
        if (trace.sigma[m] <= thr.contact) continue;
        if (trace.tau[m] < thr.tangential) {
            candidate[m] = true;
            part.labels[m] = FlatLabel::Contact;
        } else {
            part.labels[m] = FlatLabel::FreeBoundary;
        }
    }
    // Threshold seeds miss the ends of a facet where sigma vanishes faster
    // than h^(1/2); grow each run over nodes tangentially level with it.
    const double level = kFacetLevelTolerance * tolerance_scale(trace.scale);
    for (std::size_t m = 0; m < n;) {
        if (!candidate[m]) {
            ++m;
            continue;
        }
        std::size_t e = m;
        while (e + 1 < n && candidate[e + 1]) ++e;
        const double seed = trace.u[m];
        while (m > 0 && !candidate[m - 1] && trace.sigma[m - 1] > 0.0 &&
               std::abs(trace.u[m - 1] - seed) <= level) {
            candidate[--m] = true;
            part.labels[m] = FlatLabel::Contact;
        }
        while (e + 1 < n && !candidate[e + 1] && trace.sigma[e + 1] > 0.0 &&
               std::abs(trace.u[e + 1] - seed) <= level) {
            candidate[++e] = true;
            part.labels[e] = FlatLabel::Contact;
        }
        Facet facet;
        facet.first = m;
        facet.last = e;
        facet.x2_first = trace.x2[m];
        facet.x2_last = trace.x2[e];
        double lo = INFINITY, hi = -INFINITY, sum = 0.0;
        for (std::size_t q = m; q <= e; ++q) {
            sum += trace.u[q];
            lo = std::min(lo, trace.u[q]);
            hi = std::max(hi, trace.u[q]);
        }
        facet.value = sum / static_cast<double>(e - m + 1);
        facet.spread = hi - lo;
        facet.touches_lower_corner = m == 0;
        facet.touches_upper_corner = e + 1 == n;
        if (m > 0 && part.labels[m - 1] == FlatLabel::Noncontact) part.labels[m - 1] = FlatLabel::FreeBoundary;
        if (e + 1 < n && part.labels[e + 1] == FlatLabel::Noncontact) part.labels[e + 1] = FlatLabel::FreeBoundary;
        part.facets.push_back(facet);
        m = e + 1;
    }
    for (std::size_t m = 0; m < n; ++m) {
        switch (part.labels[m]) {
            case FlatLabel::Contact: part.contact.push_back(m); break;
            case FlatLabel::Noncontact: part.noncontact.push_back(m); break;
            case FlatLabel::FreeBoundary: part.free_boundary.push_back(m); break;
        }
    }

    std::vector<double> values;
    for (const Facet& f : part.facets) values.push_back(f.value);
    std::sort(values.begin(), values.end());
    std::vector<double> distinct;
    for (double v : values)
        if (distinct.empty() || v - distinct.back() > thr.facet) distinct.push_back(v);
    part.distinct_values = distinct.size();
    for (std::size_t k = 1; k < distinct.size(); ++k) part.gap = std::min(part.gap, distinct[k] - distinct[k - 1]);
    return part;
}

std::vector<std::size_t> interior_free_boundary(const BoundaryTrace& trace, const BoundaryPartition& part,
                                                double corner_margin) {
    std::vector<std::size_t> out;
    for (std::size_t m : part.free_boundary)
        if (std::abs(trace.x2[m]) <= 1.0 - corner_margin) out.push_back(m);
    return out;
}

// ---------------------------------------------------------------------------

double interpolate_even(const Grid& grid, std::span<const double> f, Point p) {
    const double h = grid.spacing();
    const double a = std::abs(p.x1) / h;
    const double b = p.x2 / h;
    int i0 = static_cast<int>(std::floor(a));
    int j0 = static_cast<int>(std::floor(b));
    if (i0 == grid.resolution()) --i0;
    const double s = a - i0, t = b - j0;
    const auto n00 = grid.find(i0, j0), n10 = grid.find(i0 + 1, j0);
    const auto n01 = grid.find(i0, j0 + 1), n11 = grid.find(i0 + 1, j0 + 1);
    if (!n00 || !n10 || !n01 || !n11) throw std::out_of_range("interpolation point leaves the lattice");
    return (1 - s) * (1 - t) * f[*n00] + s * (1 - t) * f[*n10] + (1 - s) * t * f[*n01] + s * t * f[*n11];
}

namespace {

// Fraction of the cell [x0, x0+h] x [y0, y0+h] inside the disc |x - c| < r.
double cell_fraction(double x0, double y0, double h, double cx, double cy, double r) {
    auto d2 = [&](double x, double y) { return (x - cx) * (x - cx) + (y - cy) * (y - cy); };
    const double r2 = r * r;
    bool all_in = true;
    for (double x : {x0, x0 + h})
        for (double y : {y0, y0 + h}) all_in = all_in && d2(x, y) <= r2;
    if (all_in) return 1.0;
    const double nx = std::clamp(cx, x0, x0 + h), ny = std::clamp(cy, y0, y0 + h);
    if (d2(nx, ny) >= r2) return 0.0;
    constexpr int sub = 24;
    int inside = 0;
    for (int a = 0; a < sub; ++a)
        for (int b = 0; b < sub; ++b)
            inside += d2(x0 + (a + 0.5) * h / sub, y0 + (b + 0.5) * h / sub) < r2;
    return static_cast<double>(inside) / (sub * sub);
}

}  // namespace

FrequencyProfile almgren_frequency(const Grid& grid, const Field& f, double center_x2,
                                   std::span<const double> radii, std::optional<double> offset) {
    f.check_against(grid);
    const double h = grid.spacing();
    const int jc = static_cast<int>(std::lround(center_x2 / h));
    FrequencyProfile prof;
    prof.center = {0.0, center_x2};
    const auto c_node = grid.find(0, jc);
    prof.offset = offset.value_or(c_node && std::abs(jc * h - center_x2) < 1e-12
                                      ? f[*c_node]
                                      : interpolate_even(grid, f, prof.center));
    const double dist_arc = 1.0 - std::abs(center_x2);
    std::vector<double> u(f.values().begin(), f.values().end());
    for (double& v : u) v -= prof.offset;
    const double floor_H = 1e-14 * tolerance_scale(f.scale()) * tolerance_scale(f.scale());

    for (double r : radii) {
        if (!(r > 0.0) || r >= dist_arc - 2.0 * h)
            throw std::invalid_argument("frequency radius must be positive and inside the half disc");
        FrequencySample s;
        s.r = r;
        const std::size_t M = 4 * std::max<std::size_t>(64, static_cast<std::size_t>(std::ceil(2 * std::numbers::pi * r / h)));
        double H = 0.0;
        for (std::size_t m = 0; m < M; ++m) {
            const double phi = 2 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(M);
            const double v = interpolate_even(grid, u, {r * std::cos(phi), center_x2 + r * std::sin(phi)});
            H += v * v;
        }
        s.H = H * 2 * std::numbers::pi * r / static_cast<double>(M);

        double D = 0.0;
        const int imax = static_cast<int>(std::ceil(r / h));
        const int jlo = static_cast<int>(std::floor((center_x2 - r) / h));
        const int jhi = static_cast<int>(std::ceil((center_x2 + r) / h));
        for (int i = 0; i < imax; ++i)
            for (int j = jlo; j < jhi; ++j) {
                const double w = cell_fraction(i * h, j * h, h, 0.0, center_x2, r);
                if (w == 0.0) continue;
                const double u00 = u[grid.at(i, j)], u10 = u[grid.at(i + 1, j)];
                const double u01 = u[grid.at(i, j + 1)], u11 = u[grid.at(i + 1, j + 1)];
                const double g1 = ((u10 - u00) + (u11 - u01)) / (2 * h);
                const double g2 = ((u01 - u00) + (u11 - u10)) / (2 * h);
                const double m = u11 - u01 - u10 + u00;
                D += w * (h * h * (g1 * g1 + g2 * g2) + m * m / 6.0);
            }
        s.D = 2.0 * D;  // even extension: both half discs
        if (s.H < floor_H) {
            prof.degenerate = true;
            s.N = std::numeric_limits<double>::quiet_NaN();
        } else {
            s.N = r * s.D / s.H;
        }
        prof.samples.push_back(s);
    }

    std::vector<FrequencySample> reliable;
    for (const auto& s : prof.samples)
        if (s.r >= kReliableRadiusCells * h) reliable.push_back(s);
    std::sort(reliable.begin(), reliable.end(), [](auto& a, auto& b) { return a.r < b.r; });
    if (reliable.size() > 3) reliable.resize(3);
    prof.N0 = std::numeric_limits<double>::quiet_NaN();
    if (!reliable.empty() && !prof.degenerate) {
        prof.N0 = reliable.front().N;
        for (const auto& s : reliable) prof.N0 = std::min(prof.N0, s.N);
    }
    return prof;
}

double max_frequency_drop(const FrequencyProfile& profile) {
    auto s = profile.samples;
    std::sort(s.begin(), s.end(), [](auto& a, auto& b) { return a.r < b.r; });
    double drop = -INFINITY;
    for (std::size_t k = 1; k < s.size(); ++k) drop = std::max(drop, s[k - 1].N - s[k].N);
    return drop;
}

// ---------------------------------------------------------------------------

std::vector<double> default_frequency_radii(double h, double x2) {
    const double dist = 1.0 - std::abs(x2);
    return geometric_radii(std::max(kReliableRadiusCells * h, 0.05), std::min(0.4, 0.9 * (dist - 2.0 * h)), 12);
}

std::vector<double> default_exponent_radii(double h, double x2) {
    const double dist = 1.0 - std::abs(x2);
    return geometric_radii(4.05 * h, std::min(16.0 * h, 0.5 * dist), 10);
}

std::vector<double> geometric_radii(double lo, double hi, std::size_t count) {
    if (!(lo > 0.0 && hi > lo) || count < 2) throw std::invalid_argument("geometric radii need 0 < lo < hi, count >= 2");
    std::vector<double> r(count);
    for (std::size_t k = 0; k < count; ++k)
        r[k] = lo * std::pow(hi / lo, static_cast<double>(k) / static_cast<double>(count - 1));
    return r;
}

namespace {

// Solves the 3x3 system by Gaussian elimination with partial pivoting.
bool solve3(double A[3][3], double b[3], double x[3]) {
    for (int c = 0; c < 3; ++c) {
        int p = c;
        for (int r = c + 1; r < 3; ++r)
            if (std::abs(A[r][c]) > std::abs(A[p][c])) p = r;
        if (std::abs(A[p][c]) < 1e-300) return false;
        std::swap(A[p], A[c]);
        std::swap(b[p], b[c]);
        for (int r = c + 1; r < 3; ++r) {
            const double m = A[r][c] / A[c][c];
            for (int q = c; q < 3; ++q) A[r][q] -= m * A[c][q];
            b[r] -= m * b[c];
        }
    }
    for (int c = 2; c >= 0; --c) {
        double s = b[c];
        for (int q = c + 1; q < 3; ++q) s -= A[c][q] * x[q];
        x[c] = s / A[c][c];
    }
    return true;
}

}  // namespace

ExponentFit fit_regularity_exponent(const Grid& grid, const Field& f, double point_x2,
                                    std::span<const double> radii) {
    f.check_against(grid);
    const double h = grid.spacing();
    if (radii.size() < 5) throw std::invalid_argument("exponent fit needs at least 5 radii");
    const double dist_arc = 1.0 - std::abs(point_x2);
    ExponentFit fit;
    fit.point = {0.0, point_x2};
    const int jp = static_cast<int>(std::lround(point_x2 / h));
    const double base = f[grid.at(0, jp)];
    for (double r : radii) {
        if (!(r > 4.0 * h * (1 - 1e-12)) || r > 0.5 * dist_arc * (1 + 1e-12))
            throw std::invalid_argument("exponent radii must lie in (4h, dist/2)");
        const int imax = static_cast<int>(std::floor(r / h));
        const int jlo = static_cast<int>(std::ceil((point_x2 - r) / h));
        const int jhi = static_cast<int>(std::floor((point_x2 + r) / h));
        std::vector<std::array<double, 3>> pts;
        for (int i = 0; i <= imax; ++i)
            for (int j = jlo; j <= jhi; ++j) {
                const double x1 = i * h, dx2 = j * h - point_x2;
                if (x1 * x1 + dx2 * dx2 >= r * r) continue;
                pts.push_back({x1, dx2, f[grid.at(i, j)] - base});
            }
        double A[3][3] = {}, b[3] = {}, c[3] = {};
        // Area weights: a node on x1 = 0 carries half a cell.
        for (const auto& p : pts) {
            const double phi[3] = {1.0, p[0], p[1]};
            const double w = p[0] == 0.0 ? 0.5 : 1.0;
            for (int a = 0; a < 3; ++a) {
                b[a] += w * phi[a] * p[2];
                for (int q = 0; q < 3; ++q) A[a][q] += w * phi[a] * phi[q];
            }
        }
        if (!solve3(A, b, c)) throw std::runtime_error("degenerate plane fit");
        double lo = INFINITY, hi = -INFINITY;
        for (const auto& p : pts) {
            const double res = p[2] - (c[0] + c[1] * p[0] + c[2] * p[1]);
            lo = std::min(lo, res);
            hi = std::max(hi, res);
        }
        // The extrema sit on the spherical part of the boundary; sampling it
        // by interpolation removes the lattice bias of the node set at small r.
        const std::size_t M = std::max<std::size_t>(64, static_cast<std::size_t>(std::ceil(4 * std::numbers::pi * r / h)));
        for (std::size_t q = 0; q <= M; ++q) {
            const double phi = std::numbers::pi * static_cast<double>(q) / static_cast<double>(M);
            const double x1 = r * std::sin(phi), dx2 = -r * std::cos(phi);
            const double v = interpolate_even(grid, f, {x1, point_x2 + dx2}) - base;
            const double res = v - (c[0] + c[1] * x1 + c[2] * dx2);
            lo = std::min(lo, res);
            hi = std::max(hi, res);
        }
        fit.radii.push_back(r);
        fit.osc.push_back(hi - lo);
    }
    const double floor_osc = 1e-12 * tolerance_scale(f.scale());
    fit.smooth = std::all_of(fit.osc.begin(), fit.osc.end(), [&](double o) { return o < floor_osc; });
    if (fit.smooth) return fit;

    // log-log least squares over positive samples
    double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
    std::size_t m = 0;
    for (std::size_t k = 0; k < fit.radii.size(); ++k) {
        if (!(fit.osc[k] > 0.0)) continue;
        const double x = std::log(fit.radii[k]), y = std::log(fit.osc[k]);
        sx += x, sy += y, sxx += x * x, sxy += x * y, syy += y * y;
        ++m;
    }
    if (m < 2) {
        fit.smooth = true;
        return fit;
    }
    const double mm = static_cast<double>(m);
    const double cov = sxy - sx * sy / mm, varx = sxx - sx * sx / mm, vary = syy - sy * sy / mm;
    fit.slope = cov / varx;
    fit.alpha = fit.slope - 1.0;
    fit.r_squared = vary > 0 ? cov * cov / (varx * vary) : 1.0;
    fit.at_least_c11 = fit.alpha >= 1.0;
    return fit;
}

// ---------------------------------------------------------------------------

ComplexSquareReport complex_square_check(const Grid& grid, const Field& f, double collar_cells,
                                         double corner_margin) {
    const BoundaryTrace trace = boundary_trace(grid, f);
    const BoundaryPartition part = extract_partition(trace, grid.spacing());
    const double h = grid.spacing();
    ComplexSquareReport rep;
    rep.collar_width = collar_cells * h;
    rep.corner_margin = corner_margin;
    rep.free_boundary_nodes = part.free_boundary.size();
    const std::size_t n = trace.size();
    for (std::size_t m = 0; m < n; ++m) {
        const NodeIndex k = trace.nodes[m];
        const double d1 = trace.sigma[m];
        const double d2 = (f[grid.north(k)] - f[grid.south(k)]) / (2.0 * h);
        const double U = d2 * d2 - d1 * d1;
        const double V = 2.0 * d1 * d2;
        const double Um = std::max(-U, 0.0);
        bool inc = std::abs(trace.x2[m]) <= 1.0 - corner_margin;
        for (std::size_t g : part.free_boundary)
            if (std::abs(trace.x2[g] - trace.x2[m]) <= rep.collar_width + 1e-12) inc = false;
        rep.x2.push_back(trace.x2[m]);
        rep.U.push_back(U);
        rep.V.push_back(V);
        rep.sigma2.push_back(d1 * d1);
        rep.U_minus.push_back(Um);
        rep.included.push_back(inc);
        if (inc) {
            rep.max_abs_V = std::max(rep.max_abs_V, std::abs(V));
            rep.max_sigma2_residual = std::max(rep.max_sigma2_residual, std::abs(d1 * d1 - Um));
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------

BmpResult boundary_max_principle_check(const BoundaryTrace& trace, std::size_t a, std::size_t b, double slack) {
    if (a >= b || b >= trace.size()) throw std::invalid_argument("BMP interval needs trace indices a < b");
    BmpResult res;
    res.a = a;
    res.b = b;
    const double ends = std::max(trace.u[a], trace.u[b]);
    std::size_t arg = a;
    for (std::size_t m = a + 1; m < b; ++m)
        if (trace.u[m] > trace.u[arg]) arg = m;
    res.excess = std::max(0.0, trace.u[arg] - ends);
    if (trace.u[arg] > ends + slack) {
        res.pass = false;
        res.witness = arg;
    }
    return res;
}

BmpResult boundary_max_principle_check(const BoundaryTrace& trace, double a, double b, double slack) {
    auto snap = [&](double x) {
        const double idx = (x - trace.x2.front()) / trace.h;
        const long k = std::lround(idx);
        if (k < 0 || k >= static_cast<long>(trace.size()) || std::abs(idx - k) > 1e-6)
            throw std::invalid_argument("BMP interval endpoints must be flat nodes");
        return static_cast<std::size_t>(k);
    };
    return boundary_max_principle_check(trace, snap(a), snap(b), slack);
}

BmpSweep bmp_random_intervals(const BoundaryTrace& trace, std::size_t count, std::uint64_t seed, double slack) {
    if (trace.size() < 3) throw std::invalid_argument("trace too short for BMP intervals");
    std::mt19937_64 rng(seed);
    BmpSweep sweep;
    for (std::size_t c = 0; c < count; ++c) {
        std::size_t a, b;
        do {
            a = rng() % trace.size();
            b = rng() % trace.size();
            if (a > b) std::swap(a, b);
        } while (b < a + 2);
        const BmpResult r = boundary_max_principle_check(trace, a, b, slack);
        ++sweep.intervals;
        if (!r.pass) {
            ++sweep.failures;
            if (!sweep.worst || r.excess > sweep.worst->excess) sweep.worst = r;
        }
    }
    return sweep;
}

BmpResult bmp_all_intervals(const BoundaryTrace& trace, double slack) {
    // Closed flat boundary: corners, then the flat nodes.
    const std::size_t n = trace.size();
    std::vector<double> v;
    v.reserve(n + 2);
    v.push_back(trace.lower_corner);
    v.insert(v.end(), trace.u.begin(), trace.u.end());
    v.push_back(trace.upper_corner);
    std::vector<double> left(v.size()), right(v.size());
    left[0] = v[0];
    for (std::size_t k = 1; k < v.size(); ++k) left[k] = std::min(left[k - 1], v[k]);
    right.back() = v.back();
    for (std::size_t k = v.size() - 1; k-- > 0;) right[k] = std::min(right[k + 1], v[k]);
    BmpResult res;
    res.a = 0;
    res.b = n - 1;
    for (std::size_t k = 1; k + 1 < v.size(); ++k) {
        const double bound = std::max(left[k - 1], right[k + 1]);
        const double ex = v[k] - bound;
        if (ex > res.excess) {
            res.excess = ex;
            if (ex > slack) {
                res.pass = false;
                res.witness = k - 1;
            }
        }
    }
    return res;
}

// ---------------------------------------------------------------------------

double lipschitz_ratio(const Grid& grid, const Field& f) {
    f.check_against(grid);
    if (f.scale() == 0.0) return 0.0;
    const double h = grid.spacing();
    double g = 0.0;
    for (NodeIndex k = 0; k < grid.size(); ++k) {
        const Point p = grid.point(k);
        if (p.x1 * p.x1 + p.x2 * p.x2 > 0.25 + 1e-12) continue;
        const NodeRole role = grid.role(k);
        double d1;
        if (role == NodeRole::Interior)
            d1 = (f[grid.east(k)] - f[grid.west(k)]) / (2 * h);
        else if (role == NodeRole::FlatBoundary)
            d1 = (f[grid.east(k)] - f[k]) / h;
        else
            continue;
        const double d2 = (f[grid.north(k)] - f[grid.south(k)]) / (2 * h);
        g = std::max(g, std::hypot(d1, d2));
    }
    return g / f.scale();
}

}  // namespace dnl
