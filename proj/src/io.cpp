#include "dnl/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace dnl {

void write_solution_csv(std::ostream& out, const Grid& grid, const Field& f) {
    f.check_against(grid);
    out << "i,j,x1,x2,u\n";
    char buf[128];
    for (NodeIndex k = 0; k < grid.size(); ++k) {
        const Point p = grid.point(k);
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g,%.17g,%.17g\n", grid.i(k), grid.j(k), p.x1, p.x2, f[k]);
        out << buf;
    }
}

LoadedSolution read_solution_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("solution CSV is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != "i,j,x1,x2,u") throw std::runtime_error("solution CSV: expected header i,j,x1,x2,u");
    struct Row {
        int i, j;
        double u;
    };
    std::vector<Row> rows;
    int imax = 0;
    for (long ln = 2; std::getline(in, line); ++ln) {
        if (line.empty() || line == "\r") continue;
        int i, j;
        double x1, x2, u;
        char tail;
        if (std::sscanf(line.c_str(), "%d,%d,%lf,%lf,%lf%c", &i, &j, &x1, &x2, &u, &tail) < 5 || i < 0)
            throw std::runtime_error("solution CSV: malformed line " + std::to_string(ln));
        if (!std::isfinite(u)) throw std::runtime_error("solution CSV: non-finite value on line " + std::to_string(ln));
        rows.push_back({i, j, u});
        imax = std::max(imax, i);
    }
    if (imax < 4) throw std::runtime_error("solution CSV: too few columns to define a grid");
    Grid grid = Grid::with_resolution(imax);
    if (rows.size() != grid.size())
        throw std::runtime_error("solution CSV: " + std::to_string(rows.size()) + " rows, grid has " +
                                 std::to_string(grid.size()) + " nodes");
    std::vector<double> u(grid.size());
    std::vector<bool> seen(grid.size(), false);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto k = grid.find(rows[r].i, rows[r].j);
        if (!k || seen[*k])
            throw std::runtime_error("solution CSV: unexpected or repeated node on line " + std::to_string(r + 2));
        seen[*k] = true;
        u[*k] = rows[r].u;
    }
    Field f(std::move(u));
    return {std::move(grid), std::move(f)};
}

Json fixed(double v) {
    if (!std::isfinite(v)) return nullptr;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    double r = std::strtod(buf, nullptr);
    if (r == 0.0) r = 0.0;  // drop negative zero
    return r;
}

namespace {

Json fixed_array(const std::vector<double>& v) {
    Json a = Json::array();
    for (double x : v) a.push_back(fixed(x));
    return a;
}

Json x2_list(const BoundaryTrace& t, const std::vector<std::size_t>& idx) {
    Json a = Json::array();
    for (std::size_t m : idx) a.push_back(fixed(t.x2[m]));
    return a;
}

}  // namespace

Json to_json(const SolverReport& r, bool with_timing) {
    Json j;
    j["method"] = r.method;
    j["iterations"] = r.iterations;
    j["final_max_update"] = fixed(r.final_max_update);
    j["interior_residual"] = fixed(r.interior_residual);
    j["boundary_residual"] = fixed(r.boundary_residual);
    if (with_timing) j["wall_time_s"] = fixed(r.wall_time_s);
    j["monotone"] = r.monotone;
    j["converged"] = r.converged;
    j["tolerance"] = fixed(r.tolerance);
    return j;
}

Json to_json(const BoundaryTrace& t, const BoundaryPartition& p) {
    Json j;
    j["thresholds"] = {{"contact", fixed(p.thresholds.contact)},
                       {"tangential", fixed(p.thresholds.tangential)},
                       {"facet", fixed(p.thresholds.facet)}};
    j["contact_nodes"] = p.contact.size();
    j["noncontact_nodes"] = p.noncontact.size();
    j["free_boundary"] = x2_list(t, p.free_boundary);
    Json facets = Json::array();
    for (const Facet& f : p.facets)
        facets.push_back({{"x2_first", fixed(f.x2_first)},
                          {"x2_last", fixed(f.x2_last)},
                          {"nodes", f.last - f.first + 1},
                          {"value", fixed(f.value)},
                          {"spread", fixed(f.spread)},
                          {"touches_lower_corner", f.touches_lower_corner},
                          {"touches_upper_corner", f.touches_upper_corner}});
    j["facet_count"] = p.facets.size();
    j["facets"] = std::move(facets);
    j["distinct_values"] = p.distinct_values;
    j["gap"] = fixed(p.gap);
    double worst = 0.0;
    for (std::size_t m = 0; m < t.size(); ++m) worst = std::max(worst, std::min(t.sigma[m], t.tau[m]));
    j["max_min_sigma_tau"] = fixed(worst);
    return j;
}

Json to_json(const FrequencyProfile& p) {
    Json j;
    j["center"] = {fixed(p.center.x1), fixed(p.center.x2)};
    j["offset"] = fixed(p.offset);
    Json s = Json::array();
    for (const auto& q : p.samples)
        s.push_back({{"r", fixed(q.r)}, {"H", fixed(q.H)}, {"D", fixed(q.D)}, {"N", fixed(q.N)}});
    j["samples"] = std::move(s);
    j["N0"] = fixed(p.N0);
    j["max_drop"] = fixed(p.samples.size() > 1 ? max_frequency_drop(p) : 0.0);
    j["degenerate"] = p.degenerate;
    return j;
}

Json to_json(const ExponentFit& f) {
    Json j;
    j["point"] = {fixed(f.point.x1), fixed(f.point.x2)};
    j["radii"] = fixed_array(f.radii);
    j["osc"] = fixed_array(f.osc);
    j["smooth"] = f.smooth;
    j["slope"] = fixed(f.slope);
    j["alpha"] = fixed(f.alpha);
    j["r_squared"] = fixed(f.r_squared);
    j["at_least_c11"] = f.at_least_c11;
    return j;
}

Json to_json(const ComplexSquareReport& r) {
    std::size_t included = 0;
    for (bool b : r.included) included += b;
    return {{"max_abs_V", fixed(r.max_abs_V)},
            {"max_sigma2_residual", fixed(r.max_sigma2_residual)},
            {"collar_width", fixed(r.collar_width)},
            {"corner_margin", fixed(r.corner_margin)},
            {"free_boundary_nodes", r.free_boundary_nodes},
            {"included_nodes", included}};
}

Json to_json(const BmpResult& r, const BoundaryTrace& t) {
    Json j;
    j["pass"] = r.pass;
    j["a"] = fixed(t.x2[r.a]);
    j["b"] = fixed(t.x2[r.b]);
    j["witness"] = r.witness ? fixed(t.x2[*r.witness]) : Json(nullptr);
    j["excess"] = fixed(r.excess);
    return j;
}

Json to_json(const BmpSweep& s, const BoundaryTrace& t) {
    Json j;
    j["pass"] = s.failures == 0;
    j["intervals"] = s.intervals;
    j["failures"] = s.failures;
    j["worst"] = s.worst ? to_json(*s.worst, t) : Json(nullptr);
    return j;
}

Json to_json(const ComparisonReport& r, const Grid& grid) {
    Json j;
    j["status"] = to_string(r.status);
    j["ordering_holds"] = r.ordering_holds;
    j["max_violation"] = fixed(r.max_violation);
    if (r.worst) {
        const Point p = grid.point(*r.worst);
        j["worst"] = {fixed(p.x1), fixed(p.x2)};
    } else {
        j["worst"] = nullptr;
    }
    j["preconditions"] = r.preconditions;
    return j;
}

void write_profile_text(std::ostream& out, const FrequencyProfile& p) {
    char buf[96];
    for (const auto& s : p.samples) {
        std::snprintf(buf, sizeof buf, "%.10g %.10g\n", s.r, s.N);
        out << buf;
    }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    const std::filesystem::path dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
    const std::filesystem::path tmp =
        dir / ("." + path.filename().string() + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
        out.flush();
        if (!out) throw std::runtime_error("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename onto " + path.string() + ": " + ec.message());
    }
}

}  // namespace dnl
