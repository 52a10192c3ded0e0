#include "dnl/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "dnl/analysis.hpp"
#include "dnl/boundary_datum.hpp"
#include "dnl/convolution.hpp"
#include "dnl/homogeneous.hpp"
#include "dnl/io.hpp"
#include "dnl/solvers.hpp"

namespace dnl::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string config;
    std::uint64_t seed = 1;
    bool timing = false;
};

void add_common(CLI::App* app, Common& c) {
    app->add_option("--config", c.config, "key = value file; command-line flags win");
    app->add_option("--seed", c.seed, "seed for randomized checks");
    app->add_flag("--timing", c.timing, "include wall times in JSON reports");
}

std::string trim(std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

BoundaryDatum load_datum(const std::string& text) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(text, ec)) {
        std::ifstream in(text);
        if (!in) throw UsageError("cannot read boundary data file " + text);
        return BoundaryDatum::read_table(in, text);
    }
    return BoundaryDatum::from_expression(text);
}

LoadedSolution load_solution(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read solution file " + path);
    try {
        return read_solution_csv(in);
    } catch (const std::runtime_error& e) {
        throw UsageError(e.what());
    }
}

Json header(const std::string& command) {
    Json j;
    j["schema"] = 1;
    j["command"] = command;
    return j;
}

void write_json(const std::string& path, const Json& j) { write_file_atomic(path, j.dump(2) + "\n"); }

std::vector<double> parse_list(const std::string& text) {
    std::vector<double> v;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) v.push_back(parse_spacing(item));
    }
    return v;
}

// Sources for the frequency / exponent subcommands: a solution CSV or a closed form.
struct FieldSource {
    std::string solution;
    std::string family;
    double kappa = 1.5;
    std::string h = "1/128";

    void add(CLI::App* app) {
        app->add_option("--solution", solution, "solution CSV written by solve");
        app->add_option("--family", family, "closed form: abs_x1, im_pow, re_pow_plus, re_pow_minus");
        app->add_option("--kappa", kappa, "homogeneity of the closed form");
        app->add_option("--h", h, "spacing of the closed-form sample");
    }

    LoadedSolution load() const {
        if (!solution.empty() == !family.empty()) throw UsageError("give exactly one of --solution and --family");
        if (!solution.empty()) return load_solution(solution);
        const HomogeneousSolution sol(family_from_string(family), Kappa::from_double(kappa));
        Grid grid = build_half_disc_grid(parse_spacing(h));
        Field f = Field::sample(grid, [&](Point p) { return sol(p); });
        return {std::move(grid), std::move(f)};
    }
};

struct RadiusOptions {
    std::optional<double> r_min, r_max;
    std::optional<std::size_t> count;
    std::string radii;

    void add(CLI::App* app) {
        app->add_option("--r-min", r_min, "smallest radius");
        app->add_option("--r-max", r_max, "largest radius");
        app->add_option("--count", count, "number of geometric radii");
        app->add_option("--radii", radii, "explicit comma-separated radii");
    }

    std::vector<double> resolve(double lo, double hi) const {
        if (!radii.empty()) return parse_list(radii);
        return geometric_radii(r_min.value_or(lo), r_max.value_or(hi), count.value_or(12));
    }
};

std::vector<double> frequency_radii(const RadiusOptions& o, double h, double x2) {
    if (!o.radii.empty() || o.r_min || o.r_max || o.count) {
        const auto d = default_frequency_radii(h, x2);
        return o.resolve(d.front(), d.back());
    }
    return default_frequency_radii(h, x2);
}

std::vector<double> exponent_radii(const RadiusOptions& o, double h, double x2) {
    if (!o.radii.empty() || o.r_min || o.r_max || o.count) {
        const auto d = default_exponent_radii(h, x2);
        return o.resolve(d.front(), d.back());
    }
    return default_exponent_radii(h, x2);
}

// ---------------------------------------------------------------------------

struct SolveArgs {
    Common common;
    std::string method, g, h, output = "solution";
    std::optional<double> c, tol;
};

Solution run_method(const SolverWorkspace& ws, const BoundaryDatum& g, const std::string& method,
                    std::optional<double> c, std::optional<double> tol) {
    SolverOptions opt;
    opt.tol = tol;
    if (method == "neumann") return solve_neumann(ws, g, opt);
    if (method == "signorini") return solve_signorini(ws, g, c.value_or(corner_max(ws.grid(), g)), opt);
    if (method == "minimal") return solve_minimal_supersolution(ws, g, opt);
    throw UsageError("unknown method " + method);
}

int cmd_solve(const SolveArgs& a, std::ostream& out) {
    const BoundaryDatum g = load_datum(a.g);
    const Grid grid = build_half_disc_grid(parse_spacing(a.h));
    const SolverWorkspace ws(grid);
    const Solution sol = run_method(ws, g, a.method, a.c, a.tol);
    std::ostringstream csv;
    write_solution_csv(csv, grid, sol.field);
    write_file_atomic(a.output + ".csv", csv.str());
    Json j = header("solve");
    j["g"] = g.description();
    j["h"] = fixed(grid.spacing());
    if (a.method == "signorini") j["c"] = fixed(a.c.value_or(corner_max(grid, g)));
    j["report"] = to_json(sol.report, a.common.timing);
    write_json(a.output + ".json", j);
    out << a.method << ": " << sol.report.iterations << " sweeps, max update "
        << fmt("%.3g", sol.report.final_max_update) << ", wrote " << a.output << ".csv\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct CompareArgs {
    Common common;
    std::string g, h, output = "compare";
    std::size_t intervals = 200;
    std::optional<double> bmp_slack;
    bool write_solutions = false;
};

int cmd_compare(const CompareArgs& a, std::ostream& out) {
    const BoundaryDatum g = load_datum(a.g);
    const Grid grid = build_half_disc_grid(parse_spacing(a.h));
    const double h = grid.spacing();
    const SolverWorkspace ws(grid);
    const double c = corner_max(grid, g);
    const std::vector<std::string> names = {"minimal", "signorini", "neumann"};
    std::vector<Solution> sols;
    for (const auto& m : names) sols.push_back(run_method(ws, g, m, c, std::nullopt));

    double scale = 0.0;
    for (const auto& s : sols) scale = std::max(scale, s.field.scale());
    const double slack = 10.0 * h * tolerance_scale(scale);
    const double bmp_slack = a.bmp_slack.value_or(1e-6 * tolerance_scale(scale));

    Json j = header("compare");
    j["g"] = g.description();
    j["h"] = fixed(h);
    j["c"] = fixed(c);
    j["seed"] = a.common.seed;
    Json js = Json::object();
    for (std::size_t m = 0; m < names.size(); ++m) {
        const BoundaryTrace t = boundary_trace(grid, sols[m].field);
        const BoundaryPartition p = extract_partition(t, h);
        const BmpSweep bmp = bmp_random_intervals(t, a.intervals, a.common.seed, bmp_slack);
        Json e;
        e["report"] = to_json(sols[m].report, a.common.timing);
        e["partition"] = to_json(t, p);
        e["bmp"] = to_json(bmp, t);
        e["lipschitz_ratio"] = fixed(lipschitz_ratio(grid, sols[m].field));
        js[names[m]] = std::move(e);
        out << names[m] << ": facets=" << p.facets.size() << " bmp=" << (bmp.failures == 0 ? "pass" : "fail")
            << " (" << bmp.failures << "/" << bmp.intervals << ")\n";
        if (a.write_solutions) {
            std::ostringstream csv;
            write_solution_csv(csv, grid, sols[m].field);
            write_file_atomic(a.output + "_" + names[m] + ".csv", csv.str());
        }
    }
    j["solutions"] = std::move(js);

    auto max_diff = [&](std::size_t x, std::size_t y) {
        double d = 0.0;
        for (NodeIndex k = 0; k < grid.size(); ++k) d = std::max(d, std::abs(sols[x].field[k] - sols[y].field[k]));
        return d;
    };
    auto max_excess = [&](std::size_t lo, std::size_t hi) {
        double d = -INFINITY;
        for (NodeIndex k = 0; k < grid.size(); ++k) d = std::max(d, sols[lo].field[k] - sols[hi].field[k]);
        return d;
    };
    const double d01 = max_diff(0, 1), d12 = max_diff(1, 2), d02 = max_diff(0, 2);
    const double e01 = max_excess(0, 1), e12 = max_excess(1, 2);
    j["pairwise_max_difference"] = {{"minimal_signorini", fixed(d01)},
                                    {"signorini_neumann", fixed(d12)},
                                    {"minimal_neumann", fixed(d02)}};
    j["distinct"] = std::min({d01, d12, d02}) > slack;
    j["ordering"] = {{"slack", fixed(slack)},
                     {"minimal_le_signorini", fixed(e01)},
                     {"signorini_le_neumann", fixed(e12)},
                     {"holds", e01 <= slack && e12 <= slack}};
    const ComparisonReport cmp = comparison_check(grid, sols[2].field, sols[0].field, slack);
    j["neumann_vs_minimal"] = to_json(cmp, grid);
    write_json(a.output + ".json", j);
    out << "ordering minimal <= signorini <= neumann: " << ((e01 <= slack && e12 <= slack) ? "holds" : "fails")
        << ", wrote " << a.output << ".json\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct AnalyzeArgs {
    Common common;
    std::string solution, checks = "partition,frequency,exponent,complex,bmp,lipschitz", output = "analysis.json";
    std::string at;
    std::size_t intervals = 200;
    RadiusOptions radii;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out) {
    const LoadedSolution s = load_solution(a.solution);
    const Grid& grid = s.grid;
    const double h = grid.spacing();
    std::set<std::string> checks;
    {
        std::stringstream ss(a.checks);
        std::string c;
        const std::set<std::string> known = {"partition", "frequency", "exponent", "complex", "bmp", "lipschitz"};
        while (std::getline(ss, c, ',')) {
            c = trim(c);
            if (c.empty()) continue;
            if (!known.count(c)) throw UsageError("unknown check " + c);
            checks.insert(c);
        }
    }
    const BoundaryTrace t = boundary_trace(grid, s.field);
    const BoundaryPartition p = extract_partition(t, h);
    std::vector<double> centers;
    if (!a.at.empty()) {
        for (double x : parse_list(a.at)) centers.push_back(std::round(x / h) * h);
    } else {
        for (std::size_t m : interior_free_boundary(t, p, kCornerMargin)) centers.push_back(t.x2[m]);
        if (centers.empty()) centers.push_back(0.0);
    }

    Json j = header("analyze");
    j["solution"] = a.solution;
    j["h"] = fixed(h);
    j["scale"] = fixed(s.field.scale());
    if (checks.count("partition")) j["partition"] = to_json(t, p);
    if (checks.count("frequency")) {
        Json arr = Json::array();
        for (double x2 : centers) arr.push_back(to_json(almgren_frequency(grid, s.field, x2, frequency_radii(a.radii, h, x2))));
        j["frequency"] = std::move(arr);
    }
    if (checks.count("exponent")) {
        Json arr = Json::array();
        for (double x2 : centers)
            arr.push_back(to_json(fit_regularity_exponent(grid, s.field, x2, exponent_radii(a.radii, h, x2))));
        j["exponent"] = std::move(arr);
    }
    if (checks.count("complex")) j["complex_square"] = to_json(complex_square_check(grid, s.field));
    if (checks.count("bmp")) {
        const double slack = 1e-6 * tolerance_scale(s.field.scale());
        j["bmp"] = {{"random", to_json(bmp_random_intervals(t, a.intervals, a.common.seed, slack), t)},
                    {"all", to_json(bmp_all_intervals(t, slack), t)}};
    }
    if (checks.count("lipschitz")) j["lipschitz_ratio"] = fixed(lipschitz_ratio(grid, s.field));
    write_json(a.output, j);
    out << "analyzed " << a.solution << " (" << checks.size() << " checks), wrote " << a.output << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct HomogeneousArgs {
    Common common;
    double kappa_max = 4.0;
    std::string h_list = "1/64,1/128,1/256", output = "homogeneous.json";
    double perturbation = 0.1;
};

// Rows at or below this boundary residual reproduce the form to roundoff.
constexpr double kExactResidual = 1e-12;

int cmd_verify_homogeneous(const HomogeneousArgs& a, std::ostream& out) {
    const std::vector<double> hs = parse_list(a.h_list);
    if (hs.empty()) throw UsageError("--h-list is empty");
    std::vector<Grid> grids;
    for (double h : hs) grids.push_back(build_half_disc_grid(h));
    Json j = header("verify-homogeneous");
    j["kappa_max"] = fixed(a.kappa_max);
    j["h"] = Json::array();
    for (double h : hs) j["h"].push_back(fixed(h));
    Json rows = Json::array();
    char line[256];
    out << "solution                 kappa";
    for (double h : hs) out << fmt("   h=%-9.6g", h);
    out << "  decreasing\n";
    for (const HomogeneousSolution& sol : admissible_solutions(a.kappa_max)) {
        Json r;
        r["label"] = sol.label();
        r["family"] = to_string(sol.family());
        r["kappa"] = fixed(sol.kappa().value());
        r["lipschitz"] = is_lipschitz(sol.kappa());
        Json bd = Json::array(), in = Json::array();
        std::vector<double> b;
        for (const Grid& g : grids) {
            const HomogeneousResidual res = verify_homogeneous_residual(sol, g);
            b.push_back(res.boundary);
            bd.push_back(fixed(res.boundary));
            in.push_back(fixed(res.interior));
        }
        bool dec = true;
        for (std::size_t k = 1; k < b.size(); ++k) dec = dec && b[k] < b[k - 1];
        // the forms are normalized to max 1 on the unit disc
        const bool exact = std::ranges::all_of(b, [](double v) { return v <= kExactResidual; });
        r["boundary_residual"] = std::move(bd);
        r["interior_residual"] = std::move(in);
        r["decreasing"] = dec;
        r["exact"] = exact;
        if (a.perturbation > 0.0 && sol.family() != Family::AbsX1) {
            const Grid& fine = grids.back();
            const double k = sol.kappa().value();
            r["perturbed_minus"] = fixed(profile_residual(sol.family(), k - a.perturbation, fine).boundary);
            r["perturbed_plus"] = fixed(profile_residual(sol.family(), k + a.perturbation, fine).boundary);
        }
        rows.push_back(std::move(r));
        std::snprintf(line, sizeof line, "%-24s %5.2f", sol.label().c_str(), sol.kappa().value());
        out << line;
        for (double v : b) out << fmt("   %-11.4g", v);
        out << "  " << (exact ? "exact" : dec ? "yes" : "no") << "\n";
    }
    j["rows"] = std::move(rows);
    write_json(a.output, j);
    return kExitOk;
}

// ---------------------------------------------------------------------------

struct FrequencyArgs {
    Common common;
    FieldSource source;
    RadiusOptions radii;
    double at = 0.0;
    std::optional<double> offset;
    std::string output = "frequency";
};

int cmd_frequency(const FrequencyArgs& a, std::ostream& out) {
    const LoadedSolution s = a.source.load();
    const double h = s.grid.spacing();
    const double x2 = std::round(a.at / h) * h;
    const FrequencyProfile prof =
        almgren_frequency(s.grid, s.field, x2, frequency_radii(a.radii, h, x2), a.offset);
    Json j = header("frequency");
    j["h"] = fixed(h);
    j["profile"] = to_json(prof);
    write_json(a.output + ".json", j);
    std::ostringstream txt;
    write_profile_text(txt, prof);
    write_file_atomic(a.output + ".txt", txt.str());
    out << "N(0+) ~ " << fmt("%.6g", prof.N0) << ", max drop " << fmt("%.3g", max_frequency_drop(prof)) << ", wrote "
        << a.output << ".json\n";
    return kExitOk;
}

struct ExponentArgs {
    Common common;
    FieldSource source;
    RadiusOptions radii;
    double at = 0.0;
    std::string output = "exponent.json";
};

int cmd_exponent(const ExponentArgs& a, std::ostream& out) {
    const LoadedSolution s = a.source.load();
    const double h = s.grid.spacing();
    const double x2 = std::round(a.at / h) * h;
    const ExponentFit fit = fit_regularity_exponent(s.grid, s.field, x2, exponent_radii(a.radii, h, x2));
    Json j = header("exponent");
    j["h"] = fixed(h);
    j["fit"] = to_json(fit);
    write_json(a.output, j);
    if (fit.smooth)
        out << "smooth at x2 = " << fmt("%.6g", x2) << "\n";
    else
        out << "alpha = " << fmt("%.4f", fit.alpha) << " at x2 = " << fmt("%.6g", x2) << "\n";
    return kExitOk;
}

std::string config_path(const std::vector<std::string>& args) {
    for (std::size_t k = 0; k < args.size(); ++k) {
        if (args[k] == "--config" && k + 1 < args.size()) return args[k + 1];
        if (args[k].rfind("--config=", 0) == 0) return args[k].substr(9);
    }
    return {};
}

}  // namespace

double parse_spacing(const std::string& text) {
    const std::string t = trim(text);
    std::size_t pos = 0;
    try {
        const auto slash = t.find('/');
        if (slash != std::string::npos) {
            const double num = std::stod(t.substr(0, slash), &pos);
            if (pos != slash) throw std::invalid_argument(t);
            const std::string den_s = t.substr(slash + 1);
            const double den = std::stod(den_s, &pos);
            if (pos != den_s.size() || den == 0.0) throw std::invalid_argument(t);
            return num / den;
        }
        const double v = std::stod(t, &pos);
        if (pos != t.size()) throw std::invalid_argument(t);
        return v;
    } catch (const std::logic_error&) {
        throw UsageError("not a number: '" + text + "'");
    }
}

std::vector<std::string> merge_config(const std::vector<std::string>& args, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file " + path);
    std::vector<std::string> merged = args;
    std::string line;
    for (int ln = 1; std::getline(in, line); ++ln) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError(path + ":" + std::to_string(ln) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key.rfind("--", 0) == 0) key.erase(0, 2);
        if (key.empty() || key == "config") throw UsageError(path + ":" + std::to_string(ln) + ": bad key");
        const std::string flag = "--" + key;
        const bool present = std::any_of(args.begin(), args.end(), [&](const std::string& a) {
            return a == flag || a.rfind(flag + "=", 0) == 0;
        });
        if (!present) merged.push_back(flag + "=" + value);
    }
    return merged;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Lattice solvers and diagnostics for the gradient-degenerate Neumann problem on the half disc", "dnl"};
    app.set_help_flag("--help", "print this help");
    app.require_subcommand(1);

    SolveArgs solve;
    auto* s = app.add_subcommand("solve", "solve one problem and write CSV + JSON");
    add_common(s, solve.common);
    s->add_option("--method", solve.method, "neumann | signorini | minimal")
        ->required()
        ->check(CLI::IsMember({"neumann", "signorini", "minimal"}));
    s->add_option("--g", solve.g, "boundary data: expression in x1, x2 or a two-column file")->required();
    s->add_option("--h", solve.h, "grid spacing, e.g. 1/128")->required();
    s->add_option("--c", solve.c, "Signorini obstacle (default: max of g at the corners)");
    s->add_option("--tol", solve.tol, "stop tolerance on the max update");
    s->add_option("--output", solve.output, "output prefix");

    CompareArgs cmp;
    auto* c = app.add_subcommand("compare", "minimal supersolution, Signorini and Neumann side by side");
    add_common(c, cmp.common);
    c->add_option("--g", cmp.g, "boundary data")->required();
    c->add_option("--h", cmp.h, "grid spacing")->required();
    c->add_option("--intervals", cmp.intervals, "random BMP intervals per solution");
    c->add_option("--bmp-slack", cmp.bmp_slack, "BMP slack (default 1e-6 scale)");
    c->add_option("--output", cmp.output, "output prefix");
    c->add_flag("--write-solutions", cmp.write_solutions, "also write the three solution CSVs");

    AnalyzeArgs an;
    auto* z = app.add_subcommand("analyze", "diagnostics of a solution CSV");
    add_common(z, an.common);
    z->add_option("--solution", an.solution, "solution CSV")->required();
    z->add_option("--checks", an.checks, "comma list of partition,frequency,exponent,complex,bmp,lipschitz");
    z->add_option("--at", an.at, "comma list of flat points x2 (default: detected free boundary)");
    z->add_option("--intervals", an.intervals, "random BMP intervals");
    z->add_option("--output", an.output, "JSON path");
    an.radii.add(z);

    HomogeneousArgs hom;
    auto* v = app.add_subcommand("verify-homogeneous", "residual refinement table of the closed forms");
    add_common(v, hom.common);
    v->add_option("--kappa-max", hom.kappa_max, "largest homogeneity");
    v->add_option("--h-list", hom.h_list, "comma list of spacings");
    v->add_option("--perturbation", hom.perturbation, "kappa perturbation for the exhaustiveness columns");
    v->add_option("--output", hom.output, "JSON path");

    FrequencyArgs fr;
    auto* f = app.add_subcommand("frequency", "Almgren frequency profile at a flat point");
    add_common(f, fr.common);
    fr.source.add(f);
    fr.radii.add(f);
    f->add_option("--at", fr.at, "flat point x2");
    f->add_option("--offset", fr.offset, "value subtracted first (default: u at the point)");
    f->add_option("--output", fr.output, "output prefix (.json, .txt)");

    ExponentArgs ex;
    auto* e = app.add_subcommand("exponent", "C^{1,alpha} exponent fit at a flat point");
    add_common(e, ex.common);
    ex.source.add(e);
    ex.radii.add(e);
    e->add_option("--at", ex.at, "flat point x2");
    e->add_option("--output", ex.output, "JSON path");

    try {
        std::vector<std::string> args = raw_args;
        if (const std::string cfg = config_path(args); !cfg.empty()) args = merge_config(args, cfg);
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& ex) {
        err << "dnl: error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& ex) {
        err << "dnl: error: " << ex.what() << "\n";
        return kExitUsage;
    }

    try {
        if (s->parsed()) return cmd_solve(solve, out);
        if (c->parsed()) return cmd_compare(cmp, out);
        if (z->parsed()) return cmd_analyze(an, out);
        if (v->parsed()) return cmd_verify_homogeneous(hom, out);
        if (f->parsed()) return cmd_frequency(fr, out);
        if (e->parsed()) return cmd_exponent(ex, out);
    } catch (const SolverFailure& ex) {
        err << "dnl: solver failure: " << ex.what() << "\n";
        return kExitSolverFailure;
    } catch (const std::invalid_argument& ex) {
        err << "dnl: error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& ex) {
        err << "dnl: error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& ex) {
        err << "dnl: error: " << ex.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& ex) {
        err << "dnl: error: " << ex.what() << "\n";
        return kExitSolverFailure;
    }
    return kExitUsage;
}

}  // namespace dnl::cli
