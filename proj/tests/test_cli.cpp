#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "dnl/cli.hpp"
#include "dnl/io.hpp"

namespace fs = std::filesystem;
using namespace dnl;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("dnl_cli_" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json read_json(const std::string& path) { return nlohmann::json::parse(slurp(path)); }

LoadedSolution load(const std::string& path) {
    std::ifstream in(path);
    return read_solution_csv(in);
}

}  // namespace

TEST_CASE("spacing parser") {
    CHECK(cli::parse_spacing("1/64") == 1.0 / 64);
    CHECK(cli::parse_spacing("0.125") == 0.125);
    CHECK_THROWS(cli::parse_spacing("1/"));
    CHECK_THROWS(cli::parse_spacing("abc"));
    CHECK_THROWS(cli::parse_spacing("1/0"));
}

TEST_CASE("solve neumann on linear data") {
    TempDir t;
    const Run r = run({"solve", "--method", "neumann", "--g", "x2", "--h", "0.0625", "--output", t / "s"});
    REQUIRE(r.code == cli::kExitOk);
    const LoadedSolution s = load(t / "s.csv");
    CHECK(s.grid.resolution() == 16);
    for (NodeIndex k = 0; k < s.grid.size(); ++k) {
        // arc nodes carry g at their projection, so agreement is to O(h)
        CHECK(std::abs(s.field[k] - s.grid.point(k).x2) < 0.1);
    }
    const auto j = read_json(t / "s.json");
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "solve");
    CHECK(j["report"]["converged"] == true);
    CHECK_FALSE(j["report"].contains("wall_time_s"));
}

TEST_CASE("usage errors exit with code 2") {
    TempDir t;
    CHECK(run({"solve", "--method", "bogus", "--g", "x2", "--h", "1/16"}).code == cli::kExitUsage);
    CHECK(run({"solve", "--method", "neumann", "--g", "x2 +", "--h", "1/16", "--output", t / "a"}).code ==
          cli::kExitUsage);
    CHECK(run({"solve", "--method", "neumann", "--g", "x2", "--h", "0.3", "--output", t / "a"}).code ==
          cli::kExitUsage);
    CHECK(run({"solve", "--method", "neumann", "--g", "x2", "--h", "1/48.5", "--output", t / "a"}).code ==
          cli::kExitUsage);
    CHECK(run({"analyze", "--solution", t / "missing.csv"}).code == cli::kExitUsage);
    CHECK(run({"frobnicate"}).code == cli::kExitUsage);
    CHECK(run({"solve", "--method", "signorini", "--g", "x2", "--h", "1/16", "--c", "0.5", "--output", t / "a"})
              .code == cli::kExitUsage);
    std::ofstream(t / "bad.csv") << "i,j,x1,x2,u\n0,0,0,0,nan-ish\n";
    CHECK(run({"analyze", "--solution", t / "bad.csv", "--output", t / "x.json"}).code == cli::kExitUsage);
    const Run r = run({"frequency", "--family", "nope", "--kappa", "1.5", "--h", "1/16"});
    CHECK(r.code == cli::kExitUsage);
    CHECK_FALSE(r.err.empty());
    CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("tabulated data file") {
    TempDir t;
    {
        std::ofstream f(t / "g.txt");
        f << "# phi value\n";
        for (int k = 0; k <= 64; ++k) {
            const double phi = -1.5707963267948966 + k * 3.141592653589793 / 64;
            f << phi << " , " << std::sin(phi) << "\n";
        }
    }
    const Run r = run({"solve", "--method", "minimal", "--g", t / "g.txt", "--h", "1/16", "--output", t / "m"});
    REQUIRE(r.code == cli::kExitOk);
    const LoadedSolution s = load(t / "m.csv");
    CHECK(s.field[s.grid.upper_corner()] == doctest::Approx(1.0));
}

TEST_CASE("solve, then analyze the written CSV") {
    TempDir t;
    REQUIRE(run({"solve", "--method", "minimal", "--g", "-43*x1^8+19*x1+5*x2-5", "--h", "1/32", "--output",
                 t / "v"})
                .code == cli::kExitOk);
    const Run r = run({"analyze", "--solution", t / "v.csv", "--output", t / "a.json"});
    REQUIRE(r.code == cli::kExitOk);
    const auto j = read_json(t / "a.json");
    CHECK(j["command"] == "analyze");
    CHECK(j.contains("partition"));
    CHECK(j.contains("lipschitz_ratio"));
    CHECK(j.contains("bmp"));

    // CSV round trip is exact
    const LoadedSolution a = load(t / "v.csv");
    {
        std::ofstream w(t / "w.csv");
        write_solution_csv(w, a.grid, a.field);
    }
    CHECK(slurp(t / "v.csv") == slurp(t / "w.csv"));
}

TEST_CASE("reports are deterministic") {
    TempDir t;
    const std::vector<std::string> base = {"compare", "--g", "-43*x1^8+19*x1+5*x2-5", "--h", "1/16", "--seed", "7"};
    auto a = base, b = base;
    a.insert(a.end(), {"--output", t / "a"});
    b.insert(b.end(), {"--output", t / "b"});
    REQUIRE(run(a).code == cli::kExitOk);
    REQUIRE(run(b).code == cli::kExitOk);
    CHECK(slurp(t / "a.json") == slurp(t / "b.json"));
    const auto j = read_json(t / "a.json");
    CHECK(j["ordering"]["holds"] == true);
}

TEST_CASE("config file with flags winning") {
    TempDir t;
    std::ofstream(t / "run.cfg") << "# solve settings\nmethod = signorini\ng = x2\nh = 1/16\n\noutput = "
                                 << (t / "cfg") << "\n";
    const auto merged = cli::merge_config({"solve", "--method=neumann"}, t / "run.cfg");
    CHECK(std::find(merged.begin(), merged.end(), "--method=signorini") == merged.end());
    CHECK(std::find(merged.begin(), merged.end(), "--h=1/16") != merged.end());

    REQUIRE(run({"solve", "--config", t / "run.cfg", "--method", "neumann"}).code == cli::kExitOk);
    CHECK(read_json(t / "cfg.json")["report"]["method"] == "neumann");
    REQUIRE(run({"solve", "--config", t / "run.cfg"}).code == cli::kExitOk);
    CHECK(read_json(t / "cfg.json")["report"]["method"] == "signorini");
    CHECK(run({"solve", "--config", t / "absent.cfg"}).code == cli::kExitUsage);
}

TEST_CASE("verify-homogeneous table") {
    TempDir t;
    const Run r = run({"verify-homogeneous", "--kappa-max", "2", "--h-list", "1/16,1/32", "--output", t / "h.json"});
    REQUIRE(r.code == cli::kExitOk);
    const auto j = read_json(t / "h.json");
    CHECK(j["rows"].size() == 9);
    for (const auto& row : j["rows"]) {
        CHECK(row["boundary_residual"].size() == 2);
        if (row["lipschitz"] == true) CHECK((row["decreasing"] == true || row["exact"] == true));
    }
    CHECK(r.out.find("im_pow(3/2)") != std::string::npos);
}

TEST_CASE("frequency and exponent of closed forms") {
    TempDir t;
    REQUIRE(run({"frequency", "--family", "im_pow", "--kappa", "1.5", "--h", "1/128", "--output", t / "f"}).code ==
            cli::kExitOk);
    const auto f = read_json(t / "f.json");
    CHECK(f["profile"]["N0"].get<double>() == doctest::Approx(1.5).epsilon(0.02));
    CHECK(fs::exists(t / "f.txt"));
    REQUIRE(run({"exponent", "--family", "im_pow", "--kappa", "1.5", "--h", "1/128", "--output", t / "e.json"})
                .code == cli::kExitOk);
    CHECK(read_json(t / "e.json")["fit"]["alpha"].get<double>() == doctest::Approx(0.5).epsilon(0.15));
    CHECK(run({"frequency", "--family", "im_pow", "--kappa", "1.25", "--h", "1/16"}).code == cli::kExitUsage);
}
