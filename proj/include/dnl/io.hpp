#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include <json.hpp>

#include "dnl/analysis.hpp"
#include "dnl/convolution.hpp"
#include "dnl/field.hpp"
#include "dnl/grid.hpp"
#include "dnl/solvers.hpp"

namespace dnl {

using Json = nlohmann::ordered_json;

/// Header `i,j,x1,x2,u`, one row per node in grid order, values at %.17g.
void write_solution_csv(std::ostream& out, const Grid& grid, const Field& f);

struct LoadedSolution {
    Grid grid;
    Field field;
};

/// Rebuilds the grid from the largest i and checks that every node appears
/// exactly once. Throws std::runtime_error with the offending line number.
LoadedSolution read_solution_csv(std::istream& in);

/// Value rounded to 10 significant digits; NaN and infinities become null.
Json fixed(double v);

Json to_json(const SolverReport& r, bool with_timing = false);
Json to_json(const BoundaryTrace& t, const BoundaryPartition& p);
Json to_json(const FrequencyProfile& p);
Json to_json(const ExponentFit& f);
Json to_json(const ComplexSquareReport& r);
Json to_json(const BmpResult& r, const BoundaryTrace& t);
Json to_json(const BmpSweep& s, const BoundaryTrace& t);
Json to_json(const ComparisonReport& r, const Grid& grid);

/// Two columns `r N` per line.
void write_profile_text(std::ostream& out, const FrequencyProfile& p);

/// Writes to a sibling temporary file, then renames over path.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

}  // namespace dnl
