#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "dnl/field.hpp"
#include "dnl/grid.hpp"

namespace dnl {

// ---------------------------------------------------------------------------
// Boundary traces and the contact / noncontact / free-boundary partition

/// Per flat node (ascending x2): value, sigma = order-2 inward difference,
/// tau = centred tangential difference magnitude. Corner values close the
/// tangential stencils at both ends.
struct BoundaryTrace {
    double h = 0.0;
    double scale = 0.0;  // max |u| over the whole field
    std::vector<NodeIndex> nodes;
    std::vector<double> x2, u, sigma, tau;
    double lower_corner = 0.0;  // u(0, -1)
    double upper_corner = 0.0;  // u(0, +1)

    std::size_t size() const { return nodes.size(); }
};

BoundaryTrace boundary_trace(const Grid& grid, const Field& f);

/// sigma vanishes like dist^(1/2) at the free boundary, so the contact and
/// tangential thresholds scale like h^(1/2):
///   eps = kTraceThresholdFactor * h^(1/2) * scale
/// On the kappa = 3/2 closed form min(sigma, tau)/h^(1/2) is about 0.41 at
/// the free-boundary node and sigma/h^(1/2) exceeds 1 at its contact
/// neighbour; the factor sits between (see test_analysis).
inline constexpr double kTraceThresholdFactor = 0.5;

/// A node next to a contact run joins it when sigma > 0 and its value is
/// within this multiple of the scale from its contact neighbour.
inline constexpr double kFacetLevelTolerance = 1e-7;

struct PartitionThresholds {
    double contact = 0.0;     // sigma > contact required for contact
    double tangential = 0.0;  // tau < tangential required for contact
    double facet = 0.0;       // facet values closer than this are the same value
};

PartitionThresholds default_thresholds(double h, double scale);

struct Facet {
    std::size_t first = 0, last = 0;  // trace indices, inclusive
    double x2_first = 0.0, x2_last = 0.0;
    double value = 0.0;   // mean of u over the facet
    double spread = 0.0;  // max - min of u over the facet
    bool touches_lower_corner = false;
    bool touches_upper_corner = false;
};

enum class FlatLabel : std::uint8_t { Contact, Noncontact, FreeBoundary };

struct BoundaryPartition {
    PartitionThresholds thresholds;
    std::vector<FlatLabel> labels;  // per trace index
    std::vector<std::size_t> contact, noncontact, free_boundary;
    std::vector<Facet> facets;
    /// Minimal gap between distinct facet values; +inf with fewer than two.
    double gap = std::numeric_limits<double>::infinity();
    /// Number of distinct facet values (within thresholds.facet).
    std::size_t distinct_values = 0;
};

/// contact: sigma > eps_c and tau < eps_t, grown over level neighbours (see
/// kFacetLevelTolerance). noncontact: sigma <= eps_c.
/// free boundary: noncontact neighbours of a contact run (the run end next
/// to a corner has none) plus nodes with sigma > eps_c and tau >= eps_t,
/// where the two branches cannot be told apart.
BoundaryPartition extract_partition(const BoundaryTrace& trace, const PartitionThresholds& thresholds);
BoundaryPartition extract_partition(const BoundaryTrace& trace, double h);

/// Trace indices of the free boundary whose neighbourhood of the given
/// radius stays away from the corners.
std::vector<std::size_t> interior_free_boundary(const BoundaryTrace& trace, const BoundaryPartition& part,
                                                double corner_margin);

// ---------------------------------------------------------------------------
// Almgren frequency N(r) = r D(r) / H(r) of the even extension

struct FrequencySample {
    double r = 0.0, H = 0.0, D = 0.0, N = 0.0;
};

struct FrequencyProfile {
    Point center;
    double offset = 0.0;  // value subtracted before evaluation
    std::vector<FrequencySample> samples;
    double N0 = 0.0;  // min of N over the three smallest reliable radii
    bool degenerate = false;
};

/// Radii below this multiple of h are not used for the N(0+) estimate.
inline constexpr double kReliableRadiusCells = 6.0;

/// H by the trapezoid rule on >= 4 max(64, 2 pi r / h) points with bilinear
/// interpolation; D by exact integration of the bilinear interpolant's
/// gradient over lattice cells, weighted by the cell's area fraction in B_r.
/// The offset defaults to f at the centre.
FrequencyProfile almgren_frequency(const Grid& grid, const Field& f, double center_x2,
                                   std::span<const double> radii, std::optional<double> offset = std::nullopt);

/// Largest drop N(r_k) - N(r_{k+1}) over consecutive samples (<= 0 when monotone).
double max_frequency_drop(const FrequencyProfile& profile);

/// Bilinear interpolation of the even extension u(-x1, x2) = u(x1, x2).
double interpolate_even(const Grid& grid, std::span<const double> f, Point p);

// ---------------------------------------------------------------------------
// C^{1,alpha} exponent at a flat point

struct ExponentFit {
    Point point;
    std::vector<double> radii, osc;
    bool smooth = false;        // osc below 1e-12 scale at every radius
    double slope = 0.0;         // log-log slope, 1 + alpha
    double alpha = 0.0;
    double r_squared = 0.0;
    bool at_least_c11 = false;  // alpha >= 1
};

/// osc_{B_r^+}(u - p.x) with p the area-weighted least-squares plane of u
/// on the lattice nodes of B_r^+(point); the oscillation is taken over those
/// nodes and over interpolated samples of the half circle |x - point| = r.
ExponentFit fit_regularity_exponent(const Grid& grid, const Field& f, double point_x2,
                                    std::span<const double> radii);

std::vector<double> geometric_radii(double lo, double hi, std::size_t count);

/// 12 radii from max(6h, 0.05) to min(0.4, 0.9 (dist - 2h)), dist = 1 - |x2|.
std::vector<double> default_frequency_radii(double h, double x2);
/// 10 radii from just above 4h to min(16h, dist / 2): the scales where the
/// leading term dominates and the lattice still resolves it.
std::vector<double> default_exponent_radii(double h, double x2);

// ---------------------------------------------------------------------------
// Complex square F^2 = U + iV of F = d2 u + i d1 u on the flat boundary

struct ComplexSquareReport {
    std::vector<double> x2, U, V, sigma2, U_minus;
    std::vector<bool> included;
    double max_abs_V = 0.0;
    double max_sigma2_residual = 0.0;  // max |sigma^2 - U_-|
    double collar_width = 0.0;         // excluded half-width around each free-boundary node
    double corner_margin = 0.0;        // nodes with |x2| > 1 - corner_margin excluded
    std::size_t free_boundary_nodes = 0;
};

inline constexpr double kComplexCollarCells = 4.0;
inline constexpr double kCornerMargin = 0.125;

ComplexSquareReport complex_square_check(const Grid& grid, const Field& f,
                                         double collar_cells = kComplexCollarCells,
                                         double corner_margin = kCornerMargin);

// ---------------------------------------------------------------------------
// Boundary maximum principle on flat subintervals

struct BmpResult {
    bool pass = true;
    std::size_t a = 0, b = 0;            // trace indices of the interval
    std::optional<std::size_t> witness;  // interior maximiser on failure
    double excess = 0.0;                 // max over [a,b] minus max(u(a), u(b))
};

/// Interval given by trace indices a < b.
BmpResult boundary_max_principle_check(const BoundaryTrace& trace, std::size_t a, std::size_t b, double slack);
/// Interval endpoints given as flat-node coordinates x2 (snapped to the nearest node).
BmpResult boundary_max_principle_check(const BoundaryTrace& trace, double a, double b, double slack);

struct BmpSweep {
    std::size_t intervals = 0;
    std::size_t failures = 0;
    std::optional<BmpResult> worst;  // failing interval with the largest excess
};

/// Random subintervals with endpoints drawn uniformly among flat nodes.
BmpSweep bmp_random_intervals(const BoundaryTrace& trace, std::size_t count, std::uint64_t seed, double slack);

/// Every subinterval of the closed flat boundary, corners included, in O(n).
BmpResult bmp_all_intervals(const BoundaryTrace& trace, double slack);

// ---------------------------------------------------------------------------

/// max |stencil gradient| over nodes with |x| <= 1/2, divided by max |f|.
double lipschitz_ratio(const Grid& grid, const Field& f);

}  // namespace dnl
