#pragma once

#include <string>
#include <vector>

#include "dnl/grid.hpp"

namespace dnl {

/// Exact homogeneity degree in halves: kappa = halves / 2.
struct Kappa {
    int halves = 2;

    static Kappa from_double(double kappa);  // throws unless a positive multiple of 1/2
    double value() const { return 0.5 * halves; }
    bool is_integer() const { return halves % 2 == 0; }
    friend bool operator==(Kappa, Kappa) = default;
};

/// Closed-form families in polar form u = r^kappa m(theta), theta = atan2(|x1|, x2) in [0, pi]:
///   AbsX1       |x1|                         (kappa = 1)
///   ImPow       r^kappa sin(kappa theta)     = Im((x2 + i|x1|)^kappa)
///   RePowPlus   r^kappa cos(kappa theta)     = Re((x2 + i|x1|)^kappa)
///   RePowMinus  -r^kappa cos(kappa theta)
enum class Family { AbsX1, ImPow, RePowPlus, RePowMinus };

std::string to_string(Family family);
Family family_from_string(const std::string& name);

/// Angular admissibility of m'' + kappa^2 m = 0 with
/// min{m'(0), |m|(0)} = min{-m'(pi), |m|(pi)} = 0:
///   ImPow       kappa odd integer or kappa = (2k-1)/2
///   RePowPlus   kappa integer or kappa = (4k-3)/2
///   RePowMinus  kappa integer or kappa = (4k-1)/2
///   AbsX1       kappa = 1
/// ImPow at kappa = 1 coincides with AbsX1.
bool is_admissible(Family family, Kappa kappa);

/// True when the profile is Lipschitz at the origin (kappa >= 1). The
/// kappa = 1/2 forms satisfy the angular conditions but fail the
/// supersolution test at the origin.
bool is_lipschitz(Kappa kappa);

class HomogeneousSolution {
public:
    /// Throws std::invalid_argument for an inadmissible pair.
    HomogeneousSolution(Family family, Kappa kappa, double normalization = 1.0);

    Family family() const { return family_; }
    Kappa kappa() const { return kappa_; }
    double normalization() const { return normalization_; }
    std::string label() const;

    /// Requires x1 >= 0 up to roundoff; callers extend evenly.
    double operator()(Point p) const;

private:
    Family family_;
    Kappa kappa_;
    double normalization_;
};

/// Unchecked profile evaluation for arbitrary real kappa, used by the
/// perturbation studies. Evaluates at |x1|.
double eval_profile(Family family, double kappa, Point p);

double eval_homogeneous(const HomogeneousSolution& sol, Point p);

/// Shape of a subset of the flat boundary B1' = {0} x (-1, 1).
enum class FlatRegion { Empty, Whole, WholeMinusOrigin, Origin, PositiveHalf, NegativeHalf };

std::string to_string(FlatRegion region);

struct PartitionDescriptor {
    FlatRegion contact;
    FlatRegion free_boundary;
    FlatRegion noncontact;
};

/// Expected contact / free boundary / noncontact sets of a closed form.
PartitionDescriptor table_partition(const HomogeneousSolution& sol);

/// Whether the flat point x2 belongs to the region.
bool region_contains(FlatRegion region, double x2);

struct HomogeneousResidual {
    double interior;  // max |h^2 * laplacian| over Interior nodes (value units)
    double boundary;  // max |boundary_residual| over flat nodes (raw)
};

HomogeneousResidual verify_homogeneous_residual(const HomogeneousSolution& sol, const Grid& grid);

/// Same measurement for an arbitrary (family, kappa) profile.
HomogeneousResidual profile_residual(Family family, double kappa, const Grid& grid);

/// Every admissible (family, kappa) with kappa <= kappa_max, AbsX1 first,
/// each closed form listed once (ImPow at kappa = 1 is folded into AbsX1).
std::vector<HomogeneousSolution> admissible_solutions(double kappa_max);

}  // namespace dnl
