#include "dnl/homogeneous.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "dnl/field.hpp"
#include "dnl/operators.hpp"

namespace dnl {

Kappa Kappa::from_double(double kappa) {
    const double twice = 2.0 * kappa;
    const double r = std::round(twice);
    if (!(kappa > 0.0) || std::abs(twice - r) > 1e-12)
        throw std::invalid_argument("kappa must be a positive multiple of 1/2");
    return Kappa{static_cast<int>(r)};
}

std::string to_string(Family family) {
    switch (family) {
        case Family::AbsX1: return "abs_x1";
        case Family::ImPow: return "im_pow";
        case Family::RePowPlus: return "re_pow_plus";
        case Family::RePowMinus: return "re_pow_minus";
    }
    return "?";
}

Family family_from_string(const std::string& name) {
    for (Family f : {Family::AbsX1, Family::ImPow, Family::RePowPlus, Family::RePowMinus})
        if (to_string(f) == name) return f;
    throw std::invalid_argument("unknown homogeneous family '" + name + "'");
}

bool is_admissible(Family family, Kappa kappa) {
    const int m = kappa.halves;
    if (m <= 0) return false;
    switch (family) {
        case Family::AbsX1: return m == 2;
        // odd integer: m = 2(2k-1); half-odd: m odd
        case Family::ImPow: return (m % 2 == 1) || (m % 4 == 2);
        // (4k-3)/2: m = 1, 5, 9, ...
        case Family::RePowPlus: return (m % 2 == 0) || (m % 4 == 1);
        // (4k-1)/2: m = 3, 7, 11, ...
        case Family::RePowMinus: return (m % 2 == 0) || (m % 4 == 3);
    }
    return false;
}

bool is_lipschitz(Kappa kappa) { return kappa.halves >= 2; }

HomogeneousSolution::HomogeneousSolution(Family family, Kappa kappa, double normalization)
    : family_(family), kappa_(kappa), normalization_(normalization) {
    if (!is_admissible(family, kappa))
        throw std::invalid_argument("inadmissible homogeneous solution " + to_string(family) +
                                    " with kappa = " + std::to_string(kappa.value()));
}

std::string HomogeneousSolution::label() const {
    char buf[32];
    if (kappa_.is_integer())
        std::snprintf(buf, sizeof buf, "%d", kappa_.halves / 2);
    else
        std::snprintf(buf, sizeof buf, "%d/2", kappa_.halves);
    return to_string(family_) + "(" + buf + ")";
}

double eval_profile(Family family, double kappa, Point p) {
    const double a = std::abs(p.x1);
    if (family == Family::AbsX1) return a;
    const double r = std::hypot(a, p.x2);
    if (r == 0.0) return 0.0;
    const double theta = std::atan2(a, p.x2);
    const double rk = std::pow(r, kappa);
    switch (family) {
        case Family::ImPow: return rk * std::sin(kappa * theta);
        case Family::RePowPlus: return rk * std::cos(kappa * theta);
        case Family::RePowMinus: return -rk * std::cos(kappa * theta);
        default: break;
    }
    return 0.0;
}

double HomogeneousSolution::operator()(Point p) const {
    if (p.x1 < -1e-12) throw std::invalid_argument("closed forms are evaluated on x1 >= 0");
    return normalization_ * eval_profile(family_, kappa_.value(), p);
}

double eval_homogeneous(const HomogeneousSolution& sol, Point p) { return sol(p); }

std::string to_string(FlatRegion region) {
    switch (region) {
        case FlatRegion::Empty: return "empty";
        case FlatRegion::Whole: return "whole";
        case FlatRegion::WholeMinusOrigin: return "whole_minus_origin";
        case FlatRegion::Origin: return "origin";
        case FlatRegion::PositiveHalf: return "positive_half";
        case FlatRegion::NegativeHalf: return "negative_half";
    }
    return "?";
}

PartitionDescriptor table_partition(const HomogeneousSolution& sol) {
    using R = FlatRegion;
    const Kappa k = sol.kappa();
    switch (sol.family()) {
        case Family::AbsX1: return {R::Whole, R::Empty, R::Empty};
        case Family::ImPow:
            if (k.is_integer()) {
                if (k.halves == 2) return {R::Whole, R::Empty, R::Empty};
                return {R::WholeMinusOrigin, R::Origin, R::Empty};
            }
            return {R::PositiveHalf, R::Origin, R::NegativeHalf};
        case Family::RePowPlus:
        case Family::RePowMinus:
            if (k.is_integer()) return {R::Empty, R::Empty, R::Whole};
            // reflected half-integer rows: contact on the negative half line
            return {R::NegativeHalf, R::Origin, R::PositiveHalf};
    }
    return {R::Empty, R::Empty, R::Empty};
}

bool region_contains(FlatRegion region, double x2) {
    switch (region) {
        case FlatRegion::Empty: return false;
        case FlatRegion::Whole: return true;
        case FlatRegion::WholeMinusOrigin: return x2 != 0.0;
        case FlatRegion::Origin: return x2 == 0.0;
        case FlatRegion::PositiveHalf: return x2 > 0.0;
        case FlatRegion::NegativeHalf: return x2 < 0.0;
    }
    return false;
}

HomogeneousResidual profile_residual(Family family, double kappa, const Grid& grid) {
    const Field f = Field::sample(grid, [&](Point p) { return eval_profile(family, kappa, p); });
    const double h2 = grid.spacing() * grid.spacing();
    HomogeneousResidual res{0.0, 0.0};
    for (NodeIndex k : grid.interior_nodes())
        res.interior = std::max(res.interior, std::abs(h2 * laplacian_residual(grid, f, k)));
    for (NodeIndex k : grid.flat_nodes())
        res.boundary = std::max(res.boundary, std::abs(boundary_residual(grid, f, k)));
    return res;
}

HomogeneousResidual verify_homogeneous_residual(const HomogeneousSolution& sol, const Grid& grid) {
    HomogeneousResidual r = profile_residual(sol.family(), sol.kappa().value(), grid);
    const double s = std::abs(sol.normalization());
    return {r.interior * s, r.boundary * s};
}

std::vector<HomogeneousSolution> admissible_solutions(double kappa_max) {
    std::vector<HomogeneousSolution> out;
    const int max_halves = static_cast<int>(std::floor(2.0 * kappa_max + 1e-9));
    if (max_halves >= 2) out.emplace_back(Family::AbsX1, Kappa{2});
    for (Family f : {Family::ImPow, Family::RePowPlus, Family::RePowMinus})
        for (int m = 1; m <= max_halves; ++m) {
            if (f == Family::ImPow && m == 2) continue;
            if (is_admissible(f, Kappa{m})) out.emplace_back(f, Kappa{m});
        }
    return out;
}

}  // namespace dnl
