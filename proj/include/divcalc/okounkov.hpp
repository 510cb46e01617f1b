#pragma once

#include <string>
#include <vector>

#include "divcalc/toric.hpp"

namespace divcalc {

/// Torus-invariant flag at the fixed point of a maximal cone:
/// Y_i = D_{ρ_1} ∩ … ∩ D_{ρ_i} for the rays in `ray_order`.
struct ToricFlag {
    std::size_t cone = 0;
    std::vector<std::size_t> ray_order;
};

/// Flag of maximal cone `cone` with its rays in listed order.
ToricFlag default_flag(const ToricModel& t, std::size_t cone = 0);
/// Rays must span one maximal cone ("invalid-flag").
ToricFlag make_flag(const ToricModel& t, const std::vector<std::size_t>& ray_order);
/// Rows are the ray vectors in flag order; unimodular.
QMatrix flag_matrix(const ToricModel& t, const ToricFlag& flag);

/// Smallest ⌈D⌉ + k·A (k ≥ 0) that is ample, A the effective ample divisor.
ToricDivisor choose_ample_bound(const ToricModel& t, const ToricDivisor& d);

using ValuationVector = std::vector<Int>;

/// ν(χ^u · g^m) = A·u + m·h, h the coefficients of H on the flag rays.
/// Throws "section-outside-polytope" unless u ∈ m·P_D.
ValuationVector flag_valuation(const ToricModel& t, const ToricFlag& flag, const IntVec& u, long m,
                               const ToricDivisor& d, const ToricDivisor& h);

struct OkounkovSample {
    long m = 0;
    std::vector<QVec> points;  // (1/m)·Φ_m, sorted
    Rat hull_volume;
    ToricDivisor h;
};

OkounkovSample phi_points(const ToricModel& t, const ToricDivisor& d, const ToricFlag& flag, long m);

struct ContainmentCheck {
    long m = 0, km = 0;
    bool holds = false;
};

struct LevelVolume {
    long m = 0;
    Rat scaled_hull_volume;  // d!·hull_volume
    bool bounded = false;    // ≤ toric volume
    bool integral = false;   // m·P_D has integral vertices
    bool equal = false;      // = toric volume (required when integral)
};

struct OkounkovVolumeReport {
    ToricFlag flag;
    ToricDivisor h;
    Rat toric_volume;
    long integral_level = 0;  // lcm of vertex denominators of P_D
    std::vector<OkounkovSample> samples;
    std::vector<ContainmentCheck> containment;
    std::vector<LevelVolume> levels;
    bool injective = true;
    bool holds() const;
};

/// Sub-hull monotonicity for m | km ≤ m_max (k = 2, 3), the volume sandwich at
/// every level, and equality at levels where m·P_D is a lattice polytope.
/// Requires a full-dimensional P_D ("degenerate-input").
OkounkovVolumeReport okounkov_volume_check(const ToricModel& t, const ToricDivisor& d, const ToricFlag& flag, long m_max);

struct SectionIdentity {
    long m = 0;
    std::size_t count_d = 0;
    std::size_t count_reduced = 0;
    bool same_points = false;
};

/// Lattice points of m·P_D against those of the polytope of
/// m·D − Σ ⌊m·σ_ρ(D)⌋·D_ρ.
SectionIdentity section_space_identity(const ToricModel& t, const ToricDivisor& d, long m);

/// For D1 ≤ D2 with equal volume: n·P_{D1} and n·P_{D2} have the same lattice
/// points for n = 1..n_max. Returns the first failing n, or 0.
long equal_volume_sections(const ToricModel& t, const ToricDivisor& d1, const ToricDivisor& d2, long n_max);

}  // namespace divcalc
