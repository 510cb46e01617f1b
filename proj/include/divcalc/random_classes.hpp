#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "divcalc/polytope.hpp"
#include "divcalc/surface.hpp"
#include "divcalc/toric.hpp"

namespace divcalc {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

/// Seeded generator of random exact inputs. The draw sequence depends only on
/// the seed, not on the standard library's distribution implementations.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed = kDefaultSeed) : rng_(seed) {}

    /// Uniform integer in [lo, hi].
    long uniform(long lo, long hi);
    /// p/q with p in [lo, hi] and q in [1, max_den].
    Rat rational(long lo, long hi, long max_den);
    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[static_cast<std::size_t>(uniform(0, static_cast<long>(i) - 1))]);
    }

private:
    std::mt19937_64 rng_;
};

/// Nonzero nonnegative combination of the pseudo-effective generators.
QVec random_psef_surface(const SurfaceModel& m, Sampler& s);
/// Pseudo-effective class with positive volume, often not nef.
QVec random_big_surface(const SurfaceModel& m, Sampler& s);
/// Nef class with positive volume.
QVec random_nef_big_surface(const SurfaceModel& m, Sampler& s);

/// Integral nef toric divisor with full-dimensional polytope.
QVec random_nef_big_toric(const ToricModel& t, Sampler& s);
/// Integral big toric divisor (often not nef).
QVec random_big_toric(const ToricModel& t, Sampler& s);

/// Full-dimensional hull of a few random rational points.
LatticePolytope random_polytope(std::size_t dim, Sampler& s);

}  // namespace divcalc
