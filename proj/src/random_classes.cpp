#include "divcalc/random_classes.hpp"

namespace divcalc {

long Sampler::uniform(long lo, long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    // rejection keeps the draw unbiased and portable
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do x = rng_();
    while (x >= limit);
    return lo + static_cast<long>(x % span);
}

Rat Sampler::rational(long lo, long hi, long max_den) {
    Rat r(uniform(lo, hi), uniform(1, max_den));
    r.canonicalize();
    return r;
}

QVec random_psef_surface(const SurfaceModel& m, Sampler& s) {
    while (true) {
        QVec d(m.rank());
        for (const auto& g : m.psef_generators())
            if (s.uniform(0, 2) != 0) d += s.rational(0, 4, 3) * g;
        if (!d.is_zero()) return d;
    }
}

QVec random_big_surface(const SurfaceModel& m, Sampler& s) {
    while (true) {
        QVec d = random_psef_surface(m, s);
        if (s.uniform(0, 2) == 0) d += s.rational(1, 2, 2) * m.ample();
        if (is_big(m, d)) return d;
    }
}

QVec random_nef_big_surface(const SurfaceModel& m, Sampler& s) {
    while (true) {
        QVec p = zariski_decompose(m, random_big_surface(m, s)).positive;
        if (m.intersect(p, p) > 0) return p;
    }
}

QVec random_nef_big_toric(const ToricModel& t, Sampler& s) {
    const QVec a = effective_ample(t);
    while (true) {
        QVec d = Rat(s.uniform(0, 2)) * a;
        for (std::size_t r = 0; r < d.size(); ++r) d[r] += s.uniform(-1, 2);
        if (is_nef_toric(t, d) && is_big_toric(t, d)) return d;
    }
}

QVec random_big_toric(const ToricModel& t, Sampler& s) {
    while (true) {
        QVec d(t.num_rays());
        for (std::size_t r = 0; r < d.size(); ++r) d[r] = s.uniform(-1, 3);
        if (is_big_toric(t, d)) return d;
    }
}

LatticePolytope random_polytope(std::size_t dim, Sampler& s) {
    while (true) {
        std::vector<QVec> pts;
        const long n = s.uniform(static_cast<long>(dim) + 1, static_cast<long>(dim) + 4);
        for (long i = 0; i < n; ++i) {
            QVec p(dim);
            for (std::size_t j = 0; j < dim; ++j) p[j] = s.rational(-4, 4, 2);
            pts.push_back(std::move(p));
        }
        auto poly = LatticePolytope::from_points(dim, std::move(pts));
        if (poly.affine_dimension() == static_cast<int>(dim)) return poly;
    }
}

}  // namespace divcalc
