#include "divcalc/okounkov.hpp"

#include <algorithm>
#include <set>

namespace divcalc {

namespace {

Rat factorial(std::size_t n) {
    Rat f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= static_cast<long>(i);
    return f;
}

}  // namespace

ToricFlag default_flag(const ToricModel& t, std::size_t cone) {
    if (cone >= t.max_cones().size()) throw Error("invalid-flag", "maximal cone index out of range");
    return ToricFlag{cone, t.max_cones()[cone]};
}

ToricFlag make_flag(const ToricModel& t, const std::vector<std::size_t>& ray_order) {
    std::vector<std::size_t> sorted = ray_order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t c = 0; c < t.max_cones().size(); ++c) {
        std::vector<std::size_t> cone = t.max_cones()[c];
        std::sort(cone.begin(), cone.end());
        if (cone == sorted) return ToricFlag{c, ray_order};
    }
    std::string desc;
    for (auto r : ray_order) desc += (desc.empty() ? "" : ",") + std::to_string(r);
    throw Error("invalid-flag", "rays {" + desc + "} do not span a maximal cone of " + t.name());
}

QMatrix flag_matrix(const ToricModel& t, const ToricFlag& flag) {
    QMatrix a(t.dim(), t.dim());
    for (std::size_t i = 0; i < flag.ray_order.size(); ++i)
        for (std::size_t j = 0; j < t.dim(); ++j) a(i, j) = t.rays()[flag.ray_order[i]][j];
    return a;
}

ToricDivisor choose_ample_bound(const ToricModel& t, const ToricDivisor& d) {
    ToricDivisor h(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) h[i] = Rat(ceil(d[i]));
    const ToricDivisor a = effective_ample(t);
    for (int k = 0; k <= 100000; ++k) {
        if (is_ample_toric(t, h)) return h;
        h += a;
    }
    throw Error("internal", "no ample bound found for " + to_string(d));
}

ValuationVector flag_valuation(const ToricModel& t, const ToricFlag& flag, const IntVec& u, long m,
                               const ToricDivisor& d, const ToricDivisor& h) {
    QVec uq = to_qvec(u);
    for (std::size_t r = 0; r < t.num_rays(); ++r)
        if (!Halfspace{t.rays()[r], Rat(m) * d[r]}.satisfied_by(uq))
            throw Error("section-outside-polytope",
                        "lattice point " + to_string(uq) + " is not in " + std::to_string(m) + "·P_D");
    ValuationVector out;
    out.reserve(t.dim());
    for (std::size_t ray : flag.ray_order) {
        Int v = 0;
        for (std::size_t j = 0; j < t.dim(); ++j) v += t.rays()[ray][j] * u[j];
        Rat twisted = Rat(v) + Rat(m) * h[ray];
        out.push_back(twisted.get_num());  // h is integral
    }
    return out;
}

OkounkovSample phi_points(const ToricModel& t, const ToricDivisor& d, const ToricFlag& flag, long m) {
    if (m < 1) throw Error("invalid-level", "level m must be at least 1");
    OkounkovSample s;
    s.m = m;
    s.h = choose_ample_bound(t, d);
    auto poly = divisor_polytope(t, Rat(m) * d);
    if (poly.empty()) return s;
    for (const auto& u : lattice_points(poly)) {
        auto v = flag_valuation(t, flag, u, m, d, s.h);
        QVec p(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) p[i] = Rat(v[i]) / m;
        s.points.push_back(std::move(p));
    }
    std::sort(s.points.begin(), s.points.end());
    if (!s.points.empty()) s.hull_volume = polytope_volume(LatticePolytope::from_points(t.dim(), s.points));
    return s;
}

bool OkounkovVolumeReport::holds() const {
    if (!injective) return false;
    for (const auto& c : containment)
        if (!c.holds) return false;
    for (const auto& l : levels)
        if (!l.bounded || (l.integral && !l.equal)) return false;
    return true;
}

OkounkovVolumeReport okounkov_volume_check(const ToricModel& t, const ToricDivisor& d, const ToricFlag& flag, long m_max) {
    if (m_max < 1) throw Error("invalid-level", "m_max must be at least 1");
    auto poly = divisor_polytope(t, d);
    if (poly.affine_dimension() != static_cast<int>(t.dim()))
        throw Error("degenerate-input", "P_D of " + to_string(d) + " is not full-dimensional");
    OkounkovVolumeReport r;
    r.flag = flag;
    r.toric_volume = toric_volume(t, d);
    Int lcm = 1;
    for (const auto& v : poly.vertices())
        for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
    r.integral_level = lcm.fits_slong_p() ? lcm.get_si() : 0;

    const Rat fact = factorial(t.dim());
    std::vector<LatticePolytope> hulls;
    for (long m = 1; m <= m_max; ++m) {
        auto s = phi_points(t, d, flag, m);
        std::set<QVec> distinct(s.points.begin(), s.points.end());
        if (distinct.size() != s.points.size()) r.injective = false;
        hulls.push_back(s.points.empty() ? LatticePolytope() : LatticePolytope::from_points(t.dim(), s.points));
        LevelVolume lv;
        lv.m = m;
        lv.scaled_hull_volume = fact * s.hull_volume;
        lv.bounded = lv.scaled_hull_volume <= r.toric_volume;
        lv.integral = r.integral_level != 0 && m % r.integral_level == 0;
        lv.equal = lv.scaled_hull_volume == r.toric_volume;
        r.levels.push_back(lv);
        r.h = s.h;
        r.samples.push_back(std::move(s));
    }
    for (long m = 1; m <= m_max; ++m)
        for (long k : {2L, 3L}) {
            if (k * m > m_max) continue;
            const auto& inner = hulls[m - 1];
            const auto& outer = hulls[k * m - 1];
            bool ok = inner.empty() || (!outer.empty() && contains(outer, inner));
            r.containment.push_back({m, k * m, ok});
        }
    return r;
}

SectionIdentity section_space_identity(const ToricModel& t, const ToricDivisor& d, long m) {
    SectionIdentity out;
    out.m = m;
    ToricDivisor md = Rat(m) * d;
    ToricDivisor reduced = md;
    for (std::size_t r = 0; r < t.num_rays(); ++r) reduced[r] -= Rat(floor(Rat(m) * sigma_toric(t, d, r).value));
    auto a = lattice_points(divisor_polytope(t, md));
    auto b = lattice_points(divisor_polytope(t, reduced));
    out.count_d = a.size();
    out.count_reduced = b.size();
    out.same_points = a == b;
    return out;
}

long equal_volume_sections(const ToricModel& t, const ToricDivisor& d1, const ToricDivisor& d2, long n_max) {
    for (long n = 1; n <= n_max; ++n) {
        auto a = lattice_points(divisor_polytope(t, Rat(n) * d1));
        auto b = lattice_points(divisor_polytope(t, Rat(n) * d2));
        if (a != b) return n;
    }
    return 0;
}

}  // namespace divcalc
