#include "divcalc/toric.hpp"

#include <algorithm>
#include <map>

#include "divcalc/lp.hpp"

namespace divcalc {

namespace {

QMatrix cone_matrix(const ToricData& d, const std::vector<std::size_t>& cone) {
    QMatrix m(cone.size(), d.dim);
    for (std::size_t i = 0; i < cone.size(); ++i)
        for (std::size_t j = 0; j < d.dim; ++j) m(i, j) = d.rays[cone[i]][j];
    return m;
}

void require_divisor(const ToricModel& t, const ToricDivisor& d) {
    if (d.size() != t.num_rays())
        throw Error("dimension-mismatch", "toric divisor has " + std::to_string(d.size()) + " coefficients but " +
                                              t.name() + " has " + std::to_string(t.num_rays()) + " rays");
}

// Deterministic generic sample points for point location.
std::vector<QVec> sample_points(std::size_t dim) {
    static const long offsets[] = {97, 89, 83, 79, 73, 71, 67, 61};
    std::vector<QVec> pts;
    const long range = dim <= 2 ? 4 : 2;
    std::vector<long> cur(dim, -range);
    while (true) {
        QVec p(dim);
        for (std::size_t j = 0; j < dim; ++j) p[j] = Rat(cur[j]) + Rat(1, offsets[j % 8] + 7 * static_cast<long>(pts.size() % 5));
        pts.push_back(p);
        std::size_t j = 0;
        while (j < dim && cur[j] == range) cur[j++] = -range;
        if (j == dim) break;
        ++cur[j];
    }
    return pts;
}

}  // namespace

std::vector<Issue> ToricModel::validate(const ToricData& data) {
    std::vector<Issue> issues;
    if (data.dim == 0) {
        issues.push_back({"fan-dimension", "toric dimension must be positive"});
        return issues;
    }
    if (data.rays.empty()) issues.push_back({"fan-rays", "fan has no rays"});
    bool rays_ok = true;
    for (std::size_t i = 0; i < data.rays.size(); ++i) {
        const auto& r = data.rays[i];
        if (r.size() != data.dim) {
            issues.push_back({"dimension", "ray " + std::to_string(i) + " has the wrong length"});
            rays_ok = false;
            continue;
        }
        Int g = 0;
        for (const auto& x : r) g = gcd(g, x);
        if (g != 1) {
            issues.push_back({"ray-primitive", "ray " + std::to_string(i) + " is not a primitive nonzero vector"});
            rays_ok = false;
        }
    }
    if (!data.labels.empty() && data.labels.size() != data.rays.size())
        issues.push_back({"labels", "expected one label per ray"});
    if (data.max_cones.empty()) issues.push_back({"fan-cones", "fan has no maximal cones"});
    if (!rays_ok) return issues;

    bool cones_ok = true;
    std::map<std::vector<std::size_t>, int> facet_count;
    for (std::size_t c = 0; c < data.max_cones.size(); ++c) {
        auto cone = data.max_cones[c];
        std::sort(cone.begin(), cone.end());
        bool shape_ok = cone.size() == data.dim && std::adjacent_find(cone.begin(), cone.end()) == cone.end();
        for (auto r : cone)
            if (r >= data.rays.size()) shape_ok = false;
        if (!shape_ok) {
            issues.push_back({"fan-cones", "maximal cone " + std::to_string(c) + " must list " + std::to_string(data.dim) +
                                               " distinct valid rays"});
            cones_ok = false;
            continue;
        }
        Rat det = determinant(cone_matrix(data, cone));
        if (abs(det) != 1) {
            issues.push_back({"smoothness", "maximal cone " + std::to_string(c) + " has determinant " + to_string(det)});
            cones_ok = false;
        }
        for (std::size_t skip = 0; skip < cone.size(); ++skip) {
            std::vector<std::size_t> facet;
            for (std::size_t i = 0; i < cone.size(); ++i)
                if (i != skip) facet.push_back(cone[i]);
            ++facet_count[facet];
        }
    }
    if (!cones_ok) return issues;
    for (const auto& [facet, count] : facet_count)
        if (count != 2) {
            issues.push_back({"completeness", "a codimension-one face is shared by " + std::to_string(count) +
                                                  " maximal cones instead of 2"});
            break;
        }

    std::vector<QMatrix> inverses;
    for (const auto& cone : data.max_cones) {
        // columns of the inverse transpose give coordinates in the ray basis
        QMatrix m = cone_matrix(data, cone).transpose();
        QMatrix inv(data.dim, data.dim);
        for (std::size_t j = 0; j < data.dim; ++j) {
            QVec e(data.dim);
            e[j] = 1;
            auto col = solve(m, e);
            for (std::size_t i = 0; i < data.dim; ++i) inv(i, j) = (*col)[i];
        }
        inverses.push_back(inv);
    }
    for (const auto& p : sample_points(data.dim)) {
        int closed = 0, open = 0;
        for (const auto& inv : inverses) {
            QVec coords = inv * p;
            bool nonneg = true, pos = true;
            for (const auto& x : coords) {
                if (x < 0) nonneg = false;
                if (x <= 0) pos = false;
            }
            closed += nonneg;
            open += pos;
        }
        if (closed == 0 || open > 1) {
            issues.push_back({"completeness", "point location sample " + to_string(p) + " lies in " +
                                                  std::to_string(closed) + " closed and " + std::to_string(open) +
                                                  " open maximal cones"});
            break;
        }
    }
    return issues;
}

ToricModel::ToricModel(ToricData data) : d_(std::move(data)) {
    auto issues = validate(d_);
    if (!issues.empty()) throw ValidationError(std::move(issues));
}

std::string ToricModel::ray_label(std::size_t i) const {
    if (!d_.labels.empty()) return d_.labels.at(i);
    return "D" + std::to_string(i);
}

LatticePolytope divisor_polytope(const ToricModel& t, const ToricDivisor& d) {
    require_divisor(t, d);
    std::vector<Halfspace> hs;
    hs.reserve(t.num_rays());
    for (std::size_t r = 0; r < t.num_rays(); ++r) hs.push_back(Halfspace{t.rays()[r], d[r]});
    return LatticePolytope::from_halfspaces(t.dim(), std::move(hs));
}

Rat toric_volume(const ToricModel& t, const ToricDivisor& d) {
    Rat fact = 1;
    for (std::size_t i = 2; i <= t.dim(); ++i) fact *= static_cast<long>(i);
    return fact * polytope_volume(divisor_polytope(t, d));
}

QVec cone_character(const ToricModel& t, const ToricDivisor& d, std::size_t cone) {
    require_divisor(t, d);
    const auto& rays = t.max_cones().at(cone);
    QVec rhs(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) rhs[i] = -d[rays[i]];
    return *solve(cone_matrix(t.data(), rays), rhs);
}

namespace {

// min over rays outside σ of ⟨m_σ, v_ρ⟩ + a_ρ, across all σ; nullopt-like flag via bool.
bool convexity(const ToricModel& t, const ToricDivisor& d, bool strict) {
    for (std::size_t c = 0; c < t.max_cones().size(); ++c) {
        QVec m = cone_character(t, d, c);
        const auto& cone = t.max_cones()[c];
        for (std::size_t r = 0; r < t.num_rays(); ++r) {
            if (std::find(cone.begin(), cone.end(), r) != cone.end()) continue;
            Rat v = Halfspace{t.rays()[r], d[r]}.evaluate(m);
            if (v < 0 || (strict && v == 0)) return false;
        }
    }
    return true;
}

}  // namespace

bool is_nef_toric(const ToricModel& t, const ToricDivisor& d) { return convexity(t, d, false); }
bool is_ample_toric(const ToricModel& t, const ToricDivisor& d) { return convexity(t, d, true); }
bool is_big_toric(const ToricModel& t, const ToricDivisor& d) { return toric_volume(t, d) > 0; }

SigmaValue sigma_toric(const ToricModel& t, const ToricDivisor& d, std::size_t ray) {
    if (ray >= t.num_rays()) throw Error("dimension-mismatch", "ray index out of range");
    auto p = divisor_polytope(t, d);
    if (p.empty()) throw Error("empty-polytope", "divisor " + to_string(d) + " has no sections (empty polytope)");
    Halfspace h{t.rays()[ray], d[ray]};
    SigmaValue best{h.evaluate(p.vertices()[0]), p.vertices()[0]};
    for (const auto& v : p.vertices()) {
        Rat val = h.evaluate(v);
        if (val < best.value) best = {val, v};
    }
    return best;
}

ToricDivisor p_sigma_toric(const ToricModel& t, const ToricDivisor& d) {
    ToricDivisor out = d;
    for (std::size_t r = 0; r < t.num_rays(); ++r) out[r] -= sigma_toric(t, d, r).value;
    return out;
}

std::vector<Rat> mixed_volume_sequence(const ToricModel& t, const ToricDivisor& d1, const ToricDivisor& d2) {
    if (!is_nef_toric(t, d1)) throw Error("not-nef", "D1 " + to_string(d1) + " is not nef on " + t.name());
    if (!is_nef_toric(t, d2)) throw Error("not-nef", "D2 " + to_string(d2) + " is not nef on " + t.name());
    const std::size_t d = t.dim();
    auto p1 = divisor_polytope(t, d1);
    auto p2 = divisor_polytope(t, d2);

    std::vector<std::pair<long, long>> samples = {{1, 0}, {0, 1}};
    for (long k = 1; k + 1 <= static_cast<long>(d); ++k) samples.push_back({1, k});

    QMatrix a(d + 1, d + 1);
    QVec b(d + 1);
    for (std::size_t row = 0; row < samples.size(); ++row) {
        auto [t1, t2] = samples[row];
        for (std::size_t i = 0; i <= d; ++i) a(row, i) = divcalc::pow(Rat(t1), i) * divcalc::pow(Rat(t2), d - i);
        b[row] = polytope_volume(minkowski_sum(p1.scaled(t1), p2.scaled(t2)));
    }
    auto coeffs = solve(a, b);
    if (!coeffs) throw Error("internal", "volume polynomial interpolation is singular");

    std::vector<Rat> s(d + 1);
    Rat fact = 1;
    for (std::size_t i = 2; i <= d; ++i) fact *= static_cast<long>(i);
    for (std::size_t i = 0; i <= d; ++i) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), d, i);
        s[i] = fact * (*coeffs)[i] / Rat(binom);
    }
    if (s[d] != toric_volume(t, d1) || s[0] != toric_volume(t, d2))
        throw Error("internal", "mixed volume endpoints disagree with toric volumes");
    return s;
}

Rat slope_toric(const ToricModel& t, const ToricDivisor& d1, const ToricDivisor& d2) {
    require_divisor(t, d1);
    require_divisor(t, d2);
    if (!is_big_toric(t, d1)) throw Error("not-big", "D1 " + to_string(d1) + " is not big");
    if (!is_big_toric(t, d2)) throw Error("not-big", "D2 " + to_string(d2) + " is not big");
    const std::size_t d = t.dim(), n = t.num_rays();
    // columns: s, u+ (d), u- (d), w (n);  -a2 s + <u+ - u-, v> - w = -a1
    QMatrix a(n, 1 + 2 * d + n);
    QVec b(n), c(1 + 2 * d + n);
    c[0] = 1;
    for (std::size_t r = 0; r < n; ++r) {
        a(r, 0) = -d2[r];
        for (std::size_t j = 0; j < d; ++j) {
            a(r, 1 + j) = t.rays()[r][j];
            a(r, 1 + d + j) = -t.rays()[r][j];
        }
        a(r, 1 + 2 * d + r) = -1;
        b[r] = -d1[r];
    }
    auto res = solve_lp(a, b, c);
    if (res.status != LpStatus::optimal) throw Error("internal", "toric slope LP has no finite optimum");
    return res.objective;
}

ToricDivisor effective_ample(const ToricModel& t) {
    const std::size_t n = t.num_rays();
    // For each cone σ and ray ρ ∉ σ:  a_ρ − v_ρᵀ V_σ⁻¹ a_σ ≥ 1.
    std::vector<QVec> rows;
    for (const auto& cone : t.max_cones()) {
        QMatrix vt = cone_matrix(t.data(), cone).transpose();
        for (std::size_t r = 0; r < n; ++r) {
            if (std::find(cone.begin(), cone.end(), r) != cone.end()) continue;
            // w solves V_σᵀ... : v_ρᵀ V_σ⁻¹ = wᵀ  ⇔  V_σᵀ w = v_ρ
            auto w = solve(vt, to_qvec(t.rays()[r]));
            QVec row(n);
            row[r] += 1;
            for (std::size_t i = 0; i < cone.size(); ++i) row[cone[i]] -= (*w)[i];
            rows.push_back(row);
        }
    }
    // columns: a+ (n), a- (n), slack (rows)
    QMatrix a(rows.size(), 2 * n + rows.size());
    QVec b(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            a(i, j) = rows[i][j];
            a(i, n + j) = -rows[i][j];
        }
        a(i, 2 * n + i) = -1;
        b[i] = 1;
    }
    auto res = solve_lp(a, b, QVec(2 * n + rows.size()));
    if (res.status == LpStatus::infeasible) throw Error("model-violation", t.name() + " admits no ample divisor");
    QVec amp(n);
    for (std::size_t j = 0; j < n; ++j) amp[j] = res.x[j] - res.x[n + j];
    Int l = 1;
    for (const auto& x : amp) l = lcm(l, Int(x.get_den()));
    amp *= Rat(l);
    QVec m = cone_character(t, amp, 0);
    for (std::size_t r = 0; r < n; ++r) amp[r] = Halfspace{t.rays()[r], amp[r]}.evaluate(m);
    return amp;
}

}  // namespace divcalc
