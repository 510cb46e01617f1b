#include "divcalc/surface.hpp"

#include <algorithm>

#include "divcalc/lp.hpp"

namespace divcalc {

namespace {

void require_length(const SurfaceModel& m, const QVec& d, const char* what) {
    if (d.size() != m.rank())
        throw Error("dimension-mismatch", std::string(what) + " has " + std::to_string(d.size()) +
                                              " coordinates but the model has rank " + std::to_string(m.rank()));
}

}  // namespace

std::vector<Issue> SurfaceModel::validate(const SurfaceData& data) {
    std::vector<Issue> issues;
    const auto& g = data.gram;
    const std::size_t n = g.rows();
    if (n == 0 || g.cols() != n) {
        issues.push_back({"gram-shape", "intersection form must be a nonempty square matrix"});
        return issues;
    }
    if (!g.is_symmetric()) issues.push_back({"gram-symmetry", "intersection form is not symmetric"});
    if (!g.is_integral()) issues.push_back({"gram-integrality", "intersection form has non-integer entries"});
    if (g.is_symmetric()) {
        auto in = inertia(g);
        if (in.positive != 1 || in.negative != n - 1)
            issues.push_back({"hodge-index", "intersection form has signature (" + std::to_string(in.positive) + ", " +
                                                 std::to_string(in.negative) + ") with " + std::to_string(in.zero) +
                                                 " null directions; expected (1, " + std::to_string(n - 1) + ")"});
    }
    if (!data.labels.empty() && data.labels.size() != n)
        issues.push_back({"labels", "expected " + std::to_string(n) + " labels"});
    if (data.psef_generators.empty()) issues.push_back({"psef-generators", "pseudo-effective cone needs generators"});

    bool lengths_ok = data.ample.size() == n;
    if (!lengths_ok) issues.push_back({"dimension", "ample class has the wrong length"});
    for (std::size_t i = 0; i < data.psef_generators.size(); ++i) {
        if (data.psef_generators[i].size() != n) {
            issues.push_back({"dimension", "psef generator " + std::to_string(i) + " has the wrong length"});
            lengths_ok = false;
        } else if (data.psef_generators[i].is_zero()) {
            issues.push_back({"psef-generators", "psef generator " + std::to_string(i) + " is zero"});
        }
    }
    if (!lengths_ok || !g.is_symmetric()) return issues;

    if (gram_pairing(g, data.ample, data.ample) <= 0)
        issues.push_back({"ample-positivity", "ample class has nonpositive self-intersection"});
    for (std::size_t i = 0; i < data.psef_generators.size(); ++i)
        if (gram_pairing(g, data.ample, data.psef_generators[i]) <= 0)
            issues.push_back({"ample-positivity", "ample class is not positive on psef generator " + std::to_string(i)});

    for (std::size_t i = 0; i < data.psef_generators.size(); ++i) {
        const auto& gi = data.psef_generators[i];
        if (gram_pairing(g, gi, gi) >= 0) continue;
        std::vector<QVec> others;
        for (std::size_t j = 0; j < data.psef_generators.size(); ++j)
            if (j != i) others.push_back(data.psef_generators[j]);
        if (cone_contains(others, gi))
            issues.push_back({"extremality", "negative generator " + std::to_string(i) +
                                                 " is a nonnegative combination of the other generators"});
    }
    return issues;
}

SurfaceModel::SurfaceModel(SurfaceData data) : d_(std::move(data)) {
    auto issues = validate(d_);
    if (!issues.empty()) throw ValidationError(std::move(issues));
}

std::string SurfaceModel::generator_label(std::size_t i) const {
    const QVec& g = d_.psef_generators.at(i);
    std::string out;
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (g[k] == 0) continue;
        std::string name = d_.labels.empty() ? "e" + std::to_string(k) : d_.labels[k];
        Rat c = g[k];
        if (!out.empty()) {
            out += c < 0 ? "-" : "+";
            c = abs(c);
        } else if (c < 0) {
            out += "-";
            c = -c;
        }
        if (c != 1) out += divcalc::to_string(c) + "*";
        out += name;
    }
    return out.empty() ? "0" : out;
}

Rat SurfaceModel::intersect(const QVec& a, const QVec& b) const {
    require_length(*this, a, "first class");
    require_length(*this, b, "second class");
    return gram_pairing(d_.gram, a, b);
}

QVec ZariskiPair::negative_class(const SurfaceModel& m) const {
    QVec n(m.rank());
    for (const auto& c : negative) n += c.coefficient * m.psef_generators()[c.generator];
    return n;
}

bool is_pseudo_effective(const SurfaceModel& m, const QVec& d) {
    require_length(m, d, "divisor");
    return cone_contains(m.psef_generators(), d);
}

bool is_nef(const SurfaceModel& m, const QVec& d) {
    require_length(m, d, "divisor");
    for (const auto& g : m.psef_generators())
        if (m.intersect(d, g) < 0) return false;
    return true;
}

bool is_big(const SurfaceModel& m, const QVec& d) { return surface_volume(m, d) > 0; }

ZariskiPair zariski_decompose(const SurfaceModel& m, const QVec& d) {
    require_length(m, d, "divisor");
    if (!is_pseudo_effective(m, d))
        throw Error("not-pseudo-effective", "class " + to_string(d) + " is not pseudo-effective on " + m.name());

    const auto& gens = m.psef_generators();
    std::vector<std::size_t> negative_curves;
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (m.intersect(gens[i], gens[i]) < 0) negative_curves.push_back(i);

    std::vector<std::size_t> support;  // grows monotonically
    QVec coeffs;
    QVec p = d;
    for (std::size_t round = 0; round <= gens.size(); ++round) {
        bool grew = false;
        for (auto i : negative_curves) {
            if (std::find(support.begin(), support.end(), i) != support.end()) continue;
            if (m.intersect(p, gens[i]) < 0) {
                support.push_back(i);
                grew = true;
            }
        }
        if (!grew) break;
        std::sort(support.begin(), support.end());
        const std::size_t k = support.size();
        QMatrix block(k, k);
        QVec rhs(k);
        for (std::size_t a = 0; a < k; ++a) {
            rhs[a] = m.intersect(d, gens[support[a]]);
            for (std::size_t b = 0; b < k; ++b) block(a, b) = m.intersect(gens[support[a]], gens[support[b]]);
        }
        if (!is_negative_definite(block))
            throw Error("model-violation", "Gram block of the negative support is not negative definite on " + m.name() +
                                               "; the psef generator list is inconsistent");
        auto x = solve(block, rhs);
        if (!x) throw Error("model-violation", "singular Gram block in Zariski iteration");
        coeffs = *x;
        p = d;
        for (std::size_t a = 0; a < k; ++a) p -= coeffs[a] * gens[support[a]];
    }

    ZariskiPair out;
    out.positive = p;
    for (std::size_t a = 0; a < support.size(); ++a) {
        if (coeffs[a] < 0)
            throw Error("model-violation", "negative Zariski coefficient on generator " + std::to_string(support[a]));
        if (coeffs[a] > 0) out.negative.push_back({support[a], coeffs[a]});
    }
    std::vector<std::size_t> idx;
    for (const auto& c : out.negative) idx.push_back(c.generator);
    out.support_gram = QMatrix(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b < idx.size(); ++b) out.support_gram(a, b) = m.intersect(gens[idx[a]], gens[idx[b]]);
    out.generator_pairings.reserve(gens.size());
    for (const auto& g : gens) {
        Rat v = m.intersect(p, g);
        if (v < 0)
            throw Error("model-violation", "positive part fails nefness against a psef generator on " + m.name() +
                                               "; a negative curve is missing from the generator list");
        out.generator_pairings.push_back(v);
    }
    return out;
}

Rat surface_volume(const SurfaceModel& m, const QVec& d) {
    require_length(m, d, "divisor");
    if (!is_pseudo_effective(m, d)) return 0;
    auto z = zariski_decompose(m, d);
    return m.intersect(z.positive, z.positive);
}

namespace {

QVec positive_part_of_big(const SurfaceModel& m, const QVec& d, const char* which) {
    require_length(m, d, which);
    if (!is_pseudo_effective(m, d)) throw Error("not-big", std::string(which) + " " + to_string(d) + " is not big");
    auto z = zariski_decompose(m, d);
    if (m.intersect(z.positive, z.positive) <= 0)
        throw Error("not-big", std::string(which) + " " + to_string(d) + " is not big");
    return z.positive;
}

}  // namespace

Rat positive_product_surface(const SurfaceModel& m, const QVec& d1, const QVec& d2) {
    QVec p1 = positive_part_of_big(m, d1, "D1");
    QVec p2 = positive_part_of_big(m, d2, "D2");
    return m.intersect(p1, p2);
}

SlopeCertificate slope_surface(const SurfaceModel& m, const QVec& d1, const QVec& d2) {
    QVec p1 = positive_part_of_big(m, d1, "D1");
    QVec p2 = positive_part_of_big(m, d2, "D2");
    const auto& gens = m.psef_generators();
    const std::size_t r = m.rank();
    // columns: s, λ_1..λ_n;  s·P2 + Σ λ_i g_i = P1
    QMatrix a(r, gens.size() + 1);
    for (std::size_t i = 0; i < r; ++i) {
        a(i, 0) = p2[i];
        for (std::size_t j = 0; j < gens.size(); ++j) a(i, j + 1) = gens[j][i];
    }
    QVec c(gens.size() + 1);
    c[0] = 1;
    auto res = solve_lp(a, p1, c);
    if (res.status != LpStatus::optimal)
        throw Error("model-violation", "slope LP did not reach an optimum; the psef cone is not pointed");
    return {res.objective, res.dual};
}

AugmentedBaseLocus augmented_base_divisorial(const SurfaceModel& m, const QVec& d) {
    require_length(m, d, "divisor");
    if (!is_big(m, d)) throw Error("not-big", "class " + to_string(d) + " is not big");
    AugmentedBaseLocus out;
    Rat eps(1, 2);
    std::optional<BaseLocusSample> prev;
    auto support_of = [](const std::vector<NegativeComponent>& n) {
        std::vector<std::size_t> s;
        for (const auto& c : n) s.push_back(c.generator);
        return s;
    };
    for (int halving = 0; halving < 40; ++halving, eps /= 2) {
        QVec shifted = d - eps * m.ample();
        if (!is_pseudo_effective(m, shifted)) {
            prev.reset();
            continue;
        }
        BaseLocusSample sample{eps, zariski_decompose(m, shifted).negative};
        out.samples.push_back(sample);
        if (prev && support_of(prev->negative) == support_of(sample.negative)) {
            bool envelope_ok = true;
            for (std::size_t i = 0; i < sample.negative.size(); ++i) {
                const Rat& near = sample.negative[i].coefficient;
                const Rat& far = prev->negative[i].coefficient;
                // line through (2ε, far) and (ε, near) evaluated at ε = 0
                if (near <= 0 || 2 * near - far < 0) envelope_ok = false;
            }
            if (envelope_ok) {
                out.support = support_of(sample.negative);
                return out;
            }
        }
        prev = sample;
    }
    throw Error("no-stabilization", "Supp N(D - eps*A) did not stabilize within 40 halvings on " + m.name());
}

}  // namespace divcalc
