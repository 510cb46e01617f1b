#include "divcalc/analysis.hpp"

namespace divcalc {

const char* const kSlopeDefinitionNote =
    "slope s(D1,D2) is the largest s such that <D1> - s<D2> is pseudo-effective; "
    "computed as the supremum over positive parts";

namespace {

Rat positive_part_square(const SurfaceModel& m, const QVec& p) { return m.intersect(p, p); }

QVec big_positive_part(const SurfaceModel& m, const QVec& d, const char* which) {
    if (d.size() != m.rank()) throw Error("dimension-mismatch", std::string(which) + " has the wrong length");
    if (!is_pseudo_effective(m, d)) throw Error("not-big", std::string(which) + " " + to_string(d) + " is not big");
    QVec p = zariski_decompose(m, d).positive;
    if (positive_part_square(m, p) <= 0) throw Error("not-big", std::string(which) + " " + to_string(d) + " is not big");
    return p;
}

void require_nef_big(const ToricModel& t, const QVec& d, const char* which) {
    if (d.size() != t.num_rays()) throw Error("dimension-mismatch", std::string(which) + " has the wrong length");
    if (!is_nef_toric(t, d))
        throw Error("not-nef", std::string(which) + " " + to_string(d) +
                                   " is not nef; the toric backend only serves nef pairs");
    if (!is_big_toric(t, d)) throw Error("not-big", std::string(which) + " " + to_string(d) + " is not big");
}

void require_dimension_two_or_more(const SSequence& s) {
    if (s.d < 2) throw Error("unsupported-dimension", "Diskant and radii checks need dimension >= 2");
}

}  // namespace

// ---- surface backend -------------------------------------------------------

bool SurfaceBackend::is_big(const QVec& d) const { return divcalc::is_big(m_, d); }

Rat SurfaceBackend::volume(const QVec& d) const { return surface_volume(m_, d); }

std::vector<Rat> SurfaceBackend::s_sequence(const QVec& d1, const QVec& d2) const {
    QVec p1 = big_positive_part(m_, d1, "D1");
    QVec p2 = big_positive_part(m_, d2, "D2");
    return {m_.intersect(p2, p2), m_.intersect(p1, p2), m_.intersect(p1, p1)};
}

Rat SurfaceBackend::slope(const QVec& d1, const QVec& d2) const { return slope_surface(m_, d1, d2).slope; }

std::optional<Rat> SurfaceBackend::proportionality(const QVec& d1, const QVec& d2) const {
    QVec p1 = big_positive_part(m_, d1, "D1");
    QVec p2 = big_positive_part(m_, d2, "D2");
    for (std::size_t i = 0; i < p2.size(); ++i) {
        if (p2[i] == 0) continue;
        Rat lambda = p1[i] / p2[i];
        if (lambda > 0 && p1 == lambda * p2) return lambda;
        return std::nullopt;
    }
    return std::nullopt;
}

// ---- toric nef backend -----------------------------------------------------

bool ToricNefBackend::is_big(const QVec& d) const { return is_big_toric(t_, d); }

Rat ToricNefBackend::volume(const QVec& d) const { return toric_volume(t_, d); }

std::vector<Rat> ToricNefBackend::s_sequence(const QVec& d1, const QVec& d2) const {
    require_nef_big(t_, d1, "D1");
    require_nef_big(t_, d2, "D2");
    return mixed_volume_sequence(t_, d1, d2);
}

Rat ToricNefBackend::slope(const QVec& d1, const QVec& d2) const {
    require_nef_big(t_, d1, "D1");
    require_nef_big(t_, d2, "D2");
    return slope_toric(t_, d1, d2);
}

std::optional<Rat> ToricNefBackend::proportionality(const QVec& d1, const QVec& d2) const {
    require_nef_big(t_, d1, "D1");
    require_nef_big(t_, d2, "D2");
    auto poly1 = divisor_polytope(t_, p_sigma_toric(t_, d1));
    auto poly2 = divisor_polytope(t_, p_sigma_toric(t_, d2));
    auto h = homothety_check(poly2, poly1);
    if (!h.proportional) return std::nullopt;
    return h.ratio;
}

// ---- analysis --------------------------------------------------------------

SSequence s_sequence(const Backend& b, const QVec& d1, const QVec& d2) {
    SSequence s;
    s.d = b.dimension();
    s.values = b.s_sequence(d1, d2);
    s.backend = b.tag();
    s.d1 = d1;
    s.d2 = d2;
    return s;
}

bool KtReport::holds() const {
    for (const auto& q : inequalities)
        if (!q.holds) return false;
    return item4.order != Ordering::less;
}

KtReport kt_check(const SSequence& seq, const Rat& volume_of_sum) {
    const auto& s = seq.values;
    const std::size_t d = seq.d;
    KtReport out;
    auto push = [&](int item, std::size_t i, Rat lhs, Rat rhs) {
        Rat margin = lhs - rhs;
        out.inequalities.push_back({item, i, lhs, rhs, margin, margin >= 0});
    };
    for (std::size_t i = 1; i + 1 <= d; ++i) push(1, i, s[i] * s[i], s[i + 1] * s[i - 1]);
    for (std::size_t i = 1; i + 1 <= d; ++i) push(2, i, s[i] * s[d - i], s[0] * s[d]);
    for (std::size_t i = 0; i <= d; ++i)
        push(3, i, pow(s[i], static_cast<unsigned>(d)), pow(s[0], static_cast<unsigned>(d - i)) * pow(s[d], static_cast<unsigned>(i)));
    const unsigned r = static_cast<unsigned>(d);
    out.sum_root = RootSum::root(volume_of_sum, r);
    out.roots_sum = RootSum::root(s[d], r) + RootSum::root(s[0], r);
    out.item4 = certified_compare_detail(out.sum_root, out.roots_sum);
    return out;
}

bool EqualityReport::consistent() const {
    if (cond1 != equality || cond2 != equality || cond3 != equality || cond4 != equality) return false;
    if ((cond5 == Ordering::equal) != equality) return false;
    return !equality || ratio_power_matches;
}

namespace {

EqualityReport equality_from(const SSequence& seq, const Rat& volume_of_sum, const std::optional<Rat>& ratio) {
    const auto& s = seq.values;
    const std::size_t d = seq.d;
    const unsigned ud = static_cast<unsigned>(d);
    EqualityReport out;
    out.ratio = ratio;
    out.equality = ratio.has_value();
    if (ratio) out.ratio_power_matches = pow(*ratio, ud) == s[d] / s[0];

    out.cond1 = out.cond2 = out.cond3 = true;
    for (std::size_t i = 1; i + 1 <= d; ++i) {
        if (s[i] * s[i] != s[i + 1] * s[i - 1]) out.cond1 = false;
        if (s[i] * s[d - i] != s[0] * s[d]) out.cond2 = false;
    }
    for (std::size_t i = 0; i <= d; ++i)
        if (pow(s[i], ud) != pow(s[0], ud - static_cast<unsigned>(i)) * pow(s[d], static_cast<unsigned>(i))) out.cond3 = false;
    out.cond4_margin = pow(s[d - 1], ud) - s[0] * pow(s[d], ud - 1);
    out.cond4 = out.cond4_margin == 0;
    out.cond5 = certified_compare(RootSum::root(volume_of_sum, ud), RootSum::root(s[d], ud) + RootSum::root(s[0], ud));
    return out;
}

// Does (top^{1/k} − (top^{d/k} − base^{1/k}·vol)^{1/d}) / base^{1/k} ≤ x hold, k = d − 1?
bool lower_bound_at_most(const Rat& top, const Rat& base, const Rat& vol, const Rat& x, std::size_t d) {
    const unsigned k = static_cast<unsigned>(d - 1);
    RootSum a = RootSum::root(top, k);
    RootSum c = RootSum::root(base, k);
    RootSum gap = a - RootSum(x) * c;
    if (certified_compare(gap, RootSum(0)) != Ordering::greater) return true;
    RootSum inner = RootSum::root(pow(top, static_cast<unsigned>(d)), k) - RootSum(vol) * c;
    return certified_compare(gap.pow(static_cast<unsigned>(d)), inner) != Ordering::greater;
}

// Certified enclosure of the same lower-bound expression.
IntervalR lower_bound_enclosure(const Rat& top, const Rat& base, const Rat& vol, std::size_t d, const Rat& eps) {
    const unsigned k = static_cast<unsigned>(d - 1);
    RootSum inner = RootSum::root(pow(top, static_cast<unsigned>(d)), k) - RootSum(vol) * RootSum::root(base, k);
    IntervalR a = root_bracket(top, k, eps);
    IntervalR c = root_bracket(base, k, eps);
    IntervalR b = root_bracket(inner.enclose(eps), static_cast<unsigned>(d), eps);
    return (a - b) / c;
}

// For d = 2: (s_top − √(s_top² − s_base·s_vol)) / s_base, exactly.
RootSum lower_bound_exact_d2(const Rat& top, const Rat& base, const Rat& vol) {
    return RootSum(top / base) - RootSum::root(top * top - base * vol, 2, 1 / base);
}

}  // namespace

EqualityReport equality_certificate(const Backend& b, const QVec& d1, const QVec& d2) {
    SSequence seq = s_sequence(b, d1, d2);
    return equality_from(seq, b.volume(d1 + d2), b.proportionality(d1, d2));
}

DiskantReport diskant_from(const SSequence& seq, const Rat& slope) {
    require_dimension_two_or_more(seq);
    const auto& s = seq.values;
    const std::size_t d = seq.d;
    const unsigned k = static_cast<unsigned>(d - 1);
    DiskantReport out;
    out.slope = slope;
    RootSum a = RootSum::root(s[d - 1], k);
    RootSum c = RootSum::root(s[0], k);
    out.lhs = RootSum::root(pow(s[d - 1], static_cast<unsigned>(d)), k) - RootSum(s[d]) * c;
    out.rhs = (a - RootSum(slope) * c).pow(static_cast<unsigned>(d));
    out.bracket = certified_compare_detail(a, RootSum(slope) * c);
    out.verdict = certified_compare_detail(out.lhs, out.rhs);
    return out;
}

DiskantReport diskant_check(const Backend& b, const QVec& d1, const QVec& d2) {
    return diskant_from(s_sequence(b, d1, d2), b.slope(d1, d2));
}

bool RadiiReport::holds() const {
    for (bool l : links)
        if (!l) return false;
    return links.size() == 5;
}

RadiiReport radii_from(const SSequence& seq, const Rat& inradius, const Rat& reverse_slope) {
    require_dimension_two_or_more(seq);
    const auto& s = seq.values;
    const std::size_t d = seq.d;
    const Rat eps(1, 1000000);
    RadiiReport out;
    out.inradius = inradius;
    out.outradius = 1 / reverse_slope;

    ChainEntry lower{"diskant_lower_bound", std::nullopt, {}};
    ChainEntry upper{"diskant_upper_bound", std::nullopt, {}};
    if (d == 2) {
        lower.exact = lower_bound_exact_d2(s[1], s[0], s[2]);
        // reciprocal of the swapped lower bound, rationalized
        upper.exact = RootSum(s[1] / s[0]) + RootSum::root(s[1] * s[1] - s[2] * s[0], 2, 1 / s[0]);
        lower.enclosure = lower.exact->enclose(eps);
        upper.enclosure = upper.exact->enclose(eps);
    } else {
        lower.enclosure = lower_bound_enclosure(s[d - 1], s[0], s[d], d, eps);
        Rat fine = eps;
        IntervalR swapped = lower_bound_enclosure(s[1], s[d], s[0], d, fine);
        while (swapped.contains(0)) {
            fine /= 1024;
            swapped = lower_bound_enclosure(s[1], s[d], s[0], d, fine);
        }
        upper.enclosure = IntervalR{1, 1} / swapped;
    }
    auto exact_entry = [](const char* name, const Rat& v) { return ChainEntry{name, RootSum(v), IntervalR{v, v}}; };
    out.chain = {lower,
                 exact_entry("inradius", out.inradius),
                 exact_entry("s_d/s_(d-1)", s[d] / s[d - 1]),
                 exact_entry("s_1/s_0", s[1] / s[0]),
                 exact_entry("outradius", out.outradius),
                 upper};

    out.links.push_back(lower_bound_at_most(s[d - 1], s[0], s[d], out.inradius, d));
    out.links.push_back(out.inradius <= s[d] / s[d - 1]);
    out.links.push_back(s[d] / s[d - 1] <= s[1] / s[0]);
    out.links.push_back(s[1] / s[0] <= out.outradius);
    // R ≤ upper  ⇔  s(D2,D1) ≥ swapped lower bound
    out.links.push_back(lower_bound_at_most(s[1], s[d], s[0], reverse_slope, d));
    return out;
}

RadiiReport radii_report(const Backend& b, const QVec& d1, const QVec& d2) {
    return radii_from(s_sequence(b, d1, d2), b.slope(d1, d2), b.slope(d2, d1));
}

bool MinkowskiReport::certified() const {
    return kt.holds() && equality.consistent() && diskant.holds() && radii.holds();
}

MinkowskiReport minkowski_report(const Backend& b, const QVec& d1, const QVec& d2) {
    MinkowskiReport r;
    r.s = s_sequence(b, d1, d2);
    r.volume_of_sum = b.volume(d1 + d2);
    r.kt = kt_check(r.s, r.volume_of_sum);
    r.equality = equality_from(r.s, r.volume_of_sum, b.proportionality(d1, d2));
    r.slope = b.slope(d1, d2);
    r.diskant = diskant_from(r.s, r.slope);
    r.radii = radii_from(r.s, r.slope, b.slope(d2, d1));
    return r;
}

}  // namespace divcalc
