#include "divcalc/root_sum.hpp"

#include <algorithm>
#include <numeric>

#include "divcalc/error.hpp"

namespace divcalc {

IntervalR operator*(const Rat& c, const IntervalR& x) {
    if (c >= 0) return {c * x.lo, c * x.hi};
    return {c * x.hi, c * x.lo};
}

IntervalR operator*(const IntervalR& a, const IntervalR& b) {
    Rat p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

IntervalR operator/(const IntervalR& a, const IntervalR& b) {
    if (b.contains(0)) throw Error("domain", "interval division by an interval containing zero");
    IntervalR inv{1 / b.hi, 1 / b.lo};
    return a * inv;
}

IntervalR root_bracket(const Rat& x, unsigned r, const Rat& eps) {
    if (x < 0) throw Error("negative-radicand", "root of negative rational " + to_string(x));
    if (r == 0) throw Error("domain", "root index must be positive");
    if (eps <= 0) throw Error("domain", "bracket width must be positive");
    Rat exact;
    if (exact_root(x, r, &exact)) return {exact, exact};

    unsigned long k = 0;
    Rat scale_eps = eps;
    while (scale_eps < 1) {
        scale_eps *= 2;
        ++k;
    }
    // floor((x · 2^(k r))^(1/r)) / 2^k
    Int scaled = x.get_num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), k * r);
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), x.get_den_mpz_t());
    Int a;
    mpz_root(a.get_mpz_t(), scaled.get_mpz_t(), r);
    Int denom = 1;
    mpz_mul_2exp(denom.get_mpz_t(), denom.get_mpz_t(), k);
    Rat lo(a, denom);
    Rat hi(Int(a + 1), denom);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

IntervalR root_bracket(const IntervalR& x, unsigned r, const Rat& eps) {
    Rat lo = x.lo < 0 ? Rat(0) : x.lo;
    if (x.hi < 0) throw Error("negative-radicand", "root of a negative interval");
    return {root_bracket(lo, r, eps).lo, root_bracket(x.hi, r, eps).hi};
}

namespace {

// coefficient · n^(1/k) with n a positive integer and k minimal.
struct Radical {
    Rat coefficient;
    Int n;
    unsigned k;
};

constexpr unsigned kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                                     79, 83, 89, 97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167,
                                     173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251};

Int ipow(const Int& b, unsigned long e) {
    Int out;
    mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), e);
    return out;
}

Radical normalize(const RootTerm& t) {
    // (p/q)^(1/r) = (p q^(r-1))^(1/r) / q
    Radical out{t.coefficient / Rat(t.radicand.get_den()), Int(t.radicand.get_num()) * ipow(t.radicand.get_den(), t.index - 1),
                t.index};
    out.coefficient.canonicalize();
    // Lower the index while the radicand is a perfect power.
    bool changed = true;
    while (changed && out.k > 1) {
        changed = false;
        for (unsigned f = 2; f <= out.k; ++f) {
            if (out.k % f != 0) continue;
            Int root;
            if (mpz_root(root.get_mpz_t(), out.n.get_mpz_t(), f) != 0) {
                out.n = root;
                out.k /= f;
                changed = true;
                break;
            }
        }
    }
    if (out.k == 1) {
        out.coefficient *= out.n;
        out.n = 1;
        return out;
    }
    // Pull small k-th power factors out of the radicand (display only; merging
    // below does not depend on it).
    for (unsigned p : kSmallPrimes) {
        Int pk = ipow(Int(p), out.k);
        while (mpz_divisible_p(out.n.get_mpz_t(), pk.get_mpz_t())) {
            out.n /= pk;
            out.coefficient *= p;
        }
    }
    return out;
}

// If a^(1/ka) / b^(1/kb) is rational, write it to `ratio`.
bool rational_ratio(const Radical& a, const Radical& b, Rat* ratio) {
    if (a.k != b.k) return false;
    Rat q(a.n, b.n);
    q.canonicalize();
    return exact_root(q, a.k, ratio);
}

bool key_less(const Radical& a, const Radical& b) {
    if (a.k != b.k) return a.k < b.k;
    return a.n < b.n;
}

std::vector<RootTerm> canonicalize(const std::vector<RootTerm>& input) {
    std::vector<Radical> groups;
    for (const auto& t : input) {
        if (t.coefficient == 0 || t.radicand == 0) continue;
        Radical r = normalize(t);
        bool merged = false;
        for (auto& g : groups) {
            Rat ratio;
            if (!rational_ratio(r, g, &ratio)) continue;
            if (key_less(r, g)) {
                // Re-express the group over the smaller radicand.
                g.coefficient = g.coefficient / ratio + r.coefficient;
                g.n = r.n;
            } else {
                g.coefficient += r.coefficient * ratio;
            }
            merged = true;
            break;
        }
        if (!merged) groups.push_back(r);
    }
    std::vector<Radical> kept;
    for (auto& g : groups)
        if (g.coefficient != 0) kept.push_back(g);
    std::sort(kept.begin(), kept.end(), key_less);
    std::vector<RootTerm> out;
    out.reserve(kept.size());
    for (auto& g : kept) out.push_back(RootTerm{g.coefficient, Rat(g.n), g.k});
    return out;
}

}  // namespace

RootSum::RootSum(const Rat& value) {
    if (value != 0) terms_.push_back(RootTerm{value, Rat(1), 1});
}

RootSum RootSum::root(const Rat& radicand, unsigned index, const Rat& coefficient) {
    if (radicand < 0) throw Error("negative-radicand", "radicand " + divcalc::to_string(radicand) + " is negative");
    if (index == 0) throw Error("domain", "root index must be positive");
    RootSum out;
    out.terms_ = canonicalize({RootTerm{coefficient, radicand, index}});
    return out;
}

RootSum RootSum::canonical() const { return *this; }

bool RootSum::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].index == 1); }

Rat RootSum::rational_value() const {
    if (!is_rational()) throw Error("domain", "RootSum " + to_string() + " is irrational");
    return terms_.empty() ? Rat(0) : terms_[0].coefficient;
}

IntervalR RootSum::enclose(const Rat& eps) const {
    IntervalR acc{0, 0};
    if (terms_.empty()) return acc;
    const Rat share = eps / Rat(static_cast<long>(terms_.size()));
    for (const auto& t : terms_) {
        if (t.index == 1) {
            Rat v = t.coefficient * t.radicand;
            acc = acc + IntervalR{v, v};
            continue;
        }
        Rat c = abs(t.coefficient);
        acc = acc + t.coefficient * root_bracket(t.radicand, t.index, share / c);
    }
    return acc;
}

std::string RootSum::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        Rat c = t.coefficient;
        if (i > 0) {
            out += c < 0 ? " - " : " + ";
            c = abs(c);
        }
        if (t.index == 1) {
            out += divcalc::to_string(c * t.radicand);
            continue;
        }
        std::string rad = divcalc::to_string(t.radicand) + "^(1/" + std::to_string(t.index) + ")";
        if (c == 1)
            out += rad;
        else if (c == -1)
            out += "-" + rad;
        else
            out += divcalc::to_string(c) + "*" + rad;
    }
    return out;
}

RootSum& RootSum::operator+=(const RootSum& o) {
    std::vector<RootTerm> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    terms_ = canonicalize(all);
    return *this;
}

RootSum& RootSum::operator-=(const RootSum& o) { return *this += -o; }

RootSum operator-(const RootSum& a) {
    RootSum out = a;
    for (auto& t : out.terms_) t.coefficient = -t.coefficient;
    return out;
}

RootSum operator*(const RootSum& a, const RootSum& b) {
    std::vector<RootTerm> prod;
    prod.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            unsigned l = std::lcm(x.index, y.index);
            Rat rad = divcalc::pow(x.radicand, l / x.index) * divcalc::pow(y.radicand, l / y.index);
            prod.push_back(RootTerm{x.coefficient * y.coefficient, rad, l});
        }
    RootSum out;
    out.terms_ = canonicalize(prod);
    return out;
}

RootSum RootSum::pow(unsigned exponent) const {
    RootSum out(Rat(1));
    RootSum base = *this;
    while (exponent) {
        if (exponent & 1u) out = out * base;
        exponent >>= 1u;
        if (exponent) base = base * base;
    }
    return out;
}

std::string to_string(Ordering o) {
    switch (o) {
        case Ordering::less: return "LESS";
        case Ordering::equal: return "EQUAL";
        case Ordering::greater: return "GREATER";
    }
    return "?";
}

Comparison certified_compare_detail(const RootSum& a, const RootSum& b) {
    RootSum diff = a - b;
    if (diff.terms().empty()) return {Ordering::equal, IntervalR{0, 0}};
    if (diff.is_rational()) {
        Rat v = diff.rational_value();
        return {v < 0 ? Ordering::less : Ordering::greater, IntervalR{v, v}};
    }
    // Nonzero by linear independence of the canonical radicals, so refinement terminates.
    Rat eps(1, 256);
    for (int step = 0; step < 24; ++step) {
        IntervalR box = diff.enclose(eps);
        if (box.lo > 0) return {Ordering::greater, box};
        if (box.hi < 0) return {Ordering::less, box};
        eps /= Rat(1 << 16);
    }
    throw Error("undecidable-shape", "refinement budget exhausted comparing " + a.to_string() + " with " + b.to_string());
}

Ordering certified_compare(const RootSum& a, const RootSum& b) { return certified_compare_detail(a, b).order; }

}  // namespace divcalc
