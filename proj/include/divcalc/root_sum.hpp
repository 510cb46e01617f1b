#pragma once

#include <string>
#include <vector>

#include "divcalc/rational.hpp"

namespace divcalc {

/// Closed interval with rational endpoints.
struct IntervalR {
    Rat lo;
    Rat hi;

    Rat width() const { return hi - lo; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool overlaps(const IntervalR& o) const { return !(hi < o.lo || o.hi < lo); }

    friend IntervalR operator+(const IntervalR& a, const IntervalR& b) { return {a.lo + b.lo, a.hi + b.hi}; }
    friend IntervalR operator-(const IntervalR& a, const IntervalR& b) { return {a.lo - b.hi, a.hi - b.lo}; }
    friend bool operator==(const IntervalR& a, const IntervalR& b) { return a.lo == b.lo && a.hi == b.hi; }
};

IntervalR operator*(const Rat& c, const IntervalR& x);
IntervalR operator*(const IntervalR& a, const IntervalR& b);
/// Requires 0 ∉ b.
IntervalR operator/(const IntervalR& a, const IntervalR& b);

/// Certified enclosure of x^(1/r): lo^r ≤ x ≤ hi^r and hi − lo ≤ eps. Exact
/// (lo = hi) whenever x is a perfect r-th power of a rational. Endpoints are
/// dyadic with denominator at most the first power of two ≥ 1/eps.
IntervalR root_bracket(const Rat& x, unsigned r, const Rat& eps);

/// Enclosure of a nonnegative interval's r-th root.
IntervalR root_bracket(const IntervalR& x, unsigned r, const Rat& eps);

/// coefficient · radicand^(1/index)
struct RootTerm {
    Rat coefficient;
    Rat radicand;
    unsigned index = 1;
};

/// Exact finite sum Σ cᵢ·xᵢ^(1/rᵢ) with rational cᵢ and rational xᵢ ≥ 0.
///
/// Closed under +, −, × and integer powers. `canonical()` merges terms whose
/// radicals differ by a rational factor; after that the surviving radicals are
/// linearly independent over ℚ (real radicals of positive rationals with
/// pairwise irrational ratios), so the canonical form is zero iff it has no
/// terms. That is what makes EQUAL decisions symbolic rather than numeric.
class RootSum {
public:
    RootSum() = default;
    RootSum(const Rat& value);  // NOLINT(google-explicit-constructor)
    RootSum(long value) : RootSum(Rat(value)) {}  // NOLINT(google-explicit-constructor)

    /// coefficient · radicand^(1/index); throws "negative-radicand".
    static RootSum root(const Rat& radicand, unsigned index, const Rat& coefficient = 1);

    const std::vector<RootTerm>& terms() const noexcept { return terms_; }

    RootSum canonical() const;
    bool is_rational() const;
    /// Rational value; throws unless is_rational().
    Rat rational_value() const;

    IntervalR enclose(const Rat& eps) const;
    std::string to_string() const;

    RootSum& operator+=(const RootSum& o);
    RootSum& operator-=(const RootSum& o);
    friend RootSum operator+(RootSum a, const RootSum& b) { return a += b; }
    friend RootSum operator-(RootSum a, const RootSum& b) { return a -= b; }
    friend RootSum operator-(const RootSum& a);
    friend RootSum operator*(const RootSum& a, const RootSum& b);

    RootSum pow(unsigned exponent) const;

private:
    std::vector<RootTerm> terms_;  // always canonical
};

enum class Ordering { less, equal, greater };

std::string to_string(Ordering o);

struct Comparison {
    Ordering order;
    IntervalR margin;  // certified enclosure of a − b
};

/// Exact sign of a − b. EQUAL only when the canonical difference vanishes;
/// otherwise intervals are refined until they exclude zero.
Comparison certified_compare_detail(const RootSum& a, const RootSum& b);
Ordering certified_compare(const RootSum& a, const RootSum& b);

}  // namespace divcalc
