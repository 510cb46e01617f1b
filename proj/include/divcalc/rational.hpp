#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace divcalc {

using Int = mpz_class;
using Rat = mpq_class;

/// Parses "p/q" or "p" (optional sign). Floating point literals are rejected
/// with code "rational-encoding". The result is canonical.
Rat parse_rational(std::string_view text);

/// Canonical text: "p" for integers, "p/q" otherwise, q > 0, lowest terms.
std::string to_string(const Rat& value);

Rat make_rat(long num, long den = 1);

int sign(const Rat& value);

/// Exact-rational coordinate vector of fixed length.
class QVec {
public:
    QVec() = default;
    explicit QVec(std::size_t n) : v_(n) {}
    QVec(std::initializer_list<Rat> values) : v_(values) {}
    explicit QVec(std::vector<Rat> values) : v_(std::move(values)) {}

    static QVec from_ints(const std::vector<long>& values);

    std::size_t size() const noexcept { return v_.size(); }
    bool empty() const noexcept { return v_.empty(); }
    Rat& operator[](std::size_t i) { return v_[i]; }
    const Rat& operator[](std::size_t i) const { return v_[i]; }
    auto begin() { return v_.begin(); }
    auto end() { return v_.end(); }
    auto begin() const { return v_.begin(); }
    auto end() const { return v_.end(); }
    const std::vector<Rat>& values() const noexcept { return v_; }
    void push_back(Rat x) { v_.push_back(std::move(x)); }

    bool is_zero() const;

    QVec& operator+=(const QVec& o);
    QVec& operator-=(const QVec& o);
    QVec& operator*=(const Rat& c);

    friend QVec operator+(QVec a, const QVec& b) { return a += b; }
    friend QVec operator-(QVec a, const QVec& b) { return a -= b; }
    friend QVec operator-(QVec a) { return a *= Rat(-1); }
    friend QVec operator*(const Rat& c, QVec a) { return a *= c; }
    friend bool operator==(const QVec& a, const QVec& b) { return a.v_ == b.v_; }
    friend bool operator<(const QVec& a, const QVec& b) { return a.v_ < b.v_; }

private:
    std::vector<Rat> v_;
};

/// Euclidean dot product (no form involved).
Rat dot(const QVec& a, const QVec& b);

/// "1,-2,3/4" -> QVec. Whitespace around entries is ignored.
QVec parse_qvec(std::string_view csv);
std::string to_string(const QVec& v);
std::vector<std::string> to_strings(const QVec& v);

/// Exact d-th root test: returns true and writes the root when x is a perfect
/// r-th power of a rational.
bool exact_root(const Rat& x, unsigned r, Rat* root);

Rat pow(const Rat& base, unsigned exponent);

Int floor(const Rat& x);
Int ceil(const Rat& x);

}  // namespace divcalc
