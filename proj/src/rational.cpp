#include "divcalc/rational.hpp"

#include <cctype>

#include "divcalc/error.hpp"

namespace divcalc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rat parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    std::string_view body = s;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw Error("rational-encoding", "expected an exact rational \"p/q\" or integer, got \"" + std::string(text) + "\"");
    Int n(std::string(num), 10);
    Int d(std::string(den), 10);
    if (d == 0) throw Error("rational-encoding", "zero denominator in \"" + std::string(text) + "\"");
    Rat q(n, d);
    q.canonicalize();
    return negative ? Rat(-q) : q;
}

std::string to_string(const Rat& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rat make_rat(long num, long den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

int sign(const Rat& value) { return sgn(value); }

QVec QVec::from_ints(const std::vector<long>& values) {
    QVec out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i];
    return out;
}

bool QVec::is_zero() const {
    for (const auto& x : v_)
        if (x != 0) return false;
    return true;
}

QVec& QVec::operator+=(const QVec& o) {
    if (o.size() != size()) throw Error("dimension-mismatch", "vector lengths differ");
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
    return *this;
}

QVec& QVec::operator-=(const QVec& o) {
    if (o.size() != size()) throw Error("dimension-mismatch", "vector lengths differ");
    for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
    return *this;
}

QVec& QVec::operator*=(const Rat& c) {
    for (auto& x : v_) x *= c;
    return *this;
}

Rat dot(const QVec& a, const QVec& b) {
    if (a.size() != b.size()) throw Error("dimension-mismatch", "vector lengths differ");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

QVec parse_qvec(std::string_view csv) {
    QVec out;
    std::size_t start = 0;
    while (true) {
        auto comma = csv.find(',', start);
        out.push_back(parse_rational(csv.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string to_string(const QVec& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

std::vector<std::string> to_strings(const QVec& v) {
    std::vector<std::string> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

bool exact_root(const Rat& x, unsigned r, Rat* root) {
    if (r == 0) throw Error("domain", "root index must be positive");
    if (r == 1) {
        if (root) *root = x;
        return true;
    }
    if (x < 0) {
        if (r % 2 == 0) return false;
        Rat pos;
        if (!exact_root(Rat(-x), r, &pos)) return false;
        if (root) *root = -pos;
        return true;
    }
    Int n, d;
    if (mpz_root(n.get_mpz_t(), x.get_num_mpz_t(), r) == 0) return false;
    if (mpz_root(d.get_mpz_t(), x.get_den_mpz_t(), r) == 0) return false;
    if (root) {
        *root = Rat(n, d);
        root->canonicalize();
    }
    return true;
}

Rat pow(const Rat& base, unsigned exponent) {
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), exponent);
    Rat out(n, d);
    out.canonicalize();
    return out;
}

Int floor(const Rat& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

Int ceil(const Rat& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

}  // namespace divcalc
