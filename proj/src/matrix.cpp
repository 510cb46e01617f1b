#include "divcalc/matrix.hpp"

#include <utility>

#include "divcalc/error.hpp"

namespace divcalc {

QMatrix QMatrix::from_rows(const std::vector<QVec>& rows, std::size_t cols) {
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error("dimension-mismatch", "ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::from_ints(const std::vector<std::vector<long>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    QMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error("dimension-mismatch", "ragged matrix rows");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QVec QMatrix::row(std::size_t i) const {
    QVec out(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
    return out;
}

QVec QMatrix::col(std::size_t j) const {
    QVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
}

QMatrix QMatrix::transpose() const {
    QMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

QVec QMatrix::operator*(const QVec& x) const {
    if (x.size() != cols_) throw Error("dimension-mismatch", "matrix-vector product");
    QVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * x[j];
        out[i] = s;
    }
    return out;
}

QMatrix QMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    QMatrix m(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(rows[i], cols[j]);
    return m;
}

bool QMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool QMatrix::is_integral() const {
    for (const auto& x : a_)
        if (x.get_den() != 1) return false;
    return true;
}

Rat gram_pairing(const QMatrix& form, const QVec& a, const QVec& b) {
    if (form.rows() != a.size() || form.cols() != b.size())
        throw Error("dimension-mismatch", "form is " + std::to_string(form.rows()) + "x" + std::to_string(form.cols()) +
                                              ", vectors have length " + std::to_string(a.size()) + " and " +
                                              std::to_string(b.size()));
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        Rat row = 0;
        for (std::size_t j = 0; j < b.size(); ++j) row += form(i, j) * b[j];
        s += a[i] * row;
    }
    return s;
}

namespace {

// Row-reduces in place to reduced echelon form; returns pivot columns.
std::vector<std::size_t> rref(QMatrix& m, std::size_t ncols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rat inv = 1 / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rat f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

QMatrix augment(const QMatrix& a, const QVec& b) {
    if (b.size() != a.rows()) throw Error("dimension-mismatch", "right-hand side length");
    QMatrix m(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        m(i, a.cols()) = b[i];
    }
    return m;
}

}  // namespace

std::size_t rank(QMatrix m) { return rref(m, m.cols()).size(); }

Rat determinant(QMatrix m) {
    if (m.rows() != m.cols()) throw Error("dimension-mismatch", "determinant of non-square matrix");
    const std::size_t n = m.rows();
    Rat det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rat f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return det;
}

std::optional<QVec> solve(QMatrix a, QVec b) {
    if (a.rows() != a.cols()) throw Error("dimension-mismatch", "solve expects a square system");
    QMatrix m = augment(a, b);
    auto pivots = rref(m, a.cols());
    if (pivots.size() != a.cols()) return std::nullopt;
    QVec x(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) x[i] = m(i, a.cols());
    return x;
}

std::optional<QVec> solve_any(QMatrix a, QVec b) {
    QMatrix m = augment(a, b);
    auto pivots = rref(m, a.cols());
    for (std::size_t i = pivots.size(); i < m.rows(); ++i)
        if (m(i, a.cols()) != 0) return std::nullopt;
    QVec x(a.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m(i, a.cols());
    return x;
}

std::vector<QVec> nullspace(QMatrix m) {
    const std::size_t n = m.cols();
    auto pivots = rref(m, n);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<QVec> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        QVec v(n);
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

Inertia inertia(QMatrix a) {
    if (!a.is_symmetric()) throw Error("domain", "inertia requires a symmetric matrix");
    const std::size_t n = a.rows();
    Inertia out;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a(p, p) == 0) ++p;
        if (p == n) {
            // No usable diagonal entry: fold an off-diagonal one onto the diagonal.
            std::size_t oi = n, oj = n;
            for (std::size_t i = k; i < n && oi == n; ++i)
                for (std::size_t j = i + 1; j < n; ++j)
                    if (a(i, j) != 0) {
                        oi = i;
                        oj = j;
                        break;
                    }
            if (oi == n) {
                out.zero += n - k;
                return out;
            }
            for (std::size_t j = 0; j < n; ++j) a(oi, j) += a(oj, j);
            for (std::size_t i = 0; i < n; ++i) a(i, oi) += a(i, oj);
            p = oi;
        }
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(a(i, p), a(i, k));
        }
        const Rat pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a(i, k) == 0) continue;
            Rat f = a(i, k) / pivot;
            for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
            for (std::size_t j = k; j < n; ++j) a(j, i) = a(i, j);
        }
        if (pivot > 0)
            ++out.positive;
        else
            ++out.negative;
    }
    return out;
}

bool is_negative_definite(const QMatrix& symmetric) {
    if (symmetric.rows() == 0) return true;
    auto in = inertia(symmetric);
    return in.negative == symmetric.rows();
}

std::vector<Int> primitive_integer(const QVec& v) {
    Int l = 1;
    for (const auto& x : v) l = lcm(l, Int(x.get_den()));
    std::vector<Int> out(v.size());
    Int g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat scaled = v[i] * l;
        out[i] = scaled.get_num();
        g = gcd(g, out[i]);
    }
    if (g > 1)
        for (auto& x : out) x /= g;
    return out;
}

}  // namespace divcalc
