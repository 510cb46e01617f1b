#include "divcalc/lp.hpp"

#include "divcalc/error.hpp"

namespace divcalc {

namespace {

class Tableau {
public:
    Tableau(const QMatrix& a, const QVec& b) : m_(a.rows()), n_(a.cols()), t_(a.rows(), a.cols() + a.rows() + 1) {
        flipped_.assign(m_, false);
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            flipped_[i] = b[i] < 0;
            const int s = flipped_[i] ? -1 : 1;
            for (std::size_t j = 0; j < n_; ++j) t_(i, j) = s * a(i, j);
            t_(i, n_ + i) = 1;
            t_(i, rhs()) = s * b[i];
            basis_[i] = n_ + i;
        }
        r_ = QVec(n_ + m_);
    }

    // Sets reduced costs for objective `cost` (indexed over all columns).
    void price(const QVec& cost) {
        for (std::size_t j = 0; j < n_ + m_; ++j) {
            Rat s = cost[j];
            for (std::size_t i = 0; i < m_; ++i) s -= cost[basis_[i]] * t_(i, j);
            r_[j] = s;
        }
        z_ = 0;
        for (std::size_t i = 0; i < m_; ++i) z_ += cost[basis_[i]] * t_(i, rhs());
    }

    // Runs Bland's-rule simplex over columns [0, allowed). Returns false if unbounded.
    bool optimize(std::size_t allowed) {
        while (true) {
            std::size_t q = allowed;
            for (std::size_t j = 0; j < allowed; ++j)
                if (r_[j] > 0) {
                    q = j;
                    break;
                }
            if (q == allowed) return true;
            std::size_t p = m_;
            Rat best;
            for (std::size_t i = 0; i < m_; ++i) {
                if (t_(i, q) <= 0) continue;
                Rat ratio = t_(i, rhs()) / t_(i, q);
                if (p == m_ || ratio < best || (ratio == best && basis_[i] < basis_[p])) {
                    p = i;
                    best = ratio;
                }
            }
            if (p == m_) return false;
            pivot(p, q);
        }
    }

    void pivot(std::size_t p, std::size_t q) {
        const std::size_t w = t_.cols();
        Rat inv = 1 / t_(p, q);
        for (std::size_t j = 0; j < w; ++j) t_(p, j) *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == p || t_(i, q) == 0) continue;
            Rat f = t_(i, q);
            for (std::size_t j = 0; j < w; ++j) t_(i, j) -= f * t_(p, j);
        }
        Rat rq = r_[q];
        if (rq != 0) {
            for (std::size_t j = 0; j < n_ + m_; ++j) r_[j] -= rq * t_(p, j);
            z_ += rq * t_(p, rhs());
        }
        basis_[p] = q;
    }

    // Moves zero-level artificial variables out of the basis where possible.
    void expel_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (t_(i, j) != 0) {
                    pivot(i, j);
                    break;
                }
        }
    }

    QVec primal() const {
        QVec x(n_);
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) x[basis_[i]] = t_(i, rhs());
        return x;
    }

    QVec dual() const {
        QVec y(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            Rat yi = -r_[n_ + i];
            y[i] = flipped_[i] ? Rat(-yi) : yi;
        }
        return y;
    }

    const Rat& value() const { return z_; }
    std::size_t structural() const { return n_; }
    std::size_t rows() const { return m_; }

private:
    std::size_t rhs() const { return n_ + m_; }

    std::size_t m_;
    std::size_t n_;
    QMatrix t_;
    std::vector<std::size_t> basis_;
    std::vector<bool> flipped_;
    QVec r_;
    Rat z_;
};

}  // namespace

LpResult solve_lp(const QMatrix& a, const QVec& b, const QVec& c) {
    if (b.size() != a.rows() || c.size() != a.cols())
        throw Error("dimension-mismatch", "LP data has inconsistent dimensions");
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    Tableau tab(a, b);

    QVec phase1(n + m);
    for (std::size_t i = 0; i < m; ++i) phase1[n + i] = -1;
    tab.price(phase1);
    tab.optimize(n);

    LpResult out;
    if (tab.value() < 0) {
        out.status = LpStatus::infeasible;
        return out;
    }
    tab.expel_artificials();

    QVec phase2(n + m);
    for (std::size_t j = 0; j < n; ++j) phase2[j] = c[j];
    tab.price(phase2);
    if (!tab.optimize(n)) {
        out.status = LpStatus::unbounded;
        return out;
    }
    out.status = LpStatus::optimal;
    out.objective = tab.value();
    out.x = tab.primal();
    out.dual = tab.dual();
    return out;
}

bool cone_contains(const std::vector<QVec>& generators, const QVec& target, QVec* weights) {
    if (generators.empty()) {
        if (weights) *weights = QVec();
        return target.is_zero();
    }
    const std::size_t dim = target.size();
    QMatrix a(dim, generators.size());
    for (std::size_t j = 0; j < generators.size(); ++j) {
        if (generators[j].size() != dim) throw Error("dimension-mismatch", "generator length differs from target");
        for (std::size_t i = 0; i < dim; ++i) a(i, j) = generators[j][i];
    }
    auto res = solve_lp(a, target, QVec(generators.size()));
    if (res.status == LpStatus::infeasible) return false;
    if (weights) *weights = res.x;
    return true;
}

}  // namespace divcalc
