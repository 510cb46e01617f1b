#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "divcalc/rational.hpp"

namespace divcalc {

/// Dense row-major matrix of exact rationals.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static QMatrix from_rows(const std::vector<QVec>& rows, std::size_t cols);
    static QMatrix from_ints(const std::vector<std::vector<long>>& rows);
    static QMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    QVec row(std::size_t i) const;
    QVec col(std::size_t j) const;
    QMatrix transpose() const;
    QVec operator*(const QVec& x) const;
    QMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

    bool is_symmetric() const;
    bool is_integral() const;

    friend bool operator==(const QMatrix& a, const QMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> a_;
};

/// aᵀ·form·b, exactly.
Rat gram_pairing(const QMatrix& form, const QVec& a, const QVec& b);

std::size_t rank(QMatrix m);
Rat determinant(QMatrix m);

/// Unique solution of a square nonsingular system; nullopt when singular.
std::optional<QVec> solve(QMatrix a, QVec b);

/// Some solution of a possibly over/underdetermined system (free variables set
/// to zero); nullopt when inconsistent.
std::optional<QVec> solve_any(QMatrix a, QVec b);

/// Basis of {x : m·x = 0}.
std::vector<QVec> nullspace(QMatrix m);

struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};

/// Sylvester inertia of a symmetric matrix by congruence diagonalization.
Inertia inertia(QMatrix symmetric);

bool is_negative_definite(const QMatrix& symmetric);

/// Scales a rational vector to the primitive integer vector on the same ray.
std::vector<Int> primitive_integer(const QVec& v);

}  // namespace divcalc
