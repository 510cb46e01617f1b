#pragma once

#include <optional>
#include <vector>

#include "divcalc/matrix.hpp"

namespace divcalc {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Rat objective;
    QVec x;     // primal optimum (standard-form variables)
    QVec dual;  // y with yᵀA ≥ c componentwise and yᵀb = objective
};

/// Exact two-phase simplex with Bland's rule.
///
///     maximize  cᵀx   subject to   A·x = b,  x ≥ 0
///
/// All arithmetic is over ℚ, so the returned optimum, primal point and dual
/// certificate are exact. Intended for small dense problems.
LpResult solve_lp(const QMatrix& a, const QVec& b, const QVec& c);

/// Is `target` a nonnegative combination of `generators`? On success the
/// weights are written to `weights`.
bool cone_contains(const std::vector<QVec>& generators, const QVec& target, QVec* weights = nullptr);

}  // namespace divcalc
