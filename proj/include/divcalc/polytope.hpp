#pragma once

#include <optional>
#include <vector>

#include "divcalc/matrix.hpp"

namespace divcalc {

using IntVec = std::vector<Int>;

/// ⟨u, normal⟩ + offset ≥ 0
struct Halfspace {
    IntVec normal;
    Rat offset;

    bool satisfied_by(const QVec& u) const;
    Rat evaluate(const QVec& u) const;
    friend bool operator==(const Halfspace& a, const Halfspace& b) {
        return a.normal == b.normal && a.offset == b.offset;
    }
};

/// Bounded rational polytope carried in both halfspace and vertex form.
/// Vertices are computed once at construction and kept sorted.
class LatticePolytope {
public:
    LatticePolytope() = default;

    /// Halfspace intersection; must be bounded. Vertices by basis enumeration.
    static LatticePolytope from_halfspaces(std::size_t dim, std::vector<Halfspace> halfspaces);
    /// Convex hull of finitely many points (any affine dimension).
    static LatticePolytope from_points(std::size_t dim, std::vector<QVec> points);

    std::size_t dim() const noexcept { return dim_; }
    bool empty() const noexcept { return vertices_.empty(); }
    const std::vector<Halfspace>& halfspaces() const noexcept { return halfspaces_; }
    const std::vector<QVec>& vertices() const noexcept { return vertices_; }

    bool contains(const QVec& u) const;
    /// -1 for the empty polytope.
    int affine_dimension() const;
    /// Irredundant facet-defining halfspaces of a full-dimensional polytope,
    /// with primitive normals, sorted.
    std::vector<Halfspace> facets() const;

    LatticePolytope scaled(const Rat& factor) const;
    LatticePolytope translated(const QVec& shift) const;

    friend bool operator==(const LatticePolytope& a, const LatticePolytope& b) {
        return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
    }

private:
    friend LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);
    /// Keeps the points that are tight on `dim` independent halfspaces.
    static LatticePolytope assemble(std::size_t dim, std::vector<Halfspace> halfspaces, const std::vector<QVec>& points);
    /// Edge directions, as vertex index pairs.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    std::size_t dim_ = 0;
    std::vector<Halfspace> halfspaces_;
    std::vector<QVec> vertices_;
};

/// Exact Euclidean volume; 0 when empty or lower-dimensional.
Rat polytope_volume(const LatticePolytope& p);

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b);

/// Every vertex of `inner` lies in `outer`.
bool contains(const LatticePolytope& outer, const LatticePolytope& inner);

/// Integer points, lexicographically sorted.
std::vector<IntVec> lattice_points(const LatticePolytope& p);

struct Homothety {
    bool proportional = false;
    std::optional<Rat> ratio;         // λ with second = λ·first + t
    std::optional<QVec> translation;  // t
};

/// Is `second` = λ·`first` + t for rational λ > 0? Both must be nonempty and
/// full-dimensional (else "degenerate-input").
Homothety homothety_check(const LatticePolytope& first, const LatticePolytope& second);

QVec to_qvec(const IntVec& v);

}  // namespace divcalc
