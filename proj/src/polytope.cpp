#include "divcalc/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "divcalc/error.hpp"

namespace divcalc {

QVec to_qvec(const IntVec& v) {
    QVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

Rat Halfspace::evaluate(const QVec& u) const {
    if (u.size() != normal.size()) throw Error("dimension-mismatch", "point and halfspace dimensions differ");
    Rat s = offset;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * normal[i];
    return s;
}

bool Halfspace::satisfied_by(const QVec& u) const { return evaluate(u) >= 0; }

namespace {

// Calls f(indices) for every k-subset of {0..n-1}, in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::size_t affine_rank(const std::vector<QVec>& pts, const std::vector<std::size_t>& subset) {
    if (subset.size() <= 1) return 0;
    const std::size_t d = pts[subset[0]].size();
    QMatrix m(subset.size() - 1, d);
    for (std::size_t i = 1; i < subset.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) m(i - 1, j) = pts[subset[i]][j] - pts[subset[0]][j];
    return rank(m);
}

// Primitive integer normal along `n`, with the offset making a0 tight.
Halfspace make_halfspace(const QVec& n, const QVec& through) {
    IntVec normal = primitive_integer(n);
    Halfspace h{normal, 0};
    h.offset = -h.evaluate(through);
    return h;
}

Halfspace normalized(const Halfspace& h) {
    Int g = 0;
    for (const auto& x : h.normal) g = gcd(g, x);
    if (g <= 1) return h;
    Halfspace out = h;
    for (auto& x : out.normal) x /= g;
    out.offset /= Rat(g);
    return out;
}

bool halfspace_less(const Halfspace& a, const Halfspace& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.offset < b.offset;
}

std::vector<QVec> sorted_unique(std::vector<QVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

}  // namespace

LatticePolytope LatticePolytope::from_halfspaces(std::size_t dim, std::vector<Halfspace> halfspaces) {
    if (dim == 0) throw Error("domain", "polytopes must live in dimension >= 1");
    for (const auto& h : halfspaces)
        if (h.normal.size() != dim) throw Error("dimension-mismatch", "halfspace normal has the wrong length");
    LatticePolytope p;
    p.dim_ = dim;
    p.halfspaces_ = std::move(halfspaces);
    std::set<QVec> verts;
    for_each_subset(p.halfspaces_.size(), dim, [&](const std::vector<std::size_t>& idx) {
        QMatrix a(dim, dim);
        QVec b(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) a(i, j) = p.halfspaces_[idx[i]].normal[j];
            b[i] = -p.halfspaces_[idx[i]].offset;
        }
        auto x = solve(a, b);
        if (!x) return;
        for (const auto& h : p.halfspaces_)
            if (!h.satisfied_by(*x)) return;
        verts.insert(*x);
    });
    p.vertices_.assign(verts.begin(), verts.end());
    return p;
}

LatticePolytope LatticePolytope::from_points(std::size_t dim, std::vector<QVec> points) {
    if (dim == 0) throw Error("domain", "polytopes must live in dimension >= 1");
    for (const auto& q : points)
        if (q.size() != dim) throw Error("dimension-mismatch", "point has the wrong length");
    LatticePolytope p;
    p.dim_ = dim;
    auto pts = sorted_unique(std::move(points));
    if (pts.empty()) {
        p.halfspaces_.push_back(Halfspace{IntVec(dim, 0), -1});
        return p;
    }
    const QVec& p0 = pts[0];

    QMatrix diffs(pts.size() - 1, dim);
    for (std::size_t i = 1; i < pts.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j) diffs(i - 1, j) = pts[i][j] - p0[j];
    const std::size_t k = pts.size() > 1 ? rank(diffs) : 0;
    std::vector<QVec> equations = pts.size() > 1 ? nullspace(diffs) : nullspace(QMatrix(0, dim));

    std::set<std::pair<IntVec, Rat>> seen;
    auto add = [&](const Halfspace& h) {
        if (seen.insert({h.normal, h.offset}).second) p.halfspaces_.push_back(h);
    };
    for (const auto& e : equations) {
        Halfspace h = make_halfspace(e, p0);
        add(h);
        Halfspace neg{h.normal, -h.offset};
        for (auto& x : neg.normal) x = -x;
        add(neg);
    }

    if (k == 2 && dim == 2) {
        // Andrew's monotone chain; collinear points are dropped.
        auto cross = [](const QVec& o, const QVec& a, const QVec& b) {
            return Rat((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]));
        };
        std::vector<QVec> hull(2 * pts.size());
        std::size_t h = 0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            while (h >= 2 && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
            hull[h++] = pts[i];
        }
        for (std::size_t i = pts.size() - 1, lower = h + 1; i-- > 0;) {
            while (h >= lower && cross(hull[h - 2], hull[h - 1], pts[i]) <= 0) --h;
            hull[h++] = pts[i];
        }
        hull.resize(h - 1);
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const QVec& a = hull[i];
            const QVec& b = hull[(i + 1) % hull.size()];
            // counter-clockwise order: the inner normal is the edge rotated left
            add(make_halfspace(QVec{a[1] - b[1], b[0] - a[0]}, a));
        }
        p.vertices_ = sorted_unique(hull);
        return p;
    }

    if (k > 0) {
        for_each_subset(pts.size(), k, [&](const std::vector<std::size_t>& idx) {
            QMatrix rows(equations.size() + k - 1, dim);
            for (std::size_t i = 0; i < equations.size(); ++i)
                for (std::size_t j = 0; j < dim; ++j) rows(i, j) = equations[i][j];
            for (std::size_t i = 1; i < k; ++i)
                for (std::size_t j = 0; j < dim; ++j) rows(equations.size() + i - 1, j) = pts[idx[i]][j] - pts[idx[0]][j];
            auto ns = nullspace(rows);
            if (ns.size() != 1) return;
            const QVec& n = ns[0];
            const Rat level = dot(n, pts[idx[0]]);
            int side = 0;
            for (const auto& q : pts) {
                int s = sgn(Rat(dot(n, q) - level));
                if (s == 0) continue;
                if (side == 0)
                    side = s;
                else if (s != side)
                    return;
            }
            add(make_halfspace(side >= 0 ? n : Rat(-1) * n, pts[idx[0]]));
        });
    }

    for (const auto& q : pts) {
        std::vector<QVec> tight;
        for (const auto& h : p.halfspaces_)
            if (h.evaluate(q) == 0) tight.push_back(to_qvec(h.normal));
        if (tight.size() >= dim && rank(QMatrix::from_rows(tight, dim)) == dim) p.vertices_.push_back(q);
    }
    return p;
}

LatticePolytope LatticePolytope::assemble(std::size_t dim, std::vector<Halfspace> halfspaces, const std::vector<QVec>& points) {
    LatticePolytope p;
    p.dim_ = dim;
    p.halfspaces_ = std::move(halfspaces);
    for (const auto& q : sorted_unique(points)) {
        std::vector<QVec> tight;
        for (const auto& h : p.halfspaces_)
            if (h.evaluate(q) == 0) tight.push_back(to_qvec(h.normal));
        if (tight.size() >= dim && rank(QMatrix::from_rows(tight, dim)) == dim) p.vertices_.push_back(q);
    }
    return p;
}

std::vector<std::pair<std::size_t, std::size_t>> LatticePolytope::edges() const {
    std::vector<std::vector<std::size_t>> tight(vertices_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        for (std::size_t h = 0; h < halfspaces_.size(); ++h)
            if (halfspaces_[h].evaluate(vertices_[v]) == 0) tight[v].push_back(h);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t a = 0; a < vertices_.size(); ++a)
        for (std::size_t b = a + 1; b < vertices_.size(); ++b) {
            std::vector<QVec> common;
            for (auto h : tight[a])
                if (std::binary_search(tight[b].begin(), tight[b].end(), h)) common.push_back(to_qvec(halfspaces_[h].normal));
            if (common.size() + 1 >= dim_ && rank(QMatrix::from_rows(common, dim_)) + 1 == dim_) out.push_back({a, b});
        }
    return out;
}

bool LatticePolytope::contains(const QVec& u) const {
    if (empty()) return false;
    for (const auto& h : halfspaces_)
        if (!h.satisfied_by(u)) return false;
    return true;
}

int LatticePolytope::affine_dimension() const {
    if (empty()) return -1;
    std::vector<std::size_t> all(vertices_.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return static_cast<int>(affine_rank(vertices_, all));
}

std::vector<Halfspace> LatticePolytope::facets() const {
    std::vector<Halfspace> out;
    if (affine_dimension() != static_cast<int>(dim_)) return out;
    for (const auto& h : halfspaces_) {
        std::vector<std::size_t> tight;
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (h.evaluate(vertices_[i]) == 0) tight.push_back(i);
        if (tight.size() < dim_ || affine_rank(vertices_, tight) != dim_ - 1) continue;
        Halfspace n = normalized(h);
        if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
    std::sort(out.begin(), out.end(), halfspace_less);
    return out;
}

LatticePolytope LatticePolytope::scaled(const Rat& factor) const {
    if (factor < 0) throw Error("domain", "polytopes scale by nonnegative factors only");
    if (factor == 0) {
        if (empty()) return *this;
        return from_points(dim_, {QVec(dim_)});
    }
    LatticePolytope p = *this;
    for (auto& h : p.halfspaces_) h.offset *= factor;
    for (auto& v : p.vertices_) v *= factor;
    return p;
}

LatticePolytope LatticePolytope::translated(const QVec& shift) const {
    if (shift.size() != dim_) throw Error("dimension-mismatch", "translation vector has the wrong length");
    LatticePolytope p = *this;
    for (auto& h : p.halfspaces_) h.offset -= Halfspace{h.normal, 0}.evaluate(shift);
    for (auto& v : p.vertices_) v += shift;
    std::sort(p.vertices_.begin(), p.vertices_.end());
    return p;
}

Rat polytope_volume(const LatticePolytope& p) {
    const std::size_t d = p.dim();
    if (p.affine_dimension() != static_cast<int>(d)) return 0;
    const auto& verts = p.vertices();
    const auto& hs = p.halfspaces();

    std::vector<std::vector<bool>> tight(hs.size(), std::vector<bool>(verts.size()));
    for (std::size_t h = 0; h < hs.size(); ++h)
        for (std::size_t v = 0; v < verts.size(); ++v) tight[h][v] = hs[h].evaluate(verts[v]) == 0;

    // Pulling triangulation: cone the lowest vertex of each face over the
    // triangulations of the facets of that face which avoid it.
    std::function<std::vector<std::vector<std::size_t>>(const std::vector<std::size_t>&, std::size_t)> triangulate =
        [&](const std::vector<std::size_t>& face, std::size_t k) -> std::vector<std::vector<std::size_t>> {
        if (k == 0) return {{face.front()}};
        const std::size_t apex = face.front();
        std::set<std::vector<std::size_t>> subfaces;
        for (std::size_t h = 0; h < hs.size(); ++h) {
            if (tight[h][apex]) continue;
            std::vector<std::size_t> sub;
            for (auto v : face)
                if (tight[h][v]) sub.push_back(v);
            if (sub.size() < k || sub.size() == face.size()) continue;
            if (affine_rank(verts, sub) != k - 1) continue;
            subfaces.insert(sub);
        }
        std::vector<std::vector<std::size_t>> simplices;
        for (const auto& sub : subfaces)
            for (auto s : triangulate(sub, k - 1)) {
                s.push_back(apex);
                simplices.push_back(std::move(s));
            }
        return simplices;
    };

    std::vector<std::size_t> all(verts.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    Rat total = 0;
    for (const auto& s : triangulate(all, d)) {
        QMatrix m(d, d);
        for (std::size_t i = 1; i <= d; ++i)
            for (std::size_t j = 0; j < d; ++j) m(i - 1, j) = verts[s[i]][j] - verts[s[0]][j];
        total += abs(determinant(m));
    }
    Rat fact = 1;
    for (std::size_t i = 2; i <= d; ++i) fact *= static_cast<long>(i);
    return total / fact;
}

LatticePolytope minkowski_sum(const LatticePolytope& a, const LatticePolytope& b) {
    if (a.dim() != b.dim())
        throw Error("dimension-mismatch", "Minkowski sum of polytopes in dimensions " + std::to_string(a.dim()) + " and " +
                                              std::to_string(b.dim()));
    std::vector<QVec> sums;
    sums.reserve(a.vertices().size() * b.vertices().size());
    for (const auto& u : a.vertices())
        for (const auto& v : b.vertices()) sums.push_back(u + v);
    const std::size_t d = a.dim();
    if (d < 3 || a.affine_dimension() != static_cast<int>(d) || b.affine_dimension() != static_cast<int>(d))
        return LatticePolytope::from_points(d, std::move(sums));

    // Every edge of a + b is parallel to an edge of a or of b, so each facet
    // normal is orthogonal to d − 1 independent summand edge directions.
    std::set<IntVec> directions;
    for (const auto* p : {&a, &b})
        for (auto [i, j] : p->edges()) {
            IntVec e = primitive_integer(p->vertices()[j] - p->vertices()[i]);
            for (const auto& x : e) {
                if (x == 0) continue;
                if (x < 0)
                    for (auto& y : e) y = -y;
                break;
            }
            directions.insert(e);
        }
    std::vector<QVec> dirs;
    for (const auto& e : directions) dirs.push_back(to_qvec(e));

    std::set<IntVec> normals;
    for_each_subset(dirs.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<QVec> rows;
        for (auto i : idx) rows.push_back(dirs[i]);
        auto ns = nullspace(QMatrix::from_rows(rows, d));
        if (ns.size() != 1) return;
        IntVec n = primitive_integer(ns[0]);
        normals.insert(n);
        for (auto& x : n) x = -x;
        normals.insert(n);
    });
    auto support = [](const LatticePolytope& p, const QVec& n) {
        Rat best = dot(n, p.vertices().front());
        for (const auto& v : p.vertices()) best = std::min(best, Rat(dot(n, v)));
        return best;
    };
    std::vector<Halfspace> hs;
    for (const auto& n : normals) {
        QVec nq = to_qvec(n);
        hs.push_back(Halfspace{n, -(support(a, nq) + support(b, nq))});
    }
    return LatticePolytope::assemble(d, std::move(hs), sums);
}

bool contains(const LatticePolytope& outer, const LatticePolytope& inner) {
    if (inner.empty()) return true;
    for (const auto& v : inner.vertices())
        if (!outer.contains(v)) return false;
    return true;
}

std::vector<IntVec> lattice_points(const LatticePolytope& p) {
    std::vector<IntVec> out;
    if (p.empty()) return out;
    const std::size_t d = p.dim();
    IntVec lo(d), hi(d);
    for (std::size_t j = 0; j < d; ++j) {
        Rat mn = p.vertices()[0][j], mx = mn;
        for (const auto& v : p.vertices()) {
            mn = std::min(mn, v[j]);
            mx = std::max(mx, v[j]);
        }
        lo[j] = ceil(mn);
        hi[j] = floor(mx);
        if (lo[j] > hi[j]) return out;
    }
    IntVec cur = lo;
    while (true) {
        if (p.contains(to_qvec(cur))) out.push_back(cur);
        std::size_t j = d;
        while (j > 0) {
            --j;
            if (cur[j] < hi[j]) {
                ++cur[j];
                for (std::size_t t = j + 1; t < d; ++t) cur[t] = lo[t];
                break;
            }
            if (j == 0) return out;
        }
    }
}

Homothety homothety_check(const LatticePolytope& first, const LatticePolytope& second) {
    if (first.dim() != second.dim()) throw Error("dimension-mismatch", "homothety check across dimensions");
    const int d = static_cast<int>(first.dim());
    if (first.affine_dimension() != d || second.affine_dimension() != d)
        throw Error("degenerate-input", "homothety check needs nonempty full-dimensional polytopes");
    Homothety out;
    if (first.vertices().size() != second.vertices().size()) return out;
    auto f1 = first.facets();
    auto f2 = second.facets();
    if (f1.size() != f2.size()) return out;
    for (std::size_t i = 0; i < f1.size(); ++i)
        if (f1[i].normal != f2[i].normal) return out;

    // offset2 = λ·offset1 − ⟨t, n⟩ for every facet normal n
    QMatrix a(f1.size(), first.dim() + 1);
    QVec b(f1.size());
    for (std::size_t i = 0; i < f1.size(); ++i) {
        a(i, 0) = f1[i].offset;
        for (std::size_t j = 0; j < first.dim(); ++j) a(i, j + 1) = -f1[i].normal[j];
        b[i] = f2[i].offset;
    }
    auto sol = solve_any(a, b);
    if (!sol || (*sol)[0] <= 0) return out;
    Rat lambda = (*sol)[0];
    QVec t(first.dim());
    for (std::size_t j = 0; j < first.dim(); ++j) t[j] = (*sol)[j + 1];

    std::vector<QVec> mapped;
    for (const auto& v : first.vertices()) mapped.push_back(lambda * v + t);
    std::sort(mapped.begin(), mapped.end());
    if (mapped != second.vertices()) return out;
    out.proportional = true;
    out.ratio = lambda;
    out.translation = t;
    return out;
}

}  // namespace divcalc
