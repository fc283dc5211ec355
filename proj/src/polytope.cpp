#include "tvb/polytope.hpp"

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>

namespace tvb {

namespace {

// Affine chart of a point set: origin, pivot columns J and rref direction
// basis D with D[k][J[k]] = 1, so the chart coordinate of p is
// (p - origin) restricted to J.
struct Chart {
    RationalVector origin;
    std::vector<int> pivots;
    QMat dirs;  // d x n, rref

    int dim() const { return static_cast<int>(pivots.size()); }

    QRow coords(const RationalVector& p) const {
        QRow y(pivots.size());
        for (size_t k = 0; k < pivots.size(); ++k)
            y[k] = p.c[pivots[k]] - origin.c[pivots[k]];
        return y;
    }
};

Chart make_chart(const std::vector<RationalVector>& pts) {
    Chart ch;
    ch.origin = pts.front();
    QMat dirs;
    for (size_t i = 1; i < pts.size(); ++i) dirs.push_back(to_qrow(sub(pts[i], ch.origin)));
    if (!dirs.empty()) {
        ch.pivots = rref_inplace(dirs);
        dirs.resize(ch.pivots.size());
    }
    ch.dirs = std::move(dirs);
    return ch;
}

// (normal, offset) scaled jointly so the normal is a primitive integer
// vector; the inequality direction is preserved.
Halfspace normalize_halfspace(const QRow& normal, const Rat& offset) {
    QRow joint = normal;
    joint.push_back(offset);
    std::vector<Int> w = primitive_integral(joint);
    std::vector<Int> nrm(w.begin(), w.end() - 1);
    return Halfspace{LatticeVector(std::move(nrm)), Rat(w.back())};
}

// Ambient halfspace from a chart inequality <y, a> <= b.
Halfspace pull_back(const Chart& ch, const QRow& a, const Rat& b) {
    QRow normal(ch.origin.rank(), Rat(0));
    Rat shift = 0;
    for (size_t k = 0; k < ch.pivots.size(); ++k) {
        normal[ch.pivots[k]] = a[k];
        shift += a[k] * ch.origin.c[ch.pivots[k]];
    }
    return normalize_halfspace(normal, b + shift);
}

Rat cross(const QRow& o, const QRow& a, const QRow& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew monotone chain; returns hull point indices in ccw order.
std::vector<int> hull_2d(const QMat& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int i, int j) { return pts[i] < pts[j]; });
    std::vector<int> hull;
    auto build = [&](auto begin, auto end) {
        size_t base = hull.size();
        for (auto it = begin; it != end; ++it) {
            while (hull.size() >= base + 2 &&
                   cross(pts[hull[hull.size() - 2]], pts[hull[hull.size() - 1]], pts[*it]) <= 0)
                hull.pop_back();
            hull.push_back(*it);
        }
        hull.pop_back();
    };
    build(order.begin(), order.end());
    build(order.rbegin(), order.rend());
    return hull;
}

int affine_rank(const std::vector<RationalVector>& pts) {
    if (pts.empty()) return -1;
    QMat dirs;
    for (size_t i = 1; i < pts.size(); ++i) dirs.push_back(to_qrow(sub(pts[i], pts[0])));
    return dirs.empty() ? 0 : rank_of(std::move(dirs));
}

}  // namespace

Polytope Polytope::empty(int rank) {
    Polytope p;
    p.rank_ = rank;
    return p;
}

Polytope Polytope::point(const RationalVector& v) {
    return from_points(v.rank(), {v});
}

Polytope Polytope::from_lattice_points(int rank, const std::vector<LatticeVector>& pts) {
    std::vector<RationalVector> q;
    q.reserve(pts.size());
    for (const auto& p : pts) q.emplace_back(p);
    return from_points(rank, std::move(q));
}

Polytope Polytope::from_points(int rank, std::vector<RationalVector> pts) {
    for (const auto& p : pts)
        if (p.rank() != rank) throw std::invalid_argument("point rank mismatch");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.empty()) return empty(rank);

    Polytope poly;
    poly.rank_ = rank;
    Chart ch = make_chart(pts);
    const int d = ch.dim();
    poly.dim_ = d;

    // Affine hull equalities.
    if (d < rank) {
        QMat span = ch.dirs;
        QMat normals = span.empty() ? QMat() : nullspace(span);
        if (span.empty())
            for (int i = 0; i < rank; ++i) normals.push_back(to_qrow(unit_lattice(rank, i)));
        rref_inplace(normals);
        for (const auto& nrow : normals) {
            LatticeVector nu = lattice_from_qrow_primitive(nrow);
            poly.equalities_.push_back(Halfspace{nu, dot(ch.origin, nu)});
        }
    }

    QMat ys;
    ys.reserve(pts.size());
    for (const auto& p : pts) ys.push_back(ch.coords(p));

    std::set<size_t> vert_idx;
    if (d == 0) {
        vert_idx.insert(0);
    } else if (d == 1) {
        size_t lo = 0, hi = 0;
        for (size_t i = 1; i < ys.size(); ++i) {
            if (ys[i][0] < ys[lo][0]) lo = i;
            if (ys[i][0] > ys[hi][0]) hi = i;
        }
        vert_idx.insert(lo);
        vert_idx.insert(hi);
        poly.facets_.push_back(pull_back(ch, {Rat(1)}, ys[hi][0]));
        poly.facets_.push_back(pull_back(ch, {Rat(-1)}, -ys[lo][0]));
    } else if (d == 2) {
        std::vector<int> hull = hull_2d(ys);
        for (size_t k = 0; k < hull.size(); ++k) {
            vert_idx.insert(hull[k]);
            const QRow& a = ys[hull[k]];
            const QRow& b = ys[hull[(k + 1) % hull.size()]];
            QRow nrm = {b[1] - a[1], a[0] - b[0]};  // outward for ccw
            poly.facets_.push_back(pull_back(ch, nrm, nrm[0] * a[0] + nrm[1] * a[1]));
        }
    } else {
        // Brute-force supporting hyperplanes through d-subsets of points.
        const int m = static_cast<int>(ys.size());
        std::set<std::pair<std::vector<Int>, Rat>> facet_keys;
        std::vector<std::pair<QRow, Rat>> chart_facets;
        std::vector<int> subset(d);
        auto consider = [&]() {
            QMat sys;
            for (int i : subset) {
                QRow row = ys[i];
                row.push_back(Rat(-1));
                sys.push_back(std::move(row));
            }
            QMat ns = nullspace(sys);
            if (ns.size() != 1) return;
            QRow a(ns[0].begin(), ns[0].end() - 1);
            Rat b = ns[0].back();
            bool any_below = false, any_above = false;
            for (const auto& y : ys) {
                Rat s = -b;
                for (int k = 0; k < d; ++k) s += a[k] * y[k];
                if (s > 0) any_above = true;
                if (s < 0) any_below = true;
                if (any_above && any_below) return;
            }
            if (any_above) {
                for (auto& x : a) x = -x;
                b = -b;
            }
            // Keep genuine facets only: active points must span dim d-1.
            std::vector<RationalVector> active;
            for (int i = 0; i < m; ++i) {
                Rat s = -b;
                for (int k = 0; k < d; ++k) s += a[k] * ys[i][k];
                if (s == 0) active.push_back(RationalVector(ys[i]));
            }
            if (affine_rank(active) != d - 1) return;
            QRow joint = a;
            joint.push_back(b);
            std::vector<Int> key = primitive_integral(joint);
            Rat bi(key.back());
            std::vector<Int> nk(key.begin(), key.end() - 1);
            if (facet_keys.insert({nk, bi}).second) chart_facets.push_back({a, b});
        };
        auto rec = [&](auto&& self, int pos, int start) -> void {
            if (pos == d) {
                consider();
                return;
            }
            for (int i = start; i <= m - (d - pos); ++i) {
                subset[pos] = i;
                self(self, pos + 1, i + 1);
            }
        };
        rec(rec, 0, 0);
        for (const auto& [a, b] : chart_facets) poly.facets_.push_back(pull_back(ch, a, b));
        // Vertices: points whose active facet normals span the chart.
        for (int i = 0; i < m; ++i) {
            QMat act;
            for (const auto& [a, b] : chart_facets) {
                Rat s = -b;
                for (int k = 0; k < d; ++k) s += a[k] * ys[i][k];
                if (s == 0) act.push_back(a);
            }
            if (!act.empty() && rank_of(std::move(act)) == d) vert_idx.insert(i);
        }
    }

    for (size_t i : vert_idx) poly.vertices_.push_back(pts[i]);
    std::sort(poly.vertices_.begin(), poly.vertices_.end());
    poly.is_lattice_ = true;
    for (const auto& v : poly.vertices_)
        if (!v.is_integral()) { poly.is_lattice_ = false; break; }
    for (const auto& v : poly.vertices_)
        assert(poly.contains(v));
    return poly;
}

Polytope Polytope::from_inequalities(int rank, const std::vector<Halfspace>& ineqs) {
    const int m = static_cast<int>(ineqs.size());
    std::vector<RationalVector> candidates;
    std::vector<int> subset(rank);
    auto consider = [&]() {
        QMat sys;
        QRow rhs;
        for (int i : subset) {
            sys.push_back(to_qrow(ineqs[i].normal));
            rhs.push_back(ineqs[i].offset);
        }
        if (rank_of(sys) != rank) return;
        auto x = solve_linear(sys, rhs);
        if (!x) return;
        RationalVector pt(*x);
        for (const auto& h : ineqs)
            if (dot(pt, h.normal) > h.offset) return;
        candidates.push_back(std::move(pt));
    };
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == rank) {
            consider();
            return;
        }
        for (int i = start; i <= m - (rank - pos); ++i) {
            subset[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    if (m >= rank) rec(rec, 0, 0);

    if (!candidates.empty()) {
        std::vector<LatticeVector> rec_normals;
        for (const auto& h : ineqs) rec_normals.push_back(negate(h.normal));
        if (Cone::from_inequalities(rank, rec_normals).dim() != 0)
            throw std::invalid_argument("inequality system is unbounded");
        return from_points(rank, std::move(candidates));
    }
    // No basic solution: empty, unless the system is feasible (then it is
    // an unbounded polyhedron without vertices).
    QMat lhs;
    QRow rhs, cost;
    for (const auto& h : ineqs) {
        QRow row;
        for (const Int& c : h.normal.c) {
            row.emplace_back(c);
            row.emplace_back(-Rat(c));
        }
        lhs.push_back(std::move(row));
        rhs.push_back(h.offset);
    }
    for (auto& row : lhs) row.resize(2 * rank + m, Rat(0));
    for (int i = 0; i < m; ++i) lhs[i][2 * rank + i] = 1;  // slack
    cost.assign(2 * rank + m, Rat(0));
    if (m > 0 && solve_lp(lhs, rhs, cost).status != LPStatus::Infeasible)
        throw std::invalid_argument("inequality system is unbounded");
    return empty(rank);
}

bool Polytope::contains(const RationalVector& x) const {
    if (is_empty()) return false;
    assert(x.rank() == rank_);
    for (const auto& h : equalities_)
        if (dot(x, h.normal) != h.offset) return false;
    for (const auto& h : facets_)
        if (dot(x, h.normal) > h.offset) return false;
    return true;
}

bool Polytope::contains(const LatticeVector& x) const { return contains(RationalVector(x)); }

bool Polytope::contains_relint(const RationalVector& x) const {
    if (is_empty()) return false;
    for (const auto& h : equalities_)
        if (dot(x, h.normal) != h.offset) return false;
    for (const auto& h : facets_)
        if (dot(x, h.normal) >= h.offset) return false;
    return true;
}

std::pair<std::vector<Int>, std::vector<Int>> Polytope::bounding_box() const {
    assert(!is_empty());
    std::vector<Int> lo(rank_), hi(rank_);
    for (int i = 0; i < rank_; ++i) {
        Rat mn = vertices_[0].c[i], mx = vertices_[0].c[i];
        for (const auto& v : vertices_) {
            mn = std::min(mn, v.c[i]);
            mx = std::max(mx, v.c[i]);
        }
        lo[i] = rat_ceil(mn);
        hi[i] = rat_floor(mx);
    }
    return {lo, hi};
}

Polytope minkowski_sum(const Polytope& p, const Polytope& q) {
    if (p.rank() != q.rank()) throw std::invalid_argument("rank mismatch in Minkowski sum");
    if (p.is_empty() || q.is_empty()) return Polytope::empty(p.rank());
    std::vector<RationalVector> sums;
    sums.reserve(p.vertices().size() * q.vertices().size());
    for (const auto& a : p.vertices())
        for (const auto& b : q.vertices()) sums.push_back(add(a, b));
    return Polytope::from_points(p.rank(), std::move(sums));
}

Polytope dilate(const Polytope& p, const Int& t) {
    if (t < 0) throw std::invalid_argument("negative dilation");
    if (p.is_empty()) return p;
    if (t == 0) return Polytope::point(zero_rational(p.rank()));
    std::vector<RationalVector> pts;
    for (const auto& v : p.vertices()) pts.push_back(scale(Rat(t), v));
    return Polytope::from_points(p.rank(), std::move(pts));
}

Polytope translate(const Polytope& p, const RationalVector& v) {
    if (p.is_empty()) return p;
    std::vector<RationalVector> pts;
    for (const auto& w : p.vertices()) pts.push_back(add(w, v));
    return Polytope::from_points(p.rank(), std::move(pts));
}

Polytope sym(const Polytope& p) {
    if (p.is_empty()) return p;
    std::vector<RationalVector> pts;
    for (const auto& w : p.vertices()) pts.push_back(negate(w));
    return Polytope::from_points(p.rank(), std::move(pts));
}

std::vector<LatticeVector> lattice_points(const Polytope& p) {
    std::vector<LatticeVector> out;
    if (p.is_empty()) return out;
    auto [lo, hi] = p.bounding_box();
    const int n = p.rank();
    std::vector<Int> cur(n);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            LatticeVector v{std::vector<Int>(cur)};
            if (p.contains(v)) out.push_back(std::move(v));
            return;
        }
        for (Int x = lo[i]; x <= hi[i]; ++x) {
            cur[i] = x;
            self(self, i + 1);
        }
    };
    for (int i = 0; i < n; ++i)
        if (lo[i] > hi[i]) return out;
    rec(rec, 0);
    return out;
}

std::vector<std::pair<Polytope, int>> faces(const Polytope& p) {
    if (p.is_empty()) throw std::invalid_argument("faces of the empty polytope");
    const auto& verts = p.vertices();
    const size_t nv = verts.size();
    if (nv > 64) throw std::invalid_argument("too many vertices for face enumeration");
    const uint64_t full = nv == 64 ? ~0ull : (1ull << nv) - 1;

    std::set<uint64_t> masks;
    masks.insert(full);
    std::vector<uint64_t> facet_masks;
    for (const auto& h : p.facets()) {
        uint64_t m = 0;
        for (size_t i = 0; i < nv; ++i)
            if (dot(verts[i], h.normal) == h.offset) m |= 1ull << i;
        if (m) facet_masks.push_back(m);
        masks.insert(m);
    }
    masks.erase(0);
    // Close under intersections with facets.
    for (;;) {
        std::set<uint64_t> next = masks;
        for (uint64_t m : masks)
            for (uint64_t f : facet_masks) {
                uint64_t x = m & f;
                if (x) next.insert(x);
            }
        if (next == masks) break;
        masks = std::move(next);
    }

    std::vector<std::pair<Polytope, int>> out;
    for (uint64_t m : masks) {
        std::vector<RationalVector> pts;
        for (size_t i = 0; i < nv; ++i)
            if (m & (1ull << i)) pts.push_back(verts[i]);
        Polytope f = Polytope::from_points(p.rank(), std::move(pts));
        int d = f.dim();
        out.emplace_back(std::move(f), d);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first < b.first;
    });
    return out;
}

Rat support_function_eval(const Polytope& p, const RationalVector& x) {
    if (p.is_empty()) throw std::invalid_argument("support function of the empty polytope");
    Rat best = dot(p.vertices()[0], x);
    for (const auto& v : p.vertices()) best = std::max(best, dot(v, x));
    return best;
}

}  // namespace tvb
