#include "tvb/cone.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace tvb {

namespace {

struct GenDesc {
    std::vector<LatticeVector> rays;
    std::vector<LatticeVector> lineality;
};

// Canonical integral basis of the nullspace of the given normals.
std::vector<LatticeVector> lineality_of(int rank, const std::vector<LatticeVector>& normals) {
    if (normals.empty()) {
        std::vector<LatticeVector> basis;
        for (int i = 0; i < rank; ++i) basis.push_back(unit_lattice(rank, i));
        return basis;
    }
    QMat m;
    for (const auto& v : normals) m.push_back(to_qrow(v));
    QMat ns = nullspace(m);
    rref_inplace(ns);
    std::vector<LatticeVector> basis;
    for (const auto& row : ns) basis.push_back(lattice_from_qrow_primitive(row));
    std::sort(basis.begin(), basis.end());
    return basis;
}

// Orthogonal projection of w onto the complement of span(lin).
QRow project_off(const QRow& w, const std::vector<LatticeVector>& lin) {
    if (lin.empty()) return w;
    const int k = static_cast<int>(lin.size());
    QMat gram(k, QRow(k));
    QRow rhs(k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) gram[i][j] = Rat(dot(lin[i], lin[j]));
        Rat s = 0;
        for (size_t t = 0; t < w.size(); ++t) s += w[t] * lin[i].c[t];
        rhs[i] = s;
    }
    auto y = solve_linear(gram, rhs);
    assert(y.has_value());
    QRow out = w;
    for (int i = 0; i < k; ++i)
        for (size_t t = 0; t < out.size(); ++t) out[t] -= (*y)[i] * lin[i].c[t];
    return out;
}

// Extreme rays and lineality of {x : <normal, x> >= 0}. Brute-force
// enumeration of candidate active sets; adequate at rank <= 4.
GenDesc generators_from_inequalities(int rank, std::vector<LatticeVector> normals) {
    // Drop zero normals and duplicates to keep the enumeration small.
    std::set<LatticeVector> seen;
    std::vector<LatticeVector> nz;
    for (auto& v : normals) {
        if (v.is_zero()) continue;
        if (seen.insert(v).second) nz.push_back(v);
    }
    GenDesc out;
    out.lineality = lineality_of(rank, nz);
    const int dl = static_cast<int>(out.lineality.size());
    const int need = rank - dl - 1;  // active rank of an extreme ray
    if (need < 0) return out;        // the cone is a linear subspace

    const int k = static_cast<int>(nz.size());
    std::vector<int> idx(need);
    std::set<LatticeVector> rayset;

    auto try_subset = [&](const std::vector<int>& subset) {
        QMat m;
        for (int i : subset) m.push_back(to_qrow(nz[i]));
        QMat ns = m.empty() ? QMat() : nullspace(m);
        if (m.empty())
            for (int i = 0; i < rank; ++i) ns.push_back(to_qrow(unit_lattice(rank, i)));
        if (static_cast<int>(ns.size()) != dl + 1) return;
        // Pick a nullspace vector independent of the lineality.
        for (const auto& cand : ns) {
            QRow w = project_off(cand, out.lineality);
            bool zero = true;
            for (const Rat& x : w)
                if (x != 0) { zero = false; break; }
            if (zero) continue;
            LatticeVector dir = lattice_from_qrow_primitive(w);
            bool ok_pos = true, ok_neg = true;
            for (const auto& nu : nz) {
                Int s = dot(dir, nu);
                if (s < 0) ok_pos = false;
                if (s > 0) ok_neg = false;
                if (!ok_pos && !ok_neg) break;
            }
            if (ok_pos)
                rayset.insert(dir);
            else if (ok_neg)
                rayset.insert(negate(dir));
            return;
        }
    };

    // All subsets of size `need`.
    std::vector<int> subset(need);
    auto rec = [&](auto&& self, int pos, int start) -> void {
        if (pos == need) {
            try_subset(subset);
            return;
        }
        for (int i = start; i <= k - (need - pos); ++i) {
            subset[pos] = i;
            self(self, pos + 1, i + 1);
        }
    };
    if (need <= k)
        rec(rec, 0, 0);
    out.rays.assign(rayset.begin(), rayset.end());
    return out;
}

}  // namespace

Cone Cone::from_rays(int rank, const std::vector<LatticeVector>& rays) {
    for (const auto& r : rays) {
        if (r.rank() != rank) throw std::invalid_argument("ray rank mismatch");
        if (r.is_zero()) throw std::invalid_argument("zero vector is not a ray");
    }
    std::vector<LatticeVector> prim;
    prim.reserve(rays.size());
    for (const auto& r : rays) prim.push_back(make_primitive(r));

    GenDesc dual = generators_from_inequalities(rank, prim);
    std::vector<LatticeVector> ineqs = dual.rays;
    for (const auto& l : dual.lineality) {
        ineqs.push_back(l);
        ineqs.push_back(negate(l));
    }
    Cone c;
    c.rank_ = rank;
    if (ineqs.empty() && rank > 0) {
        // Dual is {0}: this cone is all of N_R.
        for (int i = 0; i < rank; ++i) {
            c.lineality_.push_back(unit_lattice(rank, i));
        }
        c.ineqs_.clear();
        return c;
    }
    GenDesc self = generators_from_inequalities(rank, ineqs);
    c.rays_ = std::move(self.rays);
    c.lineality_ = std::move(self.lineality);
    c.ineqs_ = std::move(ineqs);
    return c;
}

Cone Cone::from_inequalities(int rank, const std::vector<LatticeVector>& normals) {
    Cone c;
    c.rank_ = rank;
    c.ineqs_ = normals;
    GenDesc self = generators_from_inequalities(rank, normals);
    c.rays_ = std::move(self.rays);
    c.lineality_ = std::move(self.lineality);
    return c;
}

int Cone::dim() const {
    QMat m;
    for (const auto& r : rays_) m.push_back(to_qrow(r));
    for (const auto& l : lineality_) m.push_back(to_qrow(l));
    return m.empty() ? 0 : rank_of(std::move(m));
}

bool Cone::contains(const RationalVector& x) const {
    assert(x.rank() == rank_);
    for (const auto& nu : ineqs_)
        if (dot(x, nu) < 0) return false;
    return true;
}

bool Cone::contains(const LatticeVector& x) const { return contains(RationalVector(x)); }

std::vector<int> Cone::active_inequalities(const RationalVector& x) const {
    std::vector<int> act;
    for (size_t i = 0; i < ineqs_.size(); ++i)
        if (dot(x, ineqs_[i]) == 0) act.push_back(static_cast<int>(i));
    return act;
}

Cone dual_cone(const Cone& c) {
    std::vector<LatticeVector> normals = c.rays();
    for (const auto& l : c.lineality()) {
        normals.push_back(l);
        normals.push_back(negate(l));
    }
    return Cone::from_inequalities(c.rank(), normals);
}

Cone intersect(const Cone& a, const Cone& b) {
    assert(a.rank() == b.rank());
    std::vector<LatticeVector> normals = a.inequality_normals();
    const auto& bn = b.inequality_normals();
    normals.insert(normals.end(), bn.begin(), bn.end());
    return Cone::from_inequalities(a.rank(), normals);
}

}  // namespace tvb
