#include "tvb/fan.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace tvb {

namespace {

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

std::shared_ptr<const Fan> Fan::make(int rank, std::vector<LatticeVector> rays,
                                     std::vector<std::vector<int>> max_cones) {
    auto fan = std::shared_ptr<Fan>(new Fan());
    fan->rank_ = rank;
    fan->rays_ = std::move(rays);
    for (auto& mc : max_cones) fan->max_cone_rays_.push_back(sorted_unique(std::move(mc)));
    fan->validate();
    fan->build_closure();
    return fan;
}

void Fan::validate() const {
    std::set<LatticeVector> seen;
    for (const auto& r : rays_) {
        if (r.rank() != rank_) throw std::invalid_argument("fan: ray rank mismatch");
        if (r.is_zero()) throw std::invalid_argument("fan: zero ray");
        if (make_primitive(r) != r) throw std::invalid_argument("fan: ray not primitive");
        if (!seen.insert(r).second) throw std::invalid_argument("fan: duplicate ray");
    }
    for (const auto& mc : max_cone_rays_) {
        for (int i : mc)
            if (i < 0 || i >= static_cast<int>(rays_.size()))
                throw std::invalid_argument("fan: bad ray index");
    }
}

void Fan::build_closure() {
    const int n = rank_;
    // Geometric maximal cones; their ray sets must reproduce the input.
    for (const auto& mc : max_cone_rays_) {
        std::vector<LatticeVector> gens;
        for (int i : mc) gens.push_back(rays_[i]);
        Cone c = Cone::from_rays(n, gens);
        if (!c.is_pointed()) throw std::invalid_argument("fan: maximal cone contains a line");
        if (c.dim() != n) throw std::invalid_argument("fan: maximal cone not full-dimensional");
        std::set<LatticeVector> want(gens.begin(), gens.end());
        std::set<LatticeVector> got(c.rays().begin(), c.rays().end());
        if (want != got) throw std::invalid_argument("fan: non-extremal ray in a maximal cone");
        max_cone_geom_.push_back(std::move(c));
    }

    // Face closure per maximal cone via active sets of the facet normals.
    std::set<std::vector<int>> cone_sets;
    max_cone_facets_.resize(max_cone_rays_.size());
    for (size_t ci = 0; ci < max_cone_rays_.size(); ++ci) {
        const auto& mc = max_cone_rays_[ci];
        const Cone& geom = max_cone_geom_[ci];
        std::set<std::vector<int>> sets;
        sets.insert(mc);
        std::vector<std::vector<int>> facet_sets;
        for (const auto& nu : geom.inequality_normals()) {
            std::vector<int> face;
            for (int i : mc)
                if (dot(rays_[i], nu) == 0) face.push_back(i);
            facet_sets.push_back(face);
            sets.insert(face);
        }
        for (;;) {
            std::set<std::vector<int>> next = sets;
            for (const auto& s : sets)
                for (const auto& f : facet_sets) {
                    std::vector<int> x;
                    std::set_intersection(s.begin(), s.end(), f.begin(), f.end(),
                                          std::back_inserter(x));
                    next.insert(x);
                }
            if (next == sets) break;
            sets = std::move(next);
        }
        cone_sets.insert(sets.begin(), sets.end());
        // Codim-1 faces of this maximal cone.
        for (const auto& s : sets) {
            QMat m;
            for (int i : s) m.push_back(to_qrow(rays_[i]));
            if (!m.empty() && rank_of(std::move(m)) == n - 1) max_cone_facets_[ci].push_back(s);
        }
    }
    for (const auto& s : cone_sets) {
        QMat m;
        for (int i : s) m.push_back(to_qrow(rays_[i]));
        int d = m.empty() ? 0 : rank_of(std::move(m));
        all_cones_.push_back(FanCone{s, d});
    }
    std::sort(all_cones_.begin(), all_cones_.end(), [](const FanCone& a, const FanCone& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        return a.ray_indices < b.ray_indices;
    });

    // Fan axiom: pairwise intersections are common faces.
    const int nc = num_max_cones();
    for (int a = 0; a < nc; ++a) {
        for (int b = a + 1; b < nc; ++b) {
            std::vector<int> common;
            std::set_intersection(max_cone_rays_[a].begin(), max_cone_rays_[a].end(),
                                  max_cone_rays_[b].begin(), max_cone_rays_[b].end(),
                                  std::back_inserter(common));
            Cone inter = intersect(max_cone_geom_[a], max_cone_geom_[b]);
            if (!inter.lineality().empty())
                throw std::invalid_argument("fan: cone intersection contains a line");
            std::set<LatticeVector> expect;
            for (int i : common) expect.insert(rays_[i]);
            std::set<LatticeVector> got(inter.rays().begin(), inter.rays().end());
            if (expect != got)
                throw std::invalid_argument("fan: intersection of cones is not a common face");
            if (!cone_sets.count(common))
                throw std::invalid_argument("fan: intersection is not a face of the fan");
            QMat m;
            for (int i : common) m.push_back(to_qrow(rays_[i]));
            int cd = m.empty() ? 0 : rank_of(std::move(m));
            if (cd == n - 1) walls_.push_back(Wall{a, b, common});
        }
    }

    // Completeness: every facet of a maximal cone is shared by exactly two
    // maximal cones, and the fan covers the +-basis directions.
    is_complete_ = true;
    for (int ci = 0; ci < nc && is_complete_; ++ci) {
        for (const auto& facet : max_cone_facets_[ci]) {
            int shared = 0;
            for (int cj = 0; cj < nc; ++cj) {
                bool inside = true;
                for (int r : facet)
                    if (!max_cone_geom_[cj].contains(rays_[r])) { inside = false; break; }
                if (inside) ++shared;
            }
            if (shared != 2) { is_complete_ = false; break; }
        }
    }
    if (is_complete_) {
        for (int i = 0; i < n && is_complete_; ++i) {
            for (int s = 0; s < 2; ++s) {
                LatticeVector e = unit_lattice(n, i);
                if (s) e = negate(e);
                bool covered = false;
                for (int ci = 0; ci < nc; ++ci)
                    if (max_cone_geom_[ci].contains(e)) { covered = true; break; }
                if (!covered) { is_complete_ = false; break; }
            }
        }
    }
}

int Fan::max_cone_containing(const RationalVector& x) const {
    for (int i = 0; i < num_max_cones(); ++i)
        if (max_cone_geom_[i].contains(x)) return i;
    throw std::invalid_argument("point outside the support of the fan");
}

bool Fan::supports(const RationalVector& x) const {
    for (int i = 0; i < num_max_cones(); ++i)
        if (max_cone_geom_[i].contains(x)) return true;
    return false;
}

int Fan::ray_index(const LatticeVector& v) const {
    for (size_t i = 0; i < rays_.size(); ++i)
        if (rays_[i] == v) return static_cast<int>(i);
    return -1;
}

Cone Fan::cone_from_face(const std::vector<int>& ray_indices) const {
    std::vector<LatticeVector> gens;
    for (int i : ray_indices) gens.push_back(rays_[i]);
    return Cone::from_rays(rank_, gens);
}

std::vector<std::vector<int>> Fan::facets_of_max_cone(int i) const {
    return max_cone_facets_[i];
}

bool Fan::same_fan(const Fan& other) const {
    if (rank_ != other.rank_) return false;
    std::set<LatticeVector> a(rays_.begin(), rays_.end());
    std::set<LatticeVector> b(other.rays_.begin(), other.rays_.end());
    if (a != b) return false;
    std::set<std::set<LatticeVector>> ca, cb;
    for (const auto& mc : max_cone_rays_) {
        std::set<LatticeVector> s;
        for (int i : mc) s.insert(rays_[i]);
        ca.insert(std::move(s));
    }
    for (const auto& mc : other.max_cone_rays_) {
        std::set<LatticeVector> s;
        for (int i : mc) s.insert(other.rays_[i]);
        cb.insert(std::move(s));
    }
    return ca == cb;
}

bool Fan::refines(const Fan& coarser) const {
    if (rank_ != coarser.rank_) return false;
    for (int i = 0; i < num_max_cones(); ++i) {
        bool found = false;
        for (int j = 0; j < coarser.num_max_cones() && !found; ++j) {
            bool inside = true;
            for (int r : max_cone_rays_[i])
                if (!coarser.max_cone_geom_[j].contains(rays_[r])) { inside = false; break; }
            found = inside;
        }
        if (!found) return false;
    }
    return true;
}

namespace {

// Assemble a fan from geometric maximal cones (deduplicated).
FanPtr fan_from_cones(int rank, const std::vector<Cone>& cones) {
    std::vector<LatticeVector> rays;
    std::set<std::vector<LatticeVector>> seen;
    std::vector<std::vector<int>> max_cones;
    auto ray_index = [&](const LatticeVector& v) {
        for (size_t i = 0; i < rays.size(); ++i)
            if (rays[i] == v) return static_cast<int>(i);
        rays.push_back(v);
        return static_cast<int>(rays.size() - 1);
    };
    for (const auto& c : cones) {
        std::vector<LatticeVector> key = c.rays();
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        std::vector<int> idx;
        for (const auto& r : key) idx.push_back(ray_index(r));
        max_cones.push_back(std::move(idx));
    }
    return Fan::make(rank, std::move(rays), std::move(max_cones));
}

}  // namespace

FanPtr normal_fan(const Polytope& p) {
    if (p.is_empty() || p.dim() != p.rank())
        throw std::invalid_argument("normal fan requires a full-dimensional polytope");
    const int n = p.rank();
    std::vector<Cone> cones;
    for (const auto& v : p.vertices()) {
        std::vector<LatticeVector> normals;
        for (const auto& w : p.vertices()) {
            if (w == v) continue;
            normals.push_back(lattice_from_direction(sub(v, w)));
        }
        if (normals.empty()) throw std::invalid_argument("normal fan of a point");
        cones.push_back(Cone::from_inequalities(n, normals));
    }
    FanPtr f = fan_from_cones(n, cones);
    f->set_projective_hint(true);
    return f;
}

Polytope polytope_from_divisor(const Fan& f, const std::vector<Int>& a) {
    if (!f.is_complete()) throw std::invalid_argument("divisor polytope requires a complete fan");
    if (a.size() != f.rays().size()) throw std::invalid_argument("one coefficient per ray required");
    std::vector<Halfspace> ineqs;
    for (size_t i = 0; i < a.size(); ++i)
        ineqs.push_back(Halfspace{negate(f.ray(static_cast<int>(i))), Rat(a[i])});
    return Polytope::from_inequalities(f.rank(), ineqs);
}

FanPtr common_refinement(const FanPtr& f1, const FanPtr& f2) {
    if (f1->rank() != f2->rank()) throw std::invalid_argument("rank mismatch");
    if (!f1->is_complete() || !f2->is_complete())
        throw std::invalid_argument("common refinement requires equal (complete) supports");
    std::vector<Cone> cones;
    for (int i = 0; i < f1->num_max_cones(); ++i)
        for (int j = 0; j < f2->num_max_cones(); ++j) {
            Cone c = intersect(f1->max_cone_geometry(i), f2->max_cone_geometry(j));
            if (c.is_pointed() && c.dim() == f1->rank()) cones.push_back(std::move(c));
        }
    return fan_from_cones(f1->rank(), cones);
}

FanPtr stellar_subdivide(const FanPtr& f, const LatticeVector& ray) {
    if (make_primitive(ray) != ray) throw std::invalid_argument("subdivision ray not primitive");
    if (!f->supports(RationalVector(ray)))
        throw std::invalid_argument("subdivision ray outside the fan support");
    std::vector<Cone> cones;
    for (int i = 0; i < f->num_max_cones(); ++i) {
        const Cone& geom = f->max_cone_geometry(i);
        if (!geom.contains(ray)) {
            cones.push_back(geom);
            continue;
        }
        for (const auto& facet : f->facets_of_max_cone(i)) {
            Cone fc = f->cone_from_face(facet);
            if (fc.contains(ray)) continue;
            std::vector<LatticeVector> gens;
            for (int r : facet) gens.push_back(f->ray(r));
            gens.push_back(ray);
            cones.push_back(Cone::from_rays(f->rank(), gens));
        }
    }
    FanPtr out = fan_from_cones(f->rank(), cones);
    assert(out->refines(*f));
    return out;
}

FanPtr refine_by_hyperplane(const FanPtr& f, const LatticeVector& normal) {
    std::vector<Cone> cones;
    for (int i = 0; i < f->num_max_cones(); ++i) {
        const Cone& geom = f->max_cone_geometry(i);
        std::vector<LatticeVector> plus = geom.inequality_normals();
        plus.push_back(normal);
        std::vector<LatticeVector> minus = geom.inequality_normals();
        minus.push_back(negate(normal));
        for (auto& half : {plus, minus}) {
            Cone c = Cone::from_inequalities(f->rank(), half);
            if (c.is_pointed() && c.dim() == f->rank()) cones.push_back(std::move(c));
        }
    }
    return fan_from_cones(f->rank(), cones);
}

}  // namespace tvb
