#include "tvb/plfunction.hpp"

#include "tvb/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace tvb {

namespace {

// Interior vector of a full-dimensional pointed cone: the sum of its rays.
LatticeVector interior_vector(const Fan& fan, int max_cone) {
    LatticeVector s = zero_lattice(fan.rank());
    for (int i : fan.max_cone(max_cone)) s = add(s, fan.ray(i));
    return s;
}

}  // namespace

PLFunction::PLFunction(FanPtr fan, std::vector<LatticeVector> slopes)
    : fan_(std::move(fan)), slopes_(std::move(slopes)) {
    if (static_cast<int>(slopes_.size()) != fan_->num_max_cones())
        throw std::invalid_argument("one slope per maximal cone required");
    for (const auto& u : slopes_)
        if (u.rank() != fan_->rank()) throw std::invalid_argument("slope rank mismatch");
    for (const auto& w : fan_->walls())
        for (int r : w.common_rays)
            if (dot(slopes_[w.cone_a], fan_->ray(r)) != dot(slopes_[w.cone_b], fan_->ray(r)))
                throw std::invalid_argument("slopes disagree on a shared face");
}

Rat PLFunction::evaluate(const RationalVector& x) const {
    int i = fan_->max_cone_containing(x);
    return dot(x, slopes_[i]);
}

Int PLFunction::evaluate(const LatticeVector& x) const {
    int i = fan_->max_cone_containing(RationalVector(x));
    return dot(x, slopes_[i]);
}

Int PLFunction::ray_value(int i) const {
    int c = fan_->max_cone_containing(RationalVector(fan_->ray(i)));
    return dot(fan_->ray(i), slopes_[c]);
}

PLFunction pl_zero(FanPtr fan) {
    const int n = fan->rank();
    const int k = fan->num_max_cones();
    return PLFunction(std::move(fan), std::vector<LatticeVector>(k, zero_lattice(n)));
}

PLFunction pl_linear(FanPtr fan, const LatticeVector& u) {
    const int k = fan->num_max_cones();
    return PLFunction(std::move(fan), std::vector<LatticeVector>(k, u));
}

PLFunction pl_add(const PLFunction& a, const PLFunction& b) {
    if (a.fan() != b.fan() && !a.fan()->same_fan(*b.fan()))
        throw std::invalid_argument("PL sum requires a common fan");
    std::vector<LatticeVector> s;
    for (int i = 0; i < a.fan()->num_max_cones(); ++i) s.push_back(add(a.slope(i), b.slope(i)));
    return PLFunction(a.fan(), std::move(s));
}

PLFunction pl_scale(const Int& k, const PLFunction& a) {
    std::vector<LatticeVector> s;
    for (const auto& u : a.slopes()) s.push_back(scale(k, u));
    return PLFunction(a.fan(), std::move(s));
}

PLFunction pl_negate(const PLFunction& a) { return pl_scale(Int(-1), a); }

namespace {

// Sign of h across a wall, evaluated on an interior vector of cone_a:
// positive means h is convex-side there.
Int wall_excess(const PLFunction& h, const Wall& w) {
    LatticeVector diff = sub(h.slope(w.cone_a), h.slope(w.cone_b));
    return dot(diff, interior_vector(*h.fan(), w.cone_a));
}

}  // namespace

bool is_convex(const PLFunction& h) {
    for (const auto& w : h.fan()->walls())
        if (wall_excess(h, w) < 0) return false;
    return true;
}

bool is_strictly_convex(const PLFunction& h) {
    for (const auto& w : h.fan()->walls())
        if (wall_excess(h, w) <= 0) return false;
    return true;
}

PLFunction strictly_convex_witness(const FanPtr& fan) {
    if (!fan->is_complete())
        throw std::invalid_argument("witness requires a complete fan");
    const int n = fan->rank();
    const int k = fan->num_max_cones();
    const auto& walls = fan->walls();
    // Free slope variables split as u = p - q; one slack per wall.
    const int nv = 2 * n * k + static_cast<int>(walls.size());
    auto var_p = [&](int cone, int j) { return 2 * (cone * n + j); };
    auto var_q = [&](int cone, int j) { return 2 * (cone * n + j) + 1; };

    QMat lhs;
    QRow rhs;
    for (const auto& w : walls) {
        for (int r : w.common_rays) {
            QRow row(nv, Rat(0));
            const LatticeVector& v = fan->ray(r);
            for (int j = 0; j < n; ++j) {
                row[var_p(w.cone_a, j)] += Rat(v.c[j]);
                row[var_q(w.cone_a, j)] -= Rat(v.c[j]);
                row[var_p(w.cone_b, j)] -= Rat(v.c[j]);
                row[var_q(w.cone_b, j)] += Rat(v.c[j]);
            }
            lhs.push_back(std::move(row));
            rhs.push_back(Rat(0));
        }
    }
    for (size_t wi = 0; wi < walls.size(); ++wi) {
        const Wall& w = walls[wi];
        LatticeVector t = interior_vector(*fan, w.cone_a);
        QRow row(nv, Rat(0));
        for (int j = 0; j < n; ++j) {
            row[var_p(w.cone_a, j)] += Rat(t.c[j]);
            row[var_q(w.cone_a, j)] -= Rat(t.c[j]);
            row[var_p(w.cone_b, j)] -= Rat(t.c[j]);
            row[var_q(w.cone_b, j)] += Rat(t.c[j]);
        }
        row[2 * n * k + static_cast<int>(wi)] = -1;
        lhs.push_back(std::move(row));
        rhs.push_back(Rat(1));
    }
    QRow cost(nv, Rat(0));
    for (int i = 0; i < 2 * n * k; ++i) cost[i] = 1;

    LPResult res = solve_lp(lhs, rhs, cost);
    if (res.status != LPStatus::Optimal) {
        fan->set_projective_hint(false);
        throw NonProjectiveFanError("fan admits no strictly convex function");
    }
    // Clear denominators jointly, then reduce.
    QRow flat;
    for (int c = 0; c < k; ++c)
        for (int j = 0; j < n; ++j) flat.push_back(res.x[var_p(c, j)] - res.x[var_q(c, j)]);
    std::vector<Int> ints = primitive_integral(flat);
    std::vector<LatticeVector> slopes;
    for (int c = 0; c < k; ++c)
        slopes.push_back(LatticeVector(std::vector<Int>(ints.begin() + c * n, ints.begin() + (c + 1) * n)));
    PLFunction g(fan, std::move(slopes));
    assert(is_strictly_convex(g));
    fan->set_projective_hint(true);
    return g;
}

ConvexSplit convex_split(const PLFunction& h) {
    if (is_convex(h)) {
        // Minimal c is zero; no witness needed.
        return ConvexSplit{h, pl_zero(h.fan()), Int(0)};
    }
    return convex_split(h, strictly_convex_witness(h.fan()));
}

ConvexSplit convex_split(const PLFunction& h, const PLFunction& witness) {
    if (is_convex(h)) return ConvexSplit{h, pl_zero(h.fan()), Int(0)};
    Int c = 0;
    for (const auto& w : h.fan()->walls()) {
        Int dh = wall_excess(h, w);
        if (dh >= 0) continue;
        Int dg = wall_excess(witness, w);
        assert(dg > 0);
        // smallest integer c with dh + c*dg >= 0
        Int need = (-dh + dg - 1) / dg;
        c = std::max(c, need);
    }
    PLFunction minus = pl_scale(c, witness);
    PLFunction plus = pl_add(h, minus);
    assert(is_convex(plus));
    return ConvexSplit{std::move(plus), std::move(minus), std::move(c)};
}

Polytope polytope_of_convex(const PLFunction& h) {
    if (!is_convex(h)) throw std::invalid_argument("polytope of a non-convex PL function");
    std::vector<LatticeVector> pts(h.slopes());
    return Polytope::from_lattice_points(h.fan()->rank(), pts);
}

PLFunction divisor_pl(const FanPtr& fan, const std::vector<Int>& a) {
    if (a.size() != fan->rays().size())
        throw std::invalid_argument("one divisor coefficient per ray required");
    std::vector<LatticeVector> slopes;
    for (int c = 0; c < fan->num_max_cones(); ++c) {
        QMat sys;
        QRow rhs;
        for (int r : fan->max_cone(c)) {
            sys.push_back(to_qrow(fan->ray(r)));
            rhs.push_back(Rat(a[r]));
        }
        auto u = solve_linear(sys, rhs);
        if (!u) throw std::invalid_argument("divisor data inconsistent on a maximal cone");
        RationalVector ru(*u);
        if (!ru.is_integral())
            throw std::invalid_argument("divisor is not Cartier: non-integral slope");
        slopes.push_back(ru.to_lattice());
    }
    return PLFunction(fan, std::move(slopes));
}

MultiSupportFunction::MultiSupportFunction(FanPtr fan,
                                           std::vector<std::vector<LatticeVector>> branches)
    : fan_(std::move(fan)), branches_(std::move(branches)) {
    if (static_cast<int>(branches_.size()) != fan_->num_max_cones())
        throw std::invalid_argument("one branch multiset per maximal cone required");
    if (branches_.empty()) throw std::invalid_argument("empty fan");
    r_ = static_cast<int>(branches_[0].size());
    for (auto& b : branches_) {
        if (static_cast<int>(b.size()) != r_)
            throw std::invalid_argument("branch multisets must share one cardinality");
        std::sort(b.begin(), b.end());
    }
    // Restrictions to every shared wall must agree as multisets.
    for (const auto& w : fan_->walls()) {
        std::vector<std::vector<Int>> ra, rb;
        for (const auto& u : branches_[w.cone_a]) {
            std::vector<Int> key;
            for (int r : w.common_rays) key.push_back(dot(u, fan_->ray(r)));
            ra.push_back(std::move(key));
        }
        for (const auto& u : branches_[w.cone_b]) {
            std::vector<Int> key;
            for (int r : w.common_rays) key.push_back(dot(u, fan_->ray(r)));
            rb.push_back(std::move(key));
        }
        std::sort(ra.begin(), ra.end());
        std::sort(rb.begin(), rb.end());
        if (ra != rb)
            throw std::invalid_argument("branch multisets disagree on a shared face");
    }
}

std::vector<Rat> MultiSupportFunction::values(const RationalVector& x) const {
    int c = fan_->max_cone_containing(x);
    std::vector<Rat> vals;
    for (const auto& u : branches_[c]) vals.push_back(dot(x, u));
    std::sort(vals.begin(), vals.end());
    return vals;
}

MultiSupportFunction::Sorted MultiSupportFunction::sorted_branches() const {
    // Refine by every hyperplane where two branches of some cone tie.
    std::set<LatticeVector> hyperplanes;
    for (const auto& b : branches_) {
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = i + 1; j < b.size(); ++j) {
                LatticeVector d = sub(b[i], b[j]);
                if (d.is_zero()) continue;
                d = make_primitive(d);
                for (const Int& x : d.c) {
                    if (x > 0) break;
                    if (x < 0) { d = negate(d); break; }
                }
                hyperplanes.insert(d);
            }
    }
    FanPtr refined = fan_;
    for (const auto& nu : hyperplanes) refined = refine_by_hyperplane(refined, nu);

    Sorted out;
    out.refined = refined;
    std::vector<std::vector<LatticeVector>> per_level(r_);
    for (int c = 0; c < refined->num_max_cones(); ++c) {
        LatticeVector t = interior_vector(*refined, c);
        int orig = fan_->max_cone_containing(RationalVector(t));
        std::vector<LatticeVector> us = branches_[orig];
        std::stable_sort(us.begin(), us.end(), [&](const LatticeVector& a, const LatticeVector& b) {
            return dot(a, t) < dot(b, t);
        });
        for (int i = 0; i < r_; ++i) per_level[i].push_back(us[i]);
    }
    for (int i = 0; i < r_; ++i) out.h.emplace_back(refined, std::move(per_level[i]));
    return out;
}

}  // namespace tvb
