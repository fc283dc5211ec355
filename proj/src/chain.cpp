#include "tvb/chain.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace tvb {

ConvexChain::ConvexChain(int rank, std::vector<Term> terms) : rank_(rank) {
    std::map<Polytope, Int> merged;
    for (auto& t : terms) {
        if (t.polytope.rank() != rank) throw std::invalid_argument("chain term rank mismatch");
        if (t.polytope.is_empty()) throw std::invalid_argument("chain term with empty polytope");
        if (t.coeff == 0) continue;
        merged[t.polytope] += t.coeff;
    }
    for (auto& [p, c] : merged)
        if (c != 0) terms_.push_back(Term{c, p});
}

ConvexChain ConvexChain::indicator(const Polytope& p) {
    return ConvexChain(p.rank(), {Term{Int(1), p}});
}

Int ConvexChain::evaluate(const RationalVector& x) const {
    Int s = 0;
    for (const auto& t : terms_)
        if (t.polytope.contains(x)) s += t.coeff;
    return s;
}

Int ConvexChain::evaluate(const LatticeVector& x) const { return evaluate(RationalVector(x)); }

ConvexChain add(const ConvexChain& a, const ConvexChain& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("chain rank mismatch");
    std::vector<ConvexChain::Term> terms = a.terms();
    const auto& bt = b.terms();
    terms.insert(terms.end(), bt.begin(), bt.end());
    return ConvexChain(a.rank(), std::move(terms));
}

ConvexChain scale(const Int& k, const ConvexChain& a) {
    std::vector<ConvexChain::Term> terms;
    for (const auto& t : a.terms()) terms.push_back({k * t.coeff, t.polytope});
    return ConvexChain(a.rank(), std::move(terms));
}

ConvexChain star_product(const ConvexChain& a, const ConvexChain& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("chain rank mismatch");
    std::vector<ConvexChain::Term> terms;
    for (const auto& s : a.terms())
        for (const auto& t : b.terms())
            terms.push_back({s.coeff * t.coeff, minkowski_sum(s.polytope, t.polytope)});
    return ConvexChain(a.rank(), std::move(terms));
}

ConvexChain invert_indicator(const Polytope& p) {
    if (p.is_empty()) throw std::invalid_argument("inverse of the empty polytope");
    std::vector<ConvexChain::Term> terms;
    for (const auto& [face, d] : faces(sym(p)))
        terms.push_back({(d % 2 == 0) ? Int(1) : Int(-1), face});
    return ConvexChain(p.rank(), std::move(terms));
}

ConvexChain virtual_polytope_chain(const Polytope& p, const Polytope& q) {
    return star_product(ConvexChain::indicator(p), invert_indicator(q));
}

ConvexChain interior_chain(const Polytope& p) {
    if (p.is_empty()) return ConvexChain(p.rank());
    std::vector<ConvexChain::Term> terms;
    for (const auto& [face, d] : faces(p))
        terms.push_back({(d % 2 == 0) ? Int(1) : Int(-1), face});
    return ConvexChain(p.rank(), std::move(terms));
}

Int degree(const ConvexChain& a) {
    Int s = 0;
    for (const auto& t : a.terms()) s += t.coeff;
    return s;
}

std::optional<std::pair<std::vector<Int>, std::vector<Int>>> chain_bounding_box(
    const ConvexChain& a) {
    if (a.terms().empty()) return std::nullopt;
    auto [lo, hi] = a.terms()[0].polytope.bounding_box();
    for (const auto& t : a.terms()) {
        auto [l, h] = t.polytope.bounding_box();
        for (int i = 0; i < a.rank(); ++i) {
            lo[i] = std::min(lo[i], l[i]);
            hi[i] = std::max(hi[i], h[i]);
        }
    }
    return std::make_pair(lo, hi);
}

Int lattice_sum(const ConvexChain& a) {
    auto box = chain_bounding_box(a);
    if (!box) return 0;
    auto& [lo, hi] = *box;
    const int n = a.rank();
    Int total = 0;
    std::vector<Int> cur(n);
    auto rec = [&](auto&& self, int i) -> void {
        if (i == n) {
            total += a.evaluate(LatticeVector(std::vector<Int>(cur)));
            return;
        }
        for (Int x = lo[i]; x <= hi[i]; ++x) {
            cur[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    return total;
}

Int ConeChain::evaluate(const RationalVector& x) const {
    Int s = 0;
    for (const auto& t : terms_)
        if (t.cone.contains(sub(x, t.apex))) s += t.coeff;
    return s;
}

Int ConeChain::evaluate(const LatticeVector& x) const { return evaluate(RationalVector(x)); }

ConeChain brianchon_gram(const PLFunction& h) {
    const Fan& fan = *h.fan();
    if (!fan.is_complete()) throw std::invalid_argument("Brianchon-Gram requires a complete fan");
    const int n = fan.rank();
    std::vector<ConeChain::Term> terms;
    for (const auto& fc : fan.all_cones()) {
        int codim = n - fc.dim;
        Int sign = (codim % 2 == 0) ? Int(1) : Int(-1);
        // Any maximal cone having this cone as a face provides the shift.
        int owner = -1;
        for (int c = 0; c < fan.num_max_cones() && owner < 0; ++c) {
            const auto& mc = fan.max_cone(c);
            if (std::includes(mc.begin(), mc.end(), fc.ray_indices.begin(), fc.ray_indices.end()))
                owner = c;
        }
        assert(owner >= 0);
        // -sigma^v = {m : <m, r> <= 0 for rays r of sigma}.
        std::vector<LatticeVector> normals;
        for (int r : fc.ray_indices) normals.push_back(negate(fan.ray(r)));
        terms.push_back(ConeChain::Term{sign, RationalVector(h.slope(owner)),
                                        Cone::from_inequalities(n, normals)});
    }
    return ConeChain(n, std::move(terms));
}

bool chains_equal_extensional(const ConvexChain& a, const ConvexChain& b) {
    if (a.rank() != b.rank()) return false;
    const int n = a.rank();
    auto ba = chain_bounding_box(a), bb = chain_bounding_box(b);
    if (!ba && !bb) return true;
    std::vector<Int> lo(n), hi(n);
    if (ba && bb) {
        for (int i = 0; i < n; ++i) {
            lo[i] = std::min(ba->first[i], bb->first[i]) - 1;
            hi[i] = std::max(ba->second[i], bb->second[i]) + 1;
        }
    } else {
        const auto& one = ba ? *ba : *bb;
        for (int i = 0; i < n; ++i) {
            lo[i] = one.first[i] - 1;
            hi[i] = one.second[i] + 1;
        }
    }
    // Half-integer grid over the dilated box.
    std::vector<Rat> cur(n);
    bool equal = true;
    auto rec = [&](auto&& self, int i) -> void {
        if (!equal) return;
        if (i == n) {
            RationalVector x{std::vector<Rat>(cur)};
            if (a.evaluate(x) != b.evaluate(x)) equal = false;
            return;
        }
        for (Int k = 2 * lo[i]; k <= 2 * hi[i]; ++k) {
            cur[i] = Rat(k) / 2;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    if (!equal) return false;
    // Face-interior sample points (vertex averages of every face).
    auto probe_faces = [&](const ConvexChain& c) {
        for (const auto& t : c.terms()) {
            for (const auto& [face, d] : faces(t.polytope)) {
                (void)d;
                RationalVector avg = zero_rational(n);
                for (const auto& v : face.vertices()) avg = add(avg, v);
                avg = scale(Rat(1, static_cast<int>(face.vertices().size())), avg);
                if (a.evaluate(avg) != b.evaluate(avg)) { equal = false; return; }
            }
        }
    };
    probe_faces(a);
    if (equal) probe_faces(b);
    return equal;
}

}  // namespace tvb
