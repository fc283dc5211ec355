#include "tvb/ehrhart.hpp"

#include "tvb/bundle.hpp"

#include <cassert>
#include <stdexcept>

namespace tvb {

Rat EhrhartPolynomial::evaluate(const Rat& t) const {
    Rat s = 0, pw = 1;
    for (const Rat& c : coeffs) {
        s += c * pw;
        pw *= t;
    }
    return s;
}

Int EhrhartPolynomial::evaluate_integer(const Int& t) const {
    Rat v = evaluate(Rat(t));
    if (!is_integer(v)) throw std::runtime_error("Ehrhart value not integral");
    return rat_num(v);
}

Int ehrhart_count(const Polytope& p, const Int& t) {
    if (p.is_empty() || !p.is_lattice())
        throw std::invalid_argument("Ehrhart counting requires a nonempty lattice polytope");
    if (t < 1) throw std::invalid_argument("Ehrhart counting requires t >= 1");
    return static_cast<Int>(lattice_points(dilate(p, t)).size());
}

EhrhartPolynomial ehrhart_polynomial(const Polytope& p) {
    if (p.is_empty() || !p.is_lattice())
        throw std::invalid_argument("Ehrhart polynomial requires a nonempty lattice polytope");
    const int d = p.dim();
    // Newton forward differences on t = 0..d with L(0) = 1.
    std::vector<Rat> vals;
    vals.push_back(Rat(1));
    for (int t = 1; t <= d; ++t) vals.push_back(Rat(ehrhart_count(p, t)));
    std::vector<Rat> diffs = vals;  // diffs[k] becomes Delta^k at 0
    for (int k = 1; k <= d; ++k)
        for (int j = d; j >= k; --j) diffs[j] = diffs[j] - diffs[j - 1];

    // Expand sum_k diffs[k] * binom(t, k) into monomial coefficients.
    EhrhartPolynomial poly;
    poly.coeffs.assign(d + 1, Rat(0));
    std::vector<Rat> binom = {Rat(1)};  // binom(t,0) = 1
    for (int k = 0; k <= d; ++k) {
        for (size_t j = 0; j < binom.size(); ++j) poly.coeffs[j] += diffs[k] * binom[j];
        // binom(t, k+1) = binom(t, k) * (t - k) / (k + 1)
        std::vector<Rat> next(binom.size() + 1, Rat(0));
        for (size_t j = 0; j < binom.size(); ++j) {
            next[j + 1] += binom[j] / (k + 1);
            next[j] -= binom[j] * k / (k + 1);
        }
        binom = std::move(next);
    }
    while (poly.coeffs.size() > 1 && poly.coeffs.back() == 0) poly.coeffs.pop_back();
    for (int t = d + 1; t <= d + 2; ++t) {
        if (poly.evaluate_integer(Int(t)) != ehrhart_count(p, Int(t)))
            throw std::runtime_error("Ehrhart interpolation check failed at t = " +
                                     std::to_string(t));
    }
    assert(poly.coeffs[0] == 1);
    assert(poly.coeffs.back() > 0);
    return poly;
}

Int reciprocity_interior_count(const Polytope& p, const Int& t) {
    if (p.is_empty() || !p.is_lattice() || p.dim() != p.rank())
        throw std::invalid_argument("reciprocity requires a full-dimensional lattice polytope");
    if (t < 1) throw std::invalid_argument("reciprocity requires t >= 1");
    EhrhartPolynomial poly = ehrhart_polynomial(p);
    Int predicted = poly.evaluate_integer(-t);
    if (p.dim() % 2 == 1) predicted = -predicted;

    Polytope tp = dilate(p, t);
    Int direct = 0;
    auto [lo, hi] = tp.bounding_box();
    std::vector<Int> cur(p.rank());
    auto rec = [&](auto&& self, int i) -> void {
        if (i == p.rank()) {
            if (tp.contains_relint(RationalVector(LatticeVector(std::vector<Int>(cur))))) ++direct;
            return;
        }
        for (Int x = lo[i]; x <= hi[i]; ++x) {
            cur[i] = x;
            self(self, i + 1);
        }
    };
    rec(rec, 0);
    if (direct != predicted)
        throw std::runtime_error("Ehrhart reciprocity mismatch between polynomial and scan");
    return predicted;
}

bool serre_duality_check(const FanPtr& f, const std::vector<Int>& a) {
    if (!f->is_complete()) throw std::invalid_argument("Serre duality check requires a complete fan");
    const int n = f->rank();
    for (int c = 0; c < f->num_max_cones(); ++c) {
        const auto& mc = f->max_cone(c);
        if (static_cast<int>(mc.size()) != n)
            throw std::invalid_argument("fan is not smooth: non-simplicial maximal cone");
        QMat m;
        for (int r : mc) m.push_back(to_qrow(f->ray(r)));
        // |det| = 1 iff the rays are a lattice basis; test by integrality
        // of the inverse via solving for each unit vector.
        for (int i = 0; i < n; ++i) {
            QRow e(n, Rat(0));
            e[i] = 1;
            auto x = solve_linear(m, e);
            if (!x) throw std::invalid_argument("fan is not smooth: degenerate cone");
            for (const Rat& q : *x)
                if (!is_integer(q))
                    throw std::invalid_argument("fan is not smooth: rays are not a lattice basis");
        }
    }
    std::vector<Int> a_plus_k(a), minus_a(a);
    for (auto& x : a_plus_k) x -= 1;  // K_X = -sum D_rho
    for (auto& x : minus_a) x = -x;
    Int lhs = line_bundle(f, a_plus_k).euler_characteristic();
    Int rhs = line_bundle(f, minus_a).euler_characteristic();
    if (n % 2 == 1) rhs = -rhs;
    return lhs == rhs;
}

}  // namespace tvb
