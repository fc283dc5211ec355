#include "doctest.h"
#include "helpers.hpp"
#include "tvb/errors.hpp"

#include <random>

using namespace tvb;
using namespace tvbtest;

namespace {

ConvexChain ind(const Polytope& p) { return ConvexChain::indicator(p); }

ConvexChain unit_chain(int rank) {
    return ind(Polytope::point(RationalVector(zero_lattice(rank))));
}

bool equal_on_box(const ConvexChain& a, const ConvexChain& b, long long r) {
    for (long long x = -r; x <= r; ++x)
        for (long long y = -r; y <= r; ++y)
            if (a.evaluate(lv({x, y})) != b.evaluate(lv({x, y}))) return false;
    return true;
}

bool conechain_matches(const ConeChain& cc, const ConvexChain& a, long long r) {
    for (long long x = -r; x <= r; ++x)
        for (long long y = -r; y <= r; ++y) {
            LatticeVector u = lv({x, y});
            if (cc.evaluate(u) != a.evaluate(u)) return false;
        }
    return true;
}

ConvexChain random_chain(std::mt19937& rng, int rank, int terms) {
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::vector<ConvexChain::Term> ts;
    for (int i = 0; i < terms; ++i)
        ts.push_back({Int(coeff(rng)), random_lattice_polytope(rng, rank, 4, 3, 0)});
    return ConvexChain(rank, std::move(ts));
}

}  // namespace

TEST_CASE("chain evaluation basics") {
    Polytope p = poly_from({{0, 0}, {2, 0}, {0, 2}});
    ConvexChain c = ind(p);
    for (const auto& v : p.vertices()) CHECK(c.evaluate(v) == 1);
    ConvexChain zero = add(c, scale(Int(-1), c));
    CHECK(zero.is_zero_chain());
    CHECK(zero.evaluate(lv({1, 1})) == 0);
    CHECK(add(c, c).evaluate(lv({0, 0})) == 2);
}

TEST_CASE("star product: unit element and dilation") {
    Polytope p = poly_from({{0, 0}, {1, 2}, {3, 1}});
    ConvexChain a = ind(p);
    CHECK(chains_equal_extensional(star_product(a, unit_chain(2)), a));
    CHECK(chains_equal_extensional(star_product(ind(simplex2()), ind(simplex2())),
                                   ind(dilate(simplex2(), 2))));
}

TEST_CASE("degree is a unital ring map") {
    std::mt19937 rng(555);
    CHECK(degree(unit_chain(2)) == 1);
    for (int i = 0; i < 6; ++i) {
        ConvexChain a = random_chain(rng, 2, 3);
        ConvexChain b = random_chain(rng, 2, 2);
        CHECK(degree(add(a, b)) == degree(a) + degree(b));
        CHECK(degree(star_product(a, b)) == degree(a) * degree(b));
    }
}

TEST_CASE("invert_indicator: point, segment, Minkowski inversion") {
    Polytope origin = Polytope::point(RationalVector(zero_lattice(2)));
    CHECK(chains_equal_extensional(invert_indicator(origin), unit_chain(2)));

    Polytope seg = poly_from({{0, 0}, {1, 0}});
    ConvexChain inv = invert_indicator(seg);
    // 1_{(-1,0)} + 1_{(0,0)} - 1_{segment[(-1,0),(0,0)]}, which as a
    // function is -1 on the open reflected segment and 0 elsewhere.
    REQUIRE(inv.terms().size() == 3);
    for (const auto& t : inv.terms())
        CHECK(t.coeff == ((t.polytope.dim() == 0) ? 1 : -1));
    CHECK(inv.evaluate(rv({Rat(-1), Rat(0)})) == 0);
    CHECK(inv.evaluate(rv({Rat(0), Rat(0)})) == 0);
    CHECK(inv.evaluate(rv({Rat(-1, 2), Rat(0)})) == -1);
    ConvexChain prod = star_product(inv, ind(seg));
    CHECK(equal_on_box(prod, unit_chain(2), 3));
    CHECK(degree(inv) == 1);
}

TEST_CASE("Minkowski inversion on random lattice polytopes") {
    std::mt19937 rng(808);
    for (int iter = 0; iter < 6; ++iter) {
        int n = (iter % 2) ? 3 : 2;
        Polytope p = random_lattice_polytope(rng, n, 4, 2, 0);
        ConvexChain inv = invert_indicator(p);
        CHECK(degree(inv) == 1);
        ConvexChain prod = star_product(inv, ind(p));
        ConvexChain unit = unit_chain(n);
        auto box = chain_bounding_box(prod);
        REQUIRE(box);
        std::vector<Int> cur(n);
        bool ok = true;
        auto rec = [&](auto&& self, int i) -> void {
            if (i == n) {
                LatticeVector u{std::vector<Int>(cur)};
                ok = ok && prod.evaluate(u) == unit.evaluate(u);
                return;
            }
            for (Int x = box->first[i] - 1; x <= box->second[i] + 1; ++x) {
                cur[i] = x;
                self(self, i + 1);
            }
        };
        rec(rec, 0);
        CHECK(ok);
    }
}

TEST_CASE("virtual polytope chains") {
    Polytope p = poly_from({{0, 0}, {2, 1}, {1, 2}});
    CHECK(chains_equal_extensional(
        virtual_polytope_chain(p, Polytope::point(RationalVector(zero_lattice(2)))), ind(p)));
    CHECK(chains_equal_extensional(virtual_polytope_chain(p, p), unit_chain(2)));
}

TEST_CASE("the tangent-bundle chain alpha = alpha_1 + 1_{P_2} matches the figure") {
    Polytope ps = poly_from({{1, 1}, {1, -2}, {-2, 1}});
    Polytope p2 = poly_from({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
    ConvexChain alpha1 = virtual_polytope_chain(ps, p2);
    ConvexChain alpha = add(alpha1, ind(p2));
    CHECK(alpha.evaluate(lv({0, 0})) == 2);
    for (auto [x, y] : {std::pair<long long, long long>{-1, 1}, {-1, 0}, {0, 1},
                        {0, -1}, {1, 0}, {1, -1}})
        CHECK(alpha.evaluate(lv({x, y})) == 1);
    // alpha_1 itself: 1 at the origin, 0 at the six dots (they lie in P_2).
    CHECK(alpha1.evaluate(lv({0, 0})) == 1);
    CHECK(alpha1.evaluate(lv({1, 0})) == 0);
    Int total = 0;
    for (long long x = -4; x <= 4; ++x)
        for (long long y = -4; y <= 4; ++y) total += alpha.evaluate(lv({x, y}));
    CHECK(total == 8);
    CHECK(lattice_sum(alpha) == 8);
}

TEST_CASE("interior chain") {
    Polytope pt = poly_from({{4, -2}});
    CHECK(chains_equal_extensional(interior_chain(pt), ind(pt)));

    ConvexChain ic = interior_chain(simplex2());
    CHECK(ic.evaluate(rv({Rat(1, 3), Rat(1, 3)})) == 1);   // (+1)^2 * interior
    CHECK(ic.evaluate(rv({Rat(0), Rat(0)})) == 0);
    CHECK(ic.evaluate(rv({Rat(1, 2), Rat(0)})) == 0);      // boundary edge

    // 2*simplex has no interior lattice points; L_P(-1) = 2 - 3 + 1 = 0.
    CHECK(lattice_sum(interior_chain(dilate(simplex2(), 2))) == 0);

    Polytope seg = poly_from({{0, 0}, {3, 0}});
    ConvexChain ics = interior_chain(seg);
    CHECK(ics.evaluate(rv({Rat(1), Rat(0)})) == -1);       // (-1)^1 on the open segment
    CHECK(ics.evaluate(rv({Rat(0), Rat(0)})) == 0);
}

TEST_CASE("lattice sums") {
    CHECK(lattice_sum(ind(simplex2())) == 3);
    ConvexChain a = ind(poly_from({{0, 0}, {2, 0}, {0, 2}}));
    CHECK(lattice_sum(add(a, scale(Int(-1), a))) == 0);
    // Shift equivariance.
    std::mt19937 rng(17);
    for (int i = 0; i < 4; ++i) {
        ConvexChain c = random_chain(rng, 2, 3);
        std::vector<ConvexChain::Term> shifted;
        for (const auto& t : c.terms())
            shifted.push_back({t.coeff, translate(t.polytope, rv({Rat(2), Rat(-5)}))});
        CHECK(lattice_sum(c) == lattice_sum(ConvexChain(2, shifted)));
    }
}

TEST_CASE("Brianchon-Gram of a genuine support function is the indicator") {
    Polytope p = simplex2();
    auto nf = normal_fan(p);
    std::vector<LatticeVector> slopes;
    for (int c = 0; c < nf->num_max_cones(); ++c) {
        LatticeVector t = zero_lattice(2);
        for (int r : nf->max_cone(c)) t = add(t, nf->ray(r));
        LatticeVector best;
        bool first = true;
        for (const auto& v : p.vertices())
            if (first || dot(RationalVector(t), v) > dot(RationalVector(t), RationalVector(best))) {
                best = v.to_lattice();
                first = false;
            }
        slopes.push_back(best);
    }
    ConeChain cc = brianchon_gram(PLFunction(nf, slopes));
    CHECK(cc.evaluate(lv({0, 0})) == 1);
    CHECK(cc.evaluate(lv({1, 0})) == 1);
    CHECK(cc.evaluate(lv({0, 1})) == 1);
    CHECK(cc.evaluate(lv({2, 2})) == 0);
    CHECK(conechain_matches(cc, ind(p), 3));
}

TEST_CASE("Brianchon-Gram of a linear function is a point indicator") {
    auto fan = p2_fan();
    LatticeVector u = lv({2, -1});
    ConeChain cc = brianchon_gram(pl_linear(fan, u));
    for (long long x = -4; x <= 4; ++x)
        for (long long y = -4; y <= 4; ++y)
            CHECK(cc.evaluate(lv({x, y})) == ((x == 2 && y == -1) ? 1 : 0));
}

TEST_CASE("Brianchon-Gram of h_1 equals the virtual polytope chain") {
    MultiSupportFunction msf(p2_fan(), {{lv({-1, 0}), lv({-1, 1})},
                                        {lv({1, -1}), lv({0, -1})},
                                        {lv({1, 0}), lv({0, 1})}});
    auto sorted = msf.sorted_branches();
    ConeChain bg = brianchon_gram(sorted.h[0]);
    Polytope ps = poly_from({{1, 1}, {1, -2}, {-2, 1}});
    Polytope p2 = poly_from({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}});
    ConvexChain vc = virtual_polytope_chain(ps, p2);
    CHECK(conechain_matches(bg, vc, 4));
}

TEST_CASE("Brianchon-Gram matches convex_split virtual chains for divisor data") {
    std::mt19937 rng(2718);
    std::uniform_int_distribution<int> d(-2, 3);
    for (auto fan : {p2_fan(), hirzebruch_fan()}) {
        for (int iter = 0; iter < 4; ++iter) {
            std::vector<Int> a;
            for (size_t r = 0; r < fan->rays().size(); ++r) a.push_back(Int(d(rng)));
            PLFunction h = [&] {
                try {
                    return divisor_pl(fan, a);
                } catch (const std::invalid_argument&) {
                    return pl_zero(fan);  // non-Cartier draw; use 0 instead
                }
            }();
            ConvexSplit split = convex_split(h);
            ConvexChain vc = virtual_polytope_chain(polytope_of_convex(split.plus),
                                                    polytope_of_convex(split.minus));
            CHECK(conechain_matches(brianchon_gram(h), vc, 6));
        }
    }
}

TEST_CASE("ring axioms hold pointwise on sampled chains") {
    std::mt19937 rng(1234);
    for (int iter = 0; iter < 3; ++iter) {
        ConvexChain a = random_chain(rng, 2, 2);
        ConvexChain b = random_chain(rng, 2, 2);
        ConvexChain c = random_chain(rng, 2, 2);
        CHECK(equal_on_box(star_product(a, b), star_product(b, a), 6));
        CHECK(equal_on_box(star_product(star_product(a, b), c),
                           star_product(a, star_product(b, c)), 6));
        CHECK(equal_on_box(star_product(a, add(b, c)),
                           add(star_product(a, b), star_product(a, c)), 6));
    }
}

TEST_CASE("chain constructor rejects bad terms and merges duplicates") {
    CHECK_THROWS_AS(ConvexChain(2, {{Int(1), Polytope::empty(2)}}), std::invalid_argument);
    ConvexChain merged(2, {{Int(2), simplex2()}, {Int(-2), simplex2()}});
    CHECK(merged.is_zero_chain());
}
