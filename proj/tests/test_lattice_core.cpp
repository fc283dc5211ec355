#include "doctest.h"
#include "helpers.hpp"
#include "tvb/ehrhart.hpp"

#include <random>
#include <set>

using namespace tvb;
using namespace tvbtest;

namespace {

std::set<LatticeVector> ray_set(const std::vector<LatticeVector>& v) {
    return std::set<LatticeVector>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("dual cone: orthant is self-dual") {
    Cone c = Cone::from_rays(2, {lv({1, 0}), lv({0, 1})});
    Cone d = dual_cone(c);
    CHECK(ray_set(d.rays()) == ray_set({lv({1, 0}), lv({0, 1})}));
    CHECK(d.lineality().empty());
}

TEST_CASE("dual cone of the origin is the whole plane") {
    Cone zero = Cone::from_rays(2, {});
    CHECK(zero.dim() == 0);
    CHECK(zero.contains(lv({0, 0})));
    CHECK(!zero.contains(lv({1, 0})));
    Cone d = dual_cone(zero);
    CHECK(d.rays().empty());
    QMat lin;
    for (const auto& l : d.lineality()) lin.push_back(to_qrow(l));
    CHECK(rank_of(lin) == 2);  // spans N_R, i.e. generated by +-e1, +-e2
    CHECK(d.contains(lv({7, -3})));
}

TEST_CASE("dual cone of cone((1,0),(1,2)) against the sign-check oracle") {
    Cone c = Cone::from_rays(2, {lv({1, 0}), lv({1, 2})});
    Cone d = dual_cone(c);
    CHECK(ray_set(d.rays()) == ray_set({lv({0, 1}), lv({2, -1})}));
    // Oracle: membership in the dual is the sign condition on generators.
    for (long long x = -5; x <= 5; ++x)
        for (long long y = -5; y <= 5; ++y) {
            bool expect = x >= 0 && x + 2 * y >= 0;
            CHECK(d.contains(lv({x, y})) == expect);
        }
    // Extremality: each generator has a supporting generator of c vanishing on it.
    for (const auto& r : d.rays()) {
        bool tight = false;
        for (const auto& g : c.rays()) tight = tight || dot(r, g) == 0;
        CHECK(tight);
    }
}

TEST_CASE("dual of dual returns the cone") {
    std::vector<std::vector<LatticeVector>> gens = {
        {lv({1, 0}), lv({0, 1})},
        {lv({1, 0}), lv({1, 2})},
        {lv({2, -1}), lv({-1, 3})},
        {lv({1, 0, 0}), lv({0, 1, 0}), lv({0, 0, 1})},
        {lv({1, 0, 0}), lv({1, 2, 0}), lv({1, 0, 3}), lv({1, 2, 3})},
    };
    for (const auto& g : gens) {
        Cone c = Cone::from_rays(g[0].rank(), g);
        Cone dd = dual_cone(dual_cone(c));
        CHECK(ray_set(dd.rays()) == ray_set(c.rays()));
    }
}

TEST_CASE("minkowski sum identities") {
    Polytope p = poly_from({{0, 0}, {2, 1}, {1, 3}});
    Polytope origin = Polytope::point(rv({Rat(0), Rat(0)}));
    CHECK(minkowski_sum(p, origin) == p);

    Polytope sx = poly_from({{0, 0}, {1, 0}});
    Polytope sy = poly_from({{0, 0}, {0, 1}});
    CHECK(minkowski_sum(sx, sy) == unit_square());

    CHECK(minkowski_sum(simplex2(), simplex2()) == dilate(simplex2(), 2));
    CHECK_THROWS_AS(minkowski_sum(p, Polytope::point(rv({Rat(0)}))), std::invalid_argument);
}

TEST_CASE("minkowski sum is commutative and associative on random triples") {
    std::mt19937 rng(20240811);
    for (int iter = 0; iter < 8; ++iter) {
        int n = (iter % 2) ? 3 : 2;
        Polytope a = random_lattice_polytope(rng, n, 4, 3, 1);
        Polytope b = random_lattice_polytope(rng, n, 4, 3, 1);
        Polytope c = random_lattice_polytope(rng, n, 4, 3, 1);
        CHECK(minkowski_sum(a, b) == minkowski_sum(b, a));
        CHECK(minkowski_sum(minkowski_sum(a, b), c) == minkowski_sum(a, minkowski_sum(b, c)));
    }
}

TEST_CASE("lattice points") {
    auto pts = lattice_points(simplex2());
    REQUIRE(pts.size() == 3);
    CHECK(pts[0] == lv({0, 0}));
    CHECK(pts[1] == lv({0, 1}));
    CHECK(pts[2] == lv({1, 0}));  // lexicographic

    CHECK(lattice_points(dilate(simplex2(), 2)).size() == 6);  // binom(2+2,2)

    Polytope pt = poly_from({{3, -1}});
    auto single = lattice_points(pt);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == lv({3, -1}));

    CHECK(lattice_points(Polytope::empty(2)).empty());
}

TEST_CASE("faces of the unit square") {
    auto fs = faces(unit_square());
    int v = 0, e = 0, f = 0, alt = 0;
    for (const auto& [face, d] : fs) {
        if (d == 0) ++v;
        if (d == 1) ++e;
        if (d == 2) ++f;
        alt += (d % 2 == 0) ? 1 : -1;
    }
    CHECK(v == 4);
    CHECK(e == 4);
    CHECK(f == 1);
    CHECK(alt == 1);
}

TEST_CASE("faces of a point and of the 3-simplex") {
    auto pf = faces(poly_from({{2, 5}}));
    REQUIRE(pf.size() == 1);
    CHECK(pf[0].second == 0);

    // Oracle: every nonempty vertex subset of a simplex spans a face.
    auto fs = faces(simplex3());
    int count[4] = {0, 0, 0, 0};
    int alt = 0;
    for (const auto& [face, d] : fs) {
        ++count[d];
        alt += (d % 2 == 0) ? 1 : -1;
    }
    CHECK(count[0] == 4);
    CHECK(count[1] == 6);
    CHECK(count[2] == 4);
    CHECK(count[3] == 1);
    CHECK(alt == 1);
}

TEST_CASE("support function evaluation") {
    CHECK(support_function_eval(simplex2(), rv({Rat(1), Rat(1)})) == 1);
    Polytope pt = poly_from({{2, 3}});
    CHECK(support_function_eval(pt, rv({Rat(5), Rat(-1)})) == 7);

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-6, 6);
    Polytope p = poly_from({{0, 0}, {2, 0}, {0, 3}});
    Polytope q = poly_from({{-1, -1}, {1, 0}, {0, 2}, {2, 2}});
    Polytope s = minkowski_sum(p, q);
    for (int i = 0; i < 20; ++i) {
        RationalVector x = rv({Rat(d(rng)), Rat(d(rng))});
        CHECK(support_function_eval(s, x) ==
              support_function_eval(p, x) + support_function_eval(q, x));
    }
    // positive homogeneity
    for (int i = 0; i < 10; ++i) {
        RationalVector x = rv({Rat(d(rng)), Rat(d(rng))});
        Rat lambda(std::abs(d(rng)), 3);
        CHECK(support_function_eval(p, scale(lambda, x)) ==
              lambda * support_function_eval(p, x));
    }
}

TEST_CASE("normal fan of the simplex under the max convention") {
    auto nf = normal_fan(simplex2());
    CHECK(nf->is_complete());
    CHECK(nf->num_max_cones() == 3);
    CHECK(ray_set(nf->rays()) == ray_set({lv({-1, 0}), lv({0, -1}), lv({1, 1})}));
    // Oracle: h_P is linear on each maximal cone with slope a vertex.
    for (int c = 0; c < nf->num_max_cones(); ++c) {
        std::vector<RationalVector> samples;
        LatticeVector t = zero_lattice(2);
        for (int r : nf->max_cone(c)) {
            samples.push_back(RationalVector(nf->ray(r)));
            t = add(t, nf->ray(r));
        }
        samples.push_back(RationalVector(t));
        bool some_vertex_fits = false;
        for (const auto& v : simplex2().vertices()) {
            bool fits = true;
            for (const auto& x : samples)
                fits = fits && support_function_eval(simplex2(), x) == dot(v, x);
            some_vertex_fits = some_vertex_fits || fits;
        }
        CHECK(some_vertex_fits);
    }
    CHECK_THROWS_AS(normal_fan(poly_from({{0, 0}, {1, 0}})), std::invalid_argument);
}

TEST_CASE("normal fan of the square is the four quadrants") {
    auto nf = normal_fan(unit_square());
    CHECK(nf->num_max_cones() == 4);
    CHECK(ray_set(nf->rays()) ==
          ray_set({lv({1, 0}), lv({0, 1}), lv({-1, 0}), lv({0, -1})}));
}

TEST_CASE("normal fan of P_s equals the P^2 fan") {
    // P_s from the tangent-bundle example: support function h_s.
    Polytope ps = poly_from({{1, 1}, {1, -2}, {-2, 1}});
    auto nf = normal_fan(ps);
    auto p2 = p2_fan();
    CHECK(nf->refines(*p2));
    CHECK(p2->refines(*nf));
}

TEST_CASE("polytope from divisor data") {
    auto p2 = p2_fan();
    // Oracle: direct inequality enumeration over a box.
    Polytope p = polytope_from_divisor(*p2, {Int(1), Int(1), Int(1)});
    long long oracle = 0;
    for (long long x = -8; x <= 8; ++x)
        for (long long y = -8; y <= 8; ++y)
            if (x >= -1 && y >= -1 && -x - y >= -1) ++oracle;
    CHECK(oracle == 10);
    CHECK(lattice_points(p).size() == 10);

    Polytope origin_only = polytope_from_divisor(*p2, {Int(0), Int(0), Int(0)});
    CHECK(origin_only.dim() == 0);
    CHECK(origin_only.vertices().size() == 1);
    CHECK(origin_only.contains(lv({0, 0})));

    Polytope empty = polytope_from_divisor(*p2, {Int(-1), Int(0), Int(0)});
    CHECK(empty.is_empty());
    for (long long x = -8; x <= 8; ++x)
        for (long long y = -8; y <= 8; ++y)
            CHECK(!(x >= 1 && y >= 0 && -x - y >= 0));
}

TEST_CASE("common refinement") {
    auto p2 = p2_fan();
    CHECK(common_refinement(p2, p2)->same_fan(*p2));

    auto both = common_refinement(p1xp1_fan(), p2);
    CHECK(both->is_complete());
    CHECK(both->rays().size() == 5);
    CHECK(both->refines(*p2));
    CHECK(both->refines(*p1xp1_fan()));

    auto sub = stellar_subdivide(p2, lv({1, 1}));
    CHECK(common_refinement(p2, sub)->same_fan(*sub));
}

TEST_CASE("stellar subdivision") {
    auto p2 = p2_fan();
    auto sub = stellar_subdivide(p2, lv({1, 1}));
    CHECK(sub->num_max_cones() == 4);
    CHECK(sub->is_complete());
    CHECK(sub->refines(*p2));

    CHECK(stellar_subdivide(p2, lv({1, 0}))->same_fan(*p2));

    auto h = stellar_subdivide(hirzebruch_fan(), lv({1, 1}));
    CHECK(h->num_max_cones() == 5);
    CHECK(h->is_complete());

    CHECK_THROWS_AS(stellar_subdivide(p2, lv({2, 2})), std::invalid_argument);
}

TEST_CASE("fan validation and completeness flags") {
    CHECK(p2_fan()->is_complete());
    CHECK(p1xp1_fan()->is_complete());
    CHECK(hirzebruch_fan()->is_complete());
    auto orthant = Fan::make(2, {lv({1, 0}), lv({0, 1})}, {{0, 1}});
    CHECK(!orthant->is_complete());
    // Overlapping cones are not a fan.
    CHECK_THROWS_AS(Fan::make(2, {lv({1, 0}), lv({0, 1}), lv({1, 1}), lv({-1, -1}), lv({1, -1})},
                              {{0, 1}, {2, 3}, {3, 4}, {0, 4}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Fan::make(2, {lv({2, 0}), lv({0, 1})}, {{0, 1}}), std::invalid_argument);
}

TEST_CASE("dilation counts are polynomial (vanishing finite differences)") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 4; ++iter) {
        int n = (iter % 2) ? 3 : 2;
        Polytope p = random_lattice_polytope(rng, n, n + 2, 2, 1);
        int d = p.dim();
        std::vector<Int> counts;
        for (int t = 1; t <= d + 3 + d + 1; ++t) counts.push_back(ehrhart_count(p, Int(t)));
        // order-(d+1) differences starting at each t = 1..d+3 vanish
        for (int start = 0; start + d + 1 < static_cast<int>(counts.size()); ++start) {
            Int diff = 0;
            for (int k = 0; k <= d + 1; ++k) {
                Int binom = 1;
                for (int j = 0; j < k; ++j) binom = binom * (d + 1 - j) / (j + 1);
                Int term = binom * counts[start + d + 1 - k];
                diff += (k % 2 == 0) ? term : -term;
            }
            CHECK(diff == 0);
        }
    }
}
