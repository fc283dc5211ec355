#pragma once

#include "tvb/bundle.hpp"
#include "tvb/chain.hpp"
#include "tvb/fan.hpp"
#include "tvb/plfunction.hpp"
#include "tvb/polytope.hpp"

#include <random>
#include <string>
#include <vector>

namespace tvbtest {

using namespace tvb;

inline LatticeVector lv(std::vector<long long> v) {
    std::vector<Int> c(v.begin(), v.end());
    return LatticeVector(std::move(c));
}

inline RationalVector rv(std::vector<Rat> v) { return RationalVector(std::move(v)); }

inline Polytope poly_from(std::vector<std::vector<long long>> pts) {
    std::vector<RationalVector> q;
    for (auto& p : pts) q.push_back(RationalVector(lv(p)));
    return Polytope::from_points(static_cast<int>(pts.at(0).size()), std::move(q));
}

inline Polytope simplex2() { return poly_from({{0, 0}, {1, 0}, {0, 1}}); }
inline Polytope unit_square() { return poly_from({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
inline Polytope simplex3() { return poly_from({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

inline Polytope standard_simplex(int n) {
    std::vector<RationalVector> pts;
    pts.push_back(RationalVector(zero_lattice(n)));
    for (int i = 0; i < n; ++i) pts.push_back(RationalVector(unit_lattice(n, i)));
    return Polytope::from_points(n, std::move(pts));
}

// Fan of P^2 with the paper's cone order sigma_1, sigma_2, sigma_3.
inline FanPtr p2_fan() {
    return Fan::make(2, {lv({1, 0}), lv({0, 1}), lv({-1, -1})}, {{1, 2}, {0, 2}, {0, 1}});
}

inline FanPtr p1xp1_fan() {
    return Fan::make(2, {lv({1, 0}), lv({0, 1}), lv({-1, 0}), lv({0, -1})},
                     {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

// First Hirzebruch surface, cones sigma_12, sigma_23, sigma_34, sigma_41.
inline FanPtr hirzebruch_fan() {
    return Fan::make(2, {lv({1, 0}), lv({0, 1}), lv({-1, 1}), lv({0, -1})},
                     {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline Subspace line_span(std::vector<long long> v) {
    QMat m = {to_qrow(lv(v))};
    return Subspace::from_rows(static_cast<int>(v.size()), std::move(m));
}

// Tangent-bundle-style filtration: E until base, a line on (base, base+1].
inline Filtration tangent_filtration(const LatticeVector& line, const Int& base) {
    QMat m = {to_qrow(line)};
    return Filtration(2, {Filtration::Step{base, Subspace::full(2)},
                          Filtration::Step{base + 1, Subspace::from_rows(2, std::move(m))}});
}

inline KlyachkoBundle tangent_p2_bundle() {
    auto fan = p2_fan();
    std::vector<Filtration> filts;
    for (const auto& r : fan->rays()) filts.push_back(tangent_filtration(r, Int(0)));
    return KlyachkoBundle(fan, 2, std::move(filts));
}

inline KlyachkoBundle hirzebruch_bundle() {
    auto fan = hirzebruch_fan();
    auto full = Subspace::full(2);
    std::vector<Filtration> filts;
    filts.push_back(Filtration(2, {{Int(-2), full}, {Int(4), line_span({1, 0})}}));
    filts.push_back(Filtration(2, {{Int(2), full}, {Int(3), line_span({1, 0})}}));
    filts.push_back(Filtration(2, {{Int(0), full}, {Int(5), line_span({0, 1})}}));
    filts.push_back(Filtration(2, {{Int(-1), full}, {Int(3), line_span({1, 1})}}));
    return KlyachkoBundle(fan, 2, std::move(filts));
}

// Direct sum of line bundles sharing the standard basis: column j carries
// the divisor a_list[j].
inline KlyachkoBundle direct_sum_bundle(FanPtr fan, const std::vector<std::vector<Int>>& a_list) {
    const int r = static_cast<int>(a_list.size());
    std::vector<Filtration> filts;
    for (size_t rho = 0; rho < fan->rays().size(); ++rho) {
        std::vector<Int> vals;
        for (int j = 0; j < r; ++j) vals.push_back(a_list[j][rho]);
        std::vector<Int> distinct = vals;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<Filtration::Step> steps;
        for (const Int& v : distinct) {
            QMat rows;
            for (int j = 0; j < r; ++j) {
                if (vals[j] >= v) {
                    QRow e(r, Rat(0));
                    e[j] = 1;
                    rows.push_back(std::move(e));
                }
            }
            steps.push_back(Filtration::Step{v, Subspace::from_rows(r, std::move(rows))});
        }
        filts.push_back(Filtration(r, std::move(steps)));
    }
    return KlyachkoBundle(std::move(fan), r, std::move(filts));
}

// Random lattice polytope spanned by `npts` points with coordinates in
// [-bound, bound]; resamples until the dimension is at least `min_dim`.
inline Polytope random_lattice_polytope(std::mt19937& rng, int rank, int npts, int bound,
                                        int min_dim) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    for (;;) {
        std::vector<RationalVector> pts;
        for (int i = 0; i < npts; ++i) {
            std::vector<Int> c;
            for (int j = 0; j < rank; ++j) c.push_back(Int(dist(rng)));
            pts.push_back(RationalVector(LatticeVector(std::move(c))));
        }
        Polytope p = Polytope::from_points(rank, std::move(pts));
        if (p.dim() >= min_dim) return p;
    }
}

inline std::string fixture(const std::string& name) {
    return std::string(TVB_FIXTURE_DIR) + "/" + name;
}

}  // namespace tvbtest
