#pragma once

#include "tvb/cone.hpp"
#include "tvb/geometry.hpp"

#include <utility>
#include <vector>

namespace tvb {

struct Halfspace {
    LatticeVector normal;
    Rat offset;  // <m, normal> <= offset

    bool operator==(const Halfspace&) const = default;
};

// Bounded convex rational polytope with both vertex and inequality
// descriptions. The empty polytope is a first-class value (dim == -1).
// For non-full-dimensional polytopes the affine hull is cut out by the
// equality list and the facet inequalities are relative to the hull.
class Polytope {
public:
    static Polytope empty(int rank);
    static Polytope from_points(int rank, std::vector<RationalVector> pts);
    static Polytope from_lattice_points(int rank, const std::vector<LatticeVector>& pts);
    // {m : <m, normal> <= offset for each}; throws on unbounded input.
    static Polytope from_inequalities(int rank, const std::vector<Halfspace>& ineqs);
    static Polytope point(const RationalVector& v);

    int rank() const { return rank_; }
    int dim() const { return dim_; }
    bool is_empty() const { return dim_ < 0; }
    bool is_lattice() const { return is_lattice_; }

    const std::vector<RationalVector>& vertices() const { return vertices_; }
    const std::vector<Halfspace>& facets() const { return facets_; }
    const std::vector<Halfspace>& equalities() const { return equalities_; }

    bool contains(const RationalVector& x) const;
    bool contains(const LatticeVector& x) const;
    // Relative interior membership.
    bool contains_relint(const RationalVector& x) const;

    // Componentwise integer bounds [lo, hi] enclosing the polytope.
    std::pair<std::vector<Int>, std::vector<Int>> bounding_box() const;

    bool operator==(const Polytope& other) const {
        return rank_ == other.rank_ && vertices_ == other.vertices_;
    }
    bool operator<(const Polytope& other) const { return vertices_ < other.vertices_; }

private:
    int rank_ = 0;
    int dim_ = -1;
    bool is_lattice_ = false;
    std::vector<RationalVector> vertices_;   // extremal points, sorted
    std::vector<Halfspace> facets_;
    std::vector<Halfspace> equalities_;
};

Polytope minkowski_sum(const Polytope& p, const Polytope& q);
Polytope dilate(const Polytope& p, const Int& t);
Polytope translate(const Polytope& p, const RationalVector& v);
// Central reflection through the origin.
Polytope sym(const Polytope& p);

// Integral points of p, sorted lexicographically.
std::vector<LatticeVector> lattice_points(const Polytope& p);

// All nonempty faces of p including p itself, each with its dimension.
std::vector<std::pair<Polytope, int>> faces(const Polytope& p);

// h_p(x) = max <v, x> over vertices; p must be nonempty.
Rat support_function_eval(const Polytope& p, const RationalVector& x);

}  // namespace tvb
