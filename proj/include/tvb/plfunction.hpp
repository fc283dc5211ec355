#pragma once

#include "tvb/fan.hpp"

#include <vector>

namespace tvb {

// Integral piecewise linear function on a complete fan: one linear slope
// u_sigma in M per maximal cone, agreeing across shared faces.
class PLFunction {
public:
    PLFunction(FanPtr fan, std::vector<LatticeVector> slopes);

    const FanPtr& fan() const { return fan_; }
    const std::vector<LatticeVector>& slopes() const { return slopes_; }
    const LatticeVector& slope(int max_cone) const { return slopes_[max_cone]; }

    Rat evaluate(const RationalVector& x) const;
    Int evaluate(const LatticeVector& x) const;
    // h(v_rho) for ray index i.
    Int ray_value(int i) const;

private:
    FanPtr fan_;
    std::vector<LatticeVector> slopes_;
};

PLFunction pl_zero(FanPtr fan);
PLFunction pl_linear(FanPtr fan, const LatticeVector& u);
PLFunction pl_add(const PLFunction& a, const PLFunction& b);   // same fan
PLFunction pl_scale(const Int& k, const PLFunction& a);
PLFunction pl_negate(const PLFunction& a);

bool is_convex(const PLFunction& h);
bool is_strictly_convex(const PLFunction& h);

// Strictly convex integral witness of projectivity; throws
// NonProjectiveFanError when none exists. Deterministic per fan.
PLFunction strictly_convex_witness(const FanPtr& fan);

struct ConvexSplit {
    PLFunction plus;   // h + c*g, convex
    PLFunction minus;  // c*g, convex
    Int c;             // minimal non-negative integer
};

// h = plus - minus with minus = c*g for the canonical witness g.
ConvexSplit convex_split(const PLFunction& h);
ConvexSplit convex_split(const PLFunction& h, const PLFunction& witness);

// Vertices of {m : <m,x> <= h(x) for all x} for convex h: the convex hull
// of the slopes. Requires is_convex(h).
Polytope polytope_of_convex(const PLFunction& h);

// PL function of divisor data under the max convention: h(v_rho) = a_rho,
// linear on each maximal cone; throws when the data is not Cartier.
PLFunction divisor_pl(const FanPtr& fan, const std::vector<Int>& a);

// Ordered branches h_1 <= ... <= h_r of a multi-valued support function,
// each linear on the cones of a common refinement.
class MultiSupportFunction {
public:
    // branches[i] lists the r functionals of maximal cone i.
    MultiSupportFunction(FanPtr fan, std::vector<std::vector<LatticeVector>> branches);

    const FanPtr& fan() const { return fan_; }
    int num_branches() const { return r_; }
    const std::vector<LatticeVector>& branches_on(int max_cone) const { return branches_[max_cone]; }

    // Multiset of branch values at x.
    std::vector<Rat> values(const RationalVector& x) const;

    struct Sorted {
        FanPtr refined;
        std::vector<PLFunction> h;  // h[0] <= ... <= h[r-1]
    };
    Sorted sorted_branches() const;

private:
    FanPtr fan_;
    int r_ = 0;
    std::vector<std::vector<LatticeVector>> branches_;
};

}  // namespace tvb
