#pragma once

#include "tvb/fan.hpp"
#include "tvb/polytope.hpp"

#include <vector>

namespace tvb {

// L_P(t) as exact rational coefficients, constant term first.
struct EhrhartPolynomial {
    std::vector<Rat> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    Rat evaluate(const Rat& t) const;
    Int evaluate_integer(const Int& t) const;
};

// |tP cap M| for a lattice polytope and t >= 1.
Int ehrhart_count(const Polytope& p, const Int& t);

// Degree-dim(P) interpolant through t = 0..dim(P), cross-checked at
// dim(P)+1 and dim(P)+2; throws when the counts are not polynomial.
EhrhartPolynomial ehrhart_polynomial(const Polytope& p);

// (-1)^dim L_P(-t), cross-checked against a direct interior scan.
Int reciprocity_interior_count(const Polytope& p, const Int& t);

// chi(O(D + K)) == (-1)^n chi(O(-D)) on a smooth complete fan, both sides
// through the rank-1 bundle path.
bool serre_duality_check(const FanPtr& f, const std::vector<Int>& a);

}  // namespace tvb
