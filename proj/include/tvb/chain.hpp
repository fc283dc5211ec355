#pragma once

#include "tvb/plfunction.hpp"
#include "tvb/polytope.hpp"

#include <vector>

namespace tvb {

// Integer combination of indicator functions of nonempty polytopes.
// The term list is merged by polytope but equality of chains is always
// extensional (pointwise), never term-by-term.
class ConvexChain {
public:
    struct Term {
        Int coeff;
        Polytope polytope;
    };

    explicit ConvexChain(int rank) : rank_(rank) {}
    ConvexChain(int rank, std::vector<Term> terms);
    static ConvexChain indicator(const Polytope& p);

    int rank() const { return rank_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero_chain() const { return terms_.empty(); }

    Int evaluate(const RationalVector& x) const;
    Int evaluate(const LatticeVector& x) const;

private:
    int rank_ = 0;
    std::vector<Term> terms_;
};

ConvexChain add(const ConvexChain& a, const ConvexChain& b);
ConvexChain scale(const Int& k, const ConvexChain& a);
ConvexChain star_product(const ConvexChain& a, const ConvexChain& b);

// (1_p)^{-1} = sum over faces of Sym p of (-1)^dim indicators.
ConvexChain invert_indicator(const Polytope& p);
// 1_p * (1_q)^{-1}, the chain of the virtual polytope p - q.
ConvexChain virtual_polytope_chain(const Polytope& p, const Polytope& q);
// (-1)^{dim p} * indicator of the relative interior, as a face sum.
ConvexChain interior_chain(const Polytope& p);

Int degree(const ConvexChain& a);
// Sum of values over all lattice points (support is bounded).
Int lattice_sum(const ConvexChain& a);

// Integer bounding box of the union of the terms' polytopes; nullopt for
// the zero chain.
std::optional<std::pair<std::vector<Int>, std::vector<Int>>> chain_bounding_box(
    const ConvexChain& a);

// Alternating sum of indicators of shifted tangent cones, one per fan
// cone. Evaluation only; the support is unbounded cone by cone.
class ConeChain {
public:
    struct Term {
        Int coeff;
        RationalVector apex;
        Cone cone;  // apex + cone, membership by facet normals
    };

    ConeChain(int rank, std::vector<Term> terms) : rank_(rank), terms_(std::move(terms)) {}

    int rank() const { return rank_; }
    const std::vector<Term>& terms() const { return terms_; }
    Int evaluate(const RationalVector& x) const;
    Int evaluate(const LatticeVector& x) const;

private:
    int rank_;
    std::vector<Term> terms_;
};

// Brianchon-Gram decomposition of a PL function h on a complete fan:
// sum over all cones sigma of (-1)^{codim sigma} 1_{u_sigma + (-sigma^v)}.
// For h = h_P of a genuine polytope this evaluates to 1_P.
ConeChain brianchon_gram(const PLFunction& h);

// Extensional equality on lattice points, half-integer points of the
// joint bounding box (dilated by one) and face-interior sample points.
bool chains_equal_extensional(const ConvexChain& a, const ConvexChain& b);

}  // namespace tvb
