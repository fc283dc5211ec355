#pragma once

#include "tvb/geometry.hpp"

#include <vector>

namespace tvb {

// Rational polyhedral cone. Generators and facet normals are kept in sync:
// rays are primitive and extremal (taken orthogonal to the lineality space
// when there is one), and membership always tests against the inequality
// normals. Cones that contain lines carry explicit lineality generators.
class Cone {
public:
    // Cone spanned by the given rays ({0} when empty).
    static Cone from_rays(int rank, const std::vector<LatticeVector>& rays);
    // {x : <normal, x> >= 0 for every normal}.
    static Cone from_inequalities(int rank, const std::vector<LatticeVector>& normals);

    int rank() const { return rank_; }
    int dim() const;
    bool is_pointed() const { return lineality_.empty(); }

    const std::vector<LatticeVector>& rays() const { return rays_; }
    const std::vector<LatticeVector>& lineality() const { return lineality_; }
    const std::vector<LatticeVector>& inequality_normals() const { return ineqs_; }

    bool contains(const RationalVector& x) const;
    bool contains(const LatticeVector& x) const;
    // x satisfies all inequalities with equality somewhere on a facet list.
    std::vector<int> active_inequalities(const RationalVector& x) const;

    bool operator==(const Cone& other) const {
        return rank_ == other.rank_ && rays_ == other.rays_ && lineality_ == other.lineality_;
    }

private:
    Cone() = default;

    int rank_ = 0;
    std::vector<LatticeVector> rays_;
    std::vector<LatticeVector> lineality_;
    std::vector<LatticeVector> ineqs_;
};

Cone dual_cone(const Cone& c);
Cone intersect(const Cone& a, const Cone& b);

}  // namespace tvb
