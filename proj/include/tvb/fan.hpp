#pragma once

#include "tvb/cone.hpp"
#include "tvb/polytope.hpp"

#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace tvb {

// A cone of a fan, identified by the fan ray indices spanning it.
struct FanCone {
    std::vector<int> ray_indices;  // sorted
    int dim = 0;
};

// A wall: codimension-one intersection of two maximal cones.
struct Wall {
    int cone_a = 0;
    int cone_b = 0;
    std::vector<int> common_rays;
};

// Complete rational polyhedral fan: primitive rays plus full-dimensional
// maximal cones, closed under faces. Immutable after construction.
class Fan {
public:
    static std::shared_ptr<const Fan> make(int rank, std::vector<LatticeVector> rays,
                                           std::vector<std::vector<int>> max_cones);

    int rank() const { return rank_; }
    const std::vector<LatticeVector>& rays() const { return rays_; }
    const LatticeVector& ray(int i) const { return rays_[i]; }
    int num_max_cones() const { return static_cast<int>(max_cone_rays_.size()); }
    const std::vector<int>& max_cone(int i) const { return max_cone_rays_[i]; }
    const Cone& max_cone_geometry(int i) const { return max_cone_geom_[i]; }
    // All cones of the fan, every dimension including {0}.
    const std::vector<FanCone>& all_cones() const { return all_cones_; }
    const std::vector<Wall>& walls() const { return walls_; }

    bool is_complete() const { return is_complete_; }
    // Set lazily by the piecewise-linear module; nullopt until decided.
    std::optional<bool> projective_hint() const { return projective_; }
    void set_projective_hint(bool v) const { projective_ = v; }

    // Index of the first maximal cone containing x; throws if none.
    int max_cone_containing(const RationalVector& x) const;
    bool supports(const RationalVector& x) const;

    int ray_index(const LatticeVector& v) const;  // -1 if absent
    Cone cone_from_face(const std::vector<int>& ray_indices) const;
    // Faces of maximal cone i of dimension rank()-1, as sorted ray indices.
    std::vector<std::vector<int>> facets_of_max_cone(int i) const;

    bool same_fan(const Fan& other) const;
    // Every maximal cone of this fan lies inside a maximal cone of `coarser`.
    bool refines(const Fan& coarser) const;

private:
    Fan() = default;
    void validate() const;
    void build_closure();

    int rank_ = 0;
    std::vector<LatticeVector> rays_;
    std::vector<std::vector<int>> max_cone_rays_;
    std::vector<Cone> max_cone_geom_;
    std::vector<FanCone> all_cones_;
    std::vector<std::vector<std::vector<int>>> max_cone_facets_;
    std::vector<Wall> walls_;
    bool is_complete_ = false;
    mutable std::optional<bool> projective_;
};

using FanPtr = std::shared_ptr<const Fan>;

// Normal fan of a full-dimensional polytope under the max convention:
// the maximal cone of a vertex v is where v attains h_p.
FanPtr normal_fan(const Polytope& p);

// P_D = {m : <m, v_rho> >= -a_rho} for per-ray integers a.
Polytope polytope_from_divisor(const Fan& f, const std::vector<Int>& a);

FanPtr common_refinement(const FanPtr& f1, const FanPtr& f2);
FanPtr stellar_subdivide(const FanPtr& f, const LatticeVector& ray);
// Refine every maximal cone crossed by the hyperplane <normal, x> = 0.
FanPtr refine_by_hyperplane(const FanPtr& f, const LatticeVector& normal);

}  // namespace tvb
