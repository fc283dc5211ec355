#pragma once

#include "tvb/chain.hpp"
#include "tvb/fan.hpp"
#include "tvb/plfunction.hpp"
#include "tvb/subspace.hpp"

#include <map>
#include <mutex>
#include <optional>
#include <vector>

namespace tvb {

// Decreasing integer-indexed filtration of E = Q^r: the space of step k
// applies on (i_{k-1}, i_k], the first space is E, zero above the last
// threshold.
class Filtration {
public:
    struct Step {
        Int threshold;
        Subspace space;
    };

    Filtration(int ambient, std::vector<Step> steps);

    int ambient() const { return ambient_; }
    const std::vector<Step>& steps() const { return steps_; }
    std::vector<Int> thresholds() const;
    Subspace at(const Int& i) const;

private:
    int ambient_ = 0;
    std::vector<Step> steps_;
};

// Labeled flag of subspaces: values a_1 > ... > a_k with
// 0 = F_0 < F_1 < ... < F_k = E.
struct LabeledFlag {
    std::vector<Rat> values;        // descending
    std::vector<Subspace> spaces;   // k+1 entries, spaces[0] = 0
    // Branch multiset at the defining point: a_i repeated dim(F_i/F_{i-1}).
    std::vector<Rat> value_multiset() const;
};

// Klyachko data: complete fan plus one filtration per ray, with the
// per-maximal-cone character decomposition computed and re-verified at
// construction. Immutable afterwards.
class KlyachkoBundle {
public:
    struct ConeSplit {
        std::vector<LatticeVector> characters;  // one per line, sorted with lines
        std::vector<QRow> lines;                // independent vectors spanning E
    };

    KlyachkoBundle(FanPtr fan, int rank, std::vector<Filtration> filtration_per_ray);

    const FanPtr& fan() const { return fan_; }
    int rank() const { return rank_; }
    const Filtration& filtration(int ray) const { return filtrations_[ray]; }
    const ConeSplit& cone_split(int max_cone) const { return splits_[max_cone]; }

    // Character multiset of a maximal cone, sorted.
    std::vector<LatticeVector> characters(int max_cone) const;
    MultiSupportFunction support_function() const;
    const ConvexChain& bundle_chain() const;
    Int equivariant_euler(const LatticeVector& u) const;
    Int euler_characteristic() const;
    // Independent Cech-nerve alternating sum of weight-section dimensions.
    Int cech_euler_oracle(const LatticeVector& u) const;
    LabeledFlag flag_at(const RationalVector& x) const;

private:
    struct ChainCache {
        std::mutex mutex;
        std::optional<ConvexChain> chain;
    };

    void decompose();

    FanPtr fan_;
    int rank_ = 0;
    std::vector<Filtration> filtrations_;
    std::vector<ConeSplit> splits_;
    std::shared_ptr<ChainCache> cache_ = std::make_shared<ChainCache>();
};

// Rank-1 bundle of the invariant divisor sum a_rho D_rho.
KlyachkoBundle line_bundle(FanPtr fan, const std::vector<Int>& a);

// Pull the bundle back to a refinement: old rays keep their filtrations,
// new rays get the filtration induced by the containing cone's splitting.
KlyachkoBundle refine_pullback(const KlyachkoBundle& b, const FanPtr& refined);

}  // namespace tvb
