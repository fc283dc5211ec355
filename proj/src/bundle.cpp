#include "tvb/bundle.hpp"

#include "tvb/errors.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>

namespace tvb {

Filtration::Filtration(int ambient, std::vector<Step> steps)
    : ambient_(ambient), steps_(std::move(steps)) {
    if (steps_.empty()) throw std::invalid_argument("filtration needs at least one step");
    if (steps_[0].space.dim() != ambient_)
        throw std::invalid_argument("filtration must start at the full space");
    for (size_t k = 0; k < steps_.size(); ++k) {
        if (steps_[k].space.ambient() != ambient_)
            throw std::invalid_argument("filtration space ambient mismatch");
        if (k > 0) {
            if (steps_[k].threshold <= steps_[k - 1].threshold)
                throw std::invalid_argument("filtration thresholds must increase strictly");
            if (!(steps_[k - 1].space.contains(steps_[k].space)) ||
                steps_[k].space.dim() >= steps_[k - 1].space.dim())
                throw std::invalid_argument("filtration spaces must decrease strictly");
        }
    }
}

std::vector<Int> Filtration::thresholds() const {
    std::vector<Int> out;
    for (const auto& s : steps_) out.push_back(s.threshold);
    return out;
}

Subspace Filtration::at(const Int& i) const {
    for (const auto& s : steps_)
        if (i <= s.threshold) return s.space;
    return Subspace::zero(ambient_);
}

std::vector<Rat> LabeledFlag::value_multiset() const {
    std::vector<Rat> out;
    for (size_t i = 1; i < spaces.size(); ++i) {
        int mult = spaces[i].dim() - spaces[i - 1].dim();
        for (int k = 0; k < mult; ++k) out.push_back(values[i - 1]);
    }
    return out;
}

KlyachkoBundle::KlyachkoBundle(FanPtr fan, int rank, std::vector<Filtration> filtration_per_ray)
    : fan_(std::move(fan)), rank_(rank), filtrations_(std::move(filtration_per_ray)) {
    if (!fan_->is_complete())
        throw std::invalid_argument("Klyachko data requires a complete fan");
    if (filtrations_.size() != fan_->rays().size())
        throw std::invalid_argument("one filtration per ray required");
    for (const auto& f : filtrations_)
        if (f.ambient() != rank_) throw std::invalid_argument("filtration ambient != bundle rank");
    decompose();
}

namespace {

struct Candidate {
    std::vector<Int> tuple;  // pairings in sorted-ray order, for ordering
    LatticeVector u;
    Subspace w;
};

// Greedy split along a fixed candidate order; returns lines or nothing.
std::optional<KlyachkoBundle::ConeSplit> greedy_split(const std::vector<Candidate>& order,
                                                      int rank) {
    Subspace span = Subspace::zero(rank);
    KlyachkoBundle::ConeSplit split;
    for (const auto& cand : order) {
        for (const auto& w : cand.w.basis()) {
            if (span.contains(w)) continue;
            span = sum(span, Subspace::span_of(w));
            split.characters.push_back(cand.u);
            split.lines.push_back(w);
        }
    }
    if (span.dim() != rank) return std::nullopt;
    return split;
}

// Eq. (1): E^rho(i) must equal the span of the lines whose character pairs
// >= i with v_rho, at every threshold and one past the last.
std::optional<std::string> verify_split(const KlyachkoBundle::ConeSplit& split,
                                        const std::vector<int>& cone_rays,
                                        const std::vector<LatticeVector>& rays,
                                        const std::vector<Filtration>& filts, int rank) {
    for (int r : cone_rays) {
        std::vector<Int> probes = filts[r].thresholds();
        probes.push_back(probes.back() + 1);
        for (const Int& i : probes) {
            QMat rows;
            for (size_t t = 0; t < split.lines.size(); ++t)
                if (dot(split.characters[t], rays[r]) >= i) rows.push_back(split.lines[t]);
            Subspace rhs = Subspace::from_rows(rank, std::move(rows));
            if (!(rhs == filts[r].at(i))) {
                std::ostringstream os;
                os << "ray " << r << " threshold " << i;
                return os.str();
            }
        }
    }
    return std::nullopt;
}

}  // namespace

void KlyachkoBundle::decompose() {
    const int n = fan_->rank();
    for (int c = 0; c < fan_->num_max_cones(); ++c) {
        const auto& cone_rays = fan_->max_cone(c);
        // Candidate characters from all tuples of filtration thresholds.
        std::vector<std::vector<Int>> threshold_lists;
        for (int r : cone_rays) threshold_lists.push_back(filtrations_[r].thresholds());
        std::vector<Candidate> cands;
        std::vector<size_t> pick(cone_rays.size(), 0);
        for (;;) {
            QMat sys;
            QRow rhs;
            std::vector<Int> tuple;
            for (size_t k = 0; k < cone_rays.size(); ++k) {
                sys.push_back(to_qrow(fan_->ray(cone_rays[k])));
                rhs.push_back(Rat(threshold_lists[k][pick[k]]));
                tuple.push_back(threshold_lists[k][pick[k]]);
            }
            auto sol = solve_linear(sys, rhs);
            if (sol) {
                // Residual check: the solve succeeds only on consistent
                // systems, and maximal cones span, so u is unique.
                RationalVector ru(*sol);
                if (ru.is_integral()) {
                    LatticeVector u = ru.to_lattice();
                    Subspace w = Subspace::full(rank_);
                    for (size_t k = 0; k < cone_rays.size(); ++k) {
                        int r = cone_rays[k];
                        w = intersect(w, filtrations_[r].at(dot(u, fan_->ray(r))));
                    }
                    if (w.dim() > 0) cands.push_back(Candidate{tuple, u, w});
                }
            }
            size_t k = 0;
            while (k < pick.size() && ++pick[k] == threshold_lists[k].size()) pick[k++] = 0;
            if (k == pick.size()) break;
        }
        std::sort(cands.begin(), cands.end(),
                  [](const Candidate& a, const Candidate& b) { return a.tuple > b.tuple; });

        std::optional<ConeSplit> chosen;
        std::string first_failure;
        auto attempt = [&](const std::vector<Candidate>& order) {
            auto split = greedy_split(order, rank_);
            if (!split) return false;
            auto bad = verify_split(*split, cone_rays, fan_->rays(), filtrations_, rank_);
            if (bad) {
                if (first_failure.empty()) first_failure = *bad;
                return false;
            }
            chosen = std::move(split);
            return true;
        };
        if (!attempt(cands)) {
            // Exhaustive fallback over candidate orders (desk scale).
            std::vector<int> perm(cands.size());
            for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
            long tries = 0;
            do {
                std::vector<Candidate> order;
                for (int i : perm) order.push_back(cands[i]);
                if (attempt(order)) break;
            } while (++tries < 100000 && std::next_permutation(perm.begin(), perm.end()));
        }
        if (!chosen) {
            std::ostringstream os;
            os << "maximal cone " << c;
            if (!first_failure.empty()) os << ": Eq.(1) fails at " << first_failure;
            throw IncompatibleBundleError("incompatible Klyachko filtrations", os.str());
        }
        splits_.push_back(std::move(*chosen));
    }
}

std::vector<LatticeVector> KlyachkoBundle::characters(int max_cone) const {
    std::vector<LatticeVector> out = splits_[max_cone].characters;
    std::sort(out.begin(), out.end());
    return out;
}

MultiSupportFunction KlyachkoBundle::support_function() const {
    std::vector<std::vector<LatticeVector>> branches;
    for (int c = 0; c < fan_->num_max_cones(); ++c) branches.push_back(characters(c));
    return MultiSupportFunction(fan_, std::move(branches));
}

const ConvexChain& KlyachkoBundle::bundle_chain() const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    if (cache_->chain) return *cache_->chain;
    auto sorted = support_function().sorted_branches();
    std::optional<PLFunction> witness;
    ConvexChain alpha(fan_->rank());
    for (const auto& h : sorted.h) {
        ConvexSplit split = [&] {
            if (is_convex(h)) return convex_split(h);
            if (!witness) witness = strictly_convex_witness(sorted.refined);
            return convex_split(h, *witness);
        }();
        alpha = add(alpha, virtual_polytope_chain(polytope_of_convex(split.plus),
                                                  polytope_of_convex(split.minus)));
    }
    cache_->chain = std::move(alpha);
    return *cache_->chain;
}

Int KlyachkoBundle::equivariant_euler(const LatticeVector& u) const {
    return bundle_chain().evaluate(u);
}

Int KlyachkoBundle::euler_characteristic() const { return lattice_sum(bundle_chain()); }

Int KlyachkoBundle::cech_euler_oracle(const LatticeVector& u) const {
    const int k = fan_->num_max_cones();
    if (k > 20) throw std::invalid_argument("too many maximal cones for the nerve oracle");
    Int chi = 0;
    for (unsigned mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> common;
        bool first = true;
        for (int c = 0; c < k; ++c) {
            if (!(mask & (1u << c))) continue;
            const auto& mc = fan_->max_cone(c);
            if (first) {
                common = mc;
                first = false;
            } else {
                std::vector<int> next;
                std::set_intersection(common.begin(), common.end(), mc.begin(), mc.end(),
                                      std::back_inserter(next));
                common = std::move(next);
            }
        }
        Subspace w = Subspace::full(rank_);
        for (int r : common) w = intersect(w, filtrations_[r].at(dot(u, fan_->ray(r))));
        int bits = __builtin_popcount(mask);
        Int term = w.dim();
        chi += (bits % 2 == 1) ? term : -term;
    }
    return chi;
}

LabeledFlag KlyachkoBundle::flag_at(const RationalVector& x) const {
    int c = fan_->max_cone_containing(x);
    const ConeSplit& split = splits_[c];
    std::vector<Rat> vals;
    for (const auto& u : split.characters) vals.push_back(dot(x, u));
    std::vector<Rat> distinct = vals;
    std::sort(distinct.begin(), distinct.end(), std::greater<Rat>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    LabeledFlag flag;
    flag.values = distinct;
    flag.spaces.push_back(Subspace::zero(rank_));
    for (const Rat& a : distinct) {
        QMat rows;
        for (size_t t = 0; t < split.lines.size(); ++t)
            if (vals[t] >= a) rows.push_back(split.lines[t]);
        flag.spaces.push_back(Subspace::from_rows(rank_, std::move(rows)));
    }
    return flag;
}

KlyachkoBundle line_bundle(FanPtr fan, const std::vector<Int>& a) {
    if (a.size() != fan->rays().size())
        throw std::invalid_argument("one divisor coefficient per ray required");
    std::vector<Filtration> filts;
    for (const Int& ai : a)
        filts.push_back(Filtration(1, {Filtration::Step{ai, Subspace::full(1)}}));
    return KlyachkoBundle(std::move(fan), 1, std::move(filts));
}

KlyachkoBundle refine_pullback(const KlyachkoBundle& b, const FanPtr& refined) {
    if (!refined->refines(*b.fan()))
        throw std::invalid_argument("pull-back target does not refine the bundle fan");
    std::vector<Filtration> filts;
    for (const auto& ray : refined->rays()) {
        int old = b.fan()->ray_index(ray);
        if (old >= 0) {
            filts.push_back(b.filtration(old));
            continue;
        }
        int c = b.fan()->max_cone_containing(RationalVector(ray));
        const auto& split = b.cone_split(c);
        std::vector<Int> pairings;
        for (const auto& u : split.characters) pairings.push_back(dot(u, ray));
        std::vector<Int> distinct = pairings;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        std::vector<Filtration::Step> steps;
        for (const Int& v : distinct) {
            QMat rows;
            for (size_t t = 0; t < split.lines.size(); ++t)
                if (pairings[t] >= v) rows.push_back(split.lines[t]);
            steps.push_back(Filtration::Step{v, Subspace::from_rows(b.rank(), std::move(rows))});
        }
        filts.push_back(Filtration(b.rank(), std::move(steps)));
    }
    return KlyachkoBundle(refined, b.rank(), std::move(filts));
}

}  // namespace tvb
