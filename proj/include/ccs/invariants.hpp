#pragma once

#include <optional>
#include <vector>

#include "ccs/rational.hpp"
#include "ccs/space.hpp"

namespace ccs {

// A split of a PointConfig into k nonempty parts with intersecting hulls.
// Parts hold element labels (positions into config.points), so coincident
// points stay distinguishable.
struct KPartition {
    std::vector<std::vector<int>> parts;
    int common_point = -1;  // lies in the hull of every part
};

enum class RadonMode { restricted, multiset };

struct RadonResult {
    int k = 2;
    RadonMode mode = RadonMode::multiset;
    std::optional<int> value;
    int searched_up_to = 0;
    std::optional<PointConfig> lower_witness;  // size value-1, no k-partition
    bool exhaustive = false;
};

struct HellyResult {
    std::optional<int> value;
    std::vector<Mask> witness;  // minimal subfamily with empty intersection
    int searched_up_to = 0;
    bool exact = false;  // search completed below the cap
};

struct FractionalHellyProfile {
    int f = 1;
    int family_size = 0;
    Rat alpha_observed;  // intersecting f-tuples / C(family_size, f)
    Rat beta_best;       // best piercing fraction
    int best_point = -1;
};

// Exhaustive backtracking over the set partitions of the config labels into
// exactly k nonempty blocks; a partial partition dies as soon as the
// intersection of the completed blocks' hulls is empty.
std::optional<KPartition> find_k_partition(const ConvexitySpace& space, const PointConfig& p,
                                           int k, SearchBudget* budget = nullptr);

// Independent re-check of a claimed partition: disjoint label cover, all
// parts nonempty, common point inside each part's hull recomputed through the
// materialized explicit family (not the search's hull path).
bool validate_partition(const ConvexitySpace& space, const PointConfig& p, int k,
                        const KPartition& partition);

// Smallest m <= cap such that every configuration of cardinality m admits a
// k-partition with intersecting hulls. Restricted mode ranges over
// distinct-point sets, multiset mode over multisets up to multiplicity.
RadonResult radon_number(const ConvexitySpace& space, int k, RadonMode mode, int cap,
                         SearchBudget* budget = nullptr);

// Helly number: the maximum size of an inclusion-minimal subfamily of convex
// sets with empty intersection. Computed through Helly-independent point
// sets S (the leave-one-out hulls of S have empty intersection); the witness
// subfamily is rebuilt from the best S found.
HellyResult helly_number(const ConvexitySpace& space, int cap = 0,
                         SearchBudget* budget = nullptr);

// Exact profile of a (multi)family of convex sets at tuple arity f:
// the fraction of intersecting f-tuples of distinct positions, and the best
// piercing fraction with its witness point.
FractionalHellyProfile fractional_helly_profile(const ConvexitySpace& space,
                                                const std::vector<Mask>& family, int f,
                                                SearchBudget* budget = nullptr);

const char* radon_mode_name(RadonMode mode);
RadonMode radon_mode_from_name(const std::string& name);

}  // namespace ccs
