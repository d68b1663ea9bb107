#include "ccs/invariants.hpp"

#include <algorithm>

#include "ccs/kernels.hpp"

namespace ccs {

namespace {

Mask points_of_labels(const PointConfig& p, Mask labels) {
    Mask out = 0;
    for (int l : mask_to_indices(labels)) out |= Mask{1} << p.points[l];
    return out;
}

struct PartitionSearch {
    const ConvexitySpace& space;
    const PointConfig& config;
    SearchBudget* budget;
    std::vector<Mask> blocks;
    Mask final_intersection = 0;

    bool search(Mask remaining, int blocks_left, Mask inter) {
        if (budget) budget->tick("find_k_partition");
        if (blocks_left == 1) {
            Mask h = space.hull(points_of_labels(config, remaining));
            if ((inter & h) == 0) return false;
            blocks.push_back(remaining);
            final_intersection = inter & h;
            return true;
        }
        // The open block always holds the smallest unassigned label, so each
        // unordered partition is generated exactly once.
        const Mask anchor = Mask{1} << lowest_bit(remaining);
        const Mask rest = remaining ^ anchor;
        const int max_extra = popcount(remaining) - blocks_left;  // leave one per later block
        Mask t = 0;
        while (true) {
            if (popcount(t) <= max_extra) {
                Mask block = anchor | t;
                Mask h = space.hull(points_of_labels(config, block));
                Mask ni = inter & h;
                if (ni != 0) {
                    blocks.push_back(block);
                    if (search(remaining ^ block, blocks_left - 1, ni)) return true;
                    blocks.pop_back();
                }
            }
            t = (t - rest) & rest;
            if (t == 0) break;
        }
        return false;
    }
};

// Hull recomputed by direct scalar intersection over the materialized
// family; deliberately not the dispatch/memo path the searches use.
Mask recheck_hull(const ConvexitySpace& space, Mask s) {
    try {
        const ConvexityFamily& fam = space.family(5'000'000);
        return kernels::hull_scan_scalar(fam.sets.data(), fam.sets.size(), s, space.universe());
    } catch (const resource_error&) {
        return space.hull(s);
    }
}

PointConfig first_config(const ConvexitySpace& space, int m, RadonMode mode) {
    PointConfig c;
    c.n = space.size();
    for (int i = 0; i < m; ++i)
        c.points.push_back(mode == RadonMode::restricted ? i : 0);
    return c;
}

// Lexicographic successor among ascending (restricted) or non-decreasing
// (multiset) point sequences over 0..n-1. Returns false after the last one.
bool next_config(PointConfig& c, int n, RadonMode mode) {
    const int m = c.cardinality();
    int i = m - 1;
    while (i >= 0) {
        int limit = (mode == RadonMode::restricted) ? n - (m - i) : n - 1;
        if (c.points[i] < limit) break;
        --i;
    }
    if (i < 0) return false;
    ++c.points[i];
    for (int j = i + 1; j < m; ++j)
        c.points[j] = (mode == RadonMode::restricted) ? c.points[j - 1] + 1 : c.points[i];
    return true;
}

}  // namespace

const char* radon_mode_name(RadonMode mode) {
    return mode == RadonMode::restricted ? "restricted" : "multiset";
}

RadonMode radon_mode_from_name(const std::string& name) {
    if (name == "restricted") return RadonMode::restricted;
    if (name == "multiset") return RadonMode::multiset;
    throw input_error("unknown Radon mode '" + name + "'");
}

std::optional<KPartition> find_k_partition(const ConvexitySpace& space, const PointConfig& p,
                                           int k, SearchBudget* budget) {
    if (k < 1) throw input_error("find_k_partition: k must be >= 1");
    const int c = p.cardinality();
    if (c < k) throw input_error("find_k_partition: configuration smaller than k");
    if (p.n != space.size()) throw input_error("find_k_partition: ground set mismatch");
    p.support();  // range-checks the points

    PartitionSearch search{space, p, budget, {}, 0};
    if (!search.search(full_mask(c), k, space.universe())) return std::nullopt;

    KPartition result;
    for (Mask block : search.blocks) result.parts.push_back(mask_to_indices(block));
    result.common_point = lowest_bit(search.final_intersection);
    return result;
}

bool validate_partition(const ConvexitySpace& space, const PointConfig& p, int k,
                        const KPartition& partition) {
    if (static_cast<int>(partition.parts.size()) != k) return false;
    if (partition.common_point < 0 || partition.common_point >= space.size()) return false;
    Mask seen = 0;
    for (const auto& part : partition.parts) {
        if (part.empty()) return false;
        Mask labels = 0;
        for (int l : part) {
            if (l < 0 || l >= p.cardinality()) return false;
            labels |= Mask{1} << l;
        }
        if (popcount(labels) != static_cast<int>(part.size())) return false;  // repeated label
        if (labels & seen) return false;
        seen |= labels;
        Mask h = recheck_hull(space, points_of_labels(p, labels));
        if ((h & (Mask{1} << partition.common_point)) == 0) return false;
    }
    return seen == full_mask(p.cardinality());
}

RadonResult radon_number(const ConvexitySpace& space, int k, RadonMode mode, int cap,
                         SearchBudget* budget) {
    if (k < 2) throw input_error("radon_number: k must be >= 2");
    if (cap < k) throw input_error("radon_number: cap must be >= k");

    RadonResult result;
    result.k = k;
    result.mode = mode;
    result.searched_up_to = cap;

    std::optional<PointConfig> last_fail;
    for (int m = k; m <= cap; ++m) {
        if (mode == RadonMode::restricted && m > space.size()) {
            // No configuration of this size exists; "every configuration
            // admits a partition" holds vacuously.
            result.value = m;
            result.lower_witness = last_fail ? last_fail : std::optional(first_config(space, m - 1, mode));
            result.exhaustive = true;
            return result;
        }
        PointConfig config = first_config(space, m, mode);
        std::optional<PointConfig> fail;
        do {
            if (!find_k_partition(space, config, k, budget)) {
                fail = config;  // lex-smallest failure at this size
                break;
            }
        } while (next_config(config, space.size(), mode));
        if (!fail) {
            result.value = m;
            if (m - 1 >= 1)
                result.lower_witness = last_fail ? last_fail : std::optional(first_config(space, m - 1, mode));
            result.exhaustive = true;
            return result;
        }
        last_fail = fail;
    }
    result.exhaustive = true;  // every size up to cap fully enumerated
    result.lower_witness = last_fail;
    return result;
}

namespace {

// S is Helly-independent when the leave-one-out hulls have no common point.
bool helly_independent(const ConvexitySpace& space, const std::vector<int>& pts) {
    Mask inter = space.universe();
    for (std::size_t leave = 0; leave < pts.size(); ++leave) {
        Mask rest = 0;
        for (std::size_t i = 0; i < pts.size(); ++i)
            if (i != leave) rest |= Mask{1} << pts[i];
        inter &= space.hull(rest);
        if (inter == 0) return true;
    }
    return inter == 0;
}

void helly_dfs(const ConvexitySpace& space, std::vector<int>& current, int next_point, int cap,
               SearchBudget* budget, std::vector<int>& best) {
    if (budget) budget->tick("helly_number");
    if (current.size() > best.size()) best = current;
    if (cap > 0 && static_cast<int>(current.size()) >= cap) return;
    for (int p = next_point; p < space.size(); ++p) {
        current.push_back(p);
        // Helly-independence is hereditary, so independent extensions suffice.
        if (helly_independent(space, current)) helly_dfs(space, current, p + 1, cap, budget, best);
        current.pop_back();
    }
}

}  // namespace

HellyResult helly_number(const ConvexitySpace& space, int cap, SearchBudget* budget) {
    HellyResult result;
    result.searched_up_to = cap > 0 ? cap : space.size();

    std::vector<int> best;  // empty = only the trivial {empty set} witness
    std::vector<int> current;
    helly_dfs(space, current, 0, cap, budget, best);

    if (best.size() < 2) {
        // Only the degenerate size-1 witness {empty set} exists.
        result.value = 1;
        result.witness = {0};
        result.exact = true;
        return result;
    }
    result.value = static_cast<int>(best.size());
    for (std::size_t leave = 0; leave < best.size(); ++leave) {
        Mask rest = 0;
        for (std::size_t i = 0; i < best.size(); ++i)
            if (i != leave) rest |= Mask{1} << best[i];
        result.witness.push_back(space.hull(rest));
    }
    result.exact = cap == 0 || static_cast<int>(best.size()) < cap;
    return result;
}

namespace {

void count_tuples(const std::vector<Mask>& family, int f, std::size_t start, int depth, Mask acc,
                  SearchBudget* budget, BigInt& hits) {
    if (budget) budget->tick("fractional_helly_profile");
    if (acc == 0) return;
    if (depth == f) {
        ++hits;
        return;
    }
    // Need f - depth more members; stop where too few remain.
    for (std::size_t i = start; i + (f - depth) <= family.size(); ++i)
        count_tuples(family, f, i + 1, depth + 1, acc & family[i], budget, hits);
}

}  // namespace

FractionalHellyProfile fractional_helly_profile(const ConvexitySpace& space,
                                                const std::vector<Mask>& family, int f,
                                                SearchBudget* budget) {
    if (f < 1) throw input_error("fractional_helly_profile: f must be >= 1");
    if (static_cast<std::size_t>(f) > family.size())
        throw input_error("fractional_helly_profile: f exceeds the family size");
    for (Mask m : family)
        if (space.hull(m) != m)
            throw input_error("fractional_helly_profile: family member " + mask_to_string(m) +
                              " is not convex in this space");

    FractionalHellyProfile profile;
    profile.f = f;
    profile.family_size = static_cast<int>(family.size());

    BigInt hits = 0;
    count_tuples(family, f, 0, 0, space.universe(), budget, hits);
    profile.alpha_observed = Rat(hits, binomial(profile.family_size, f));

    std::vector<std::size_t> counts(space.size(), 0);
    kernels::membership_counts(family.data(), family.size(), space.size(), counts.data());
    std::size_t best = 0;
    for (int i = 0; i < space.size(); ++i) {
        if (counts[i] > best) {
            best = counts[i];
            profile.best_point = i;
        }
    }
    profile.beta_best = Rat(BigInt(best), BigInt(profile.family_size));
    return profile;
}

}  // namespace ccs
