#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ccs/bits.hpp"
#include "ccs/errors.hpp"

namespace ccs {

// The collection of convex sets: ascending-sorted, duplicate-free bitmasks.
// A valid family contains 0 (the empty set) and full_mask(n), and is closed
// under pairwise intersection.
struct ConvexityFamily {
    int n = 0;
    std::vector<Mask> sets;

    bool contains(Mask m) const;
    void canonicalize();  // sort + dedupe
};

struct AxiomCheck {
    std::string axiom;    // "contains-empty", "contains-full", "intersection-closed"
    bool pass = false;
    std::string witness;  // human-readable counterexample when failing
};

struct ValidationReport {
    bool pass = true;
    std::vector<AxiomCheck> checks;
};

ValidationReport validate(const ConvexityFamily& family);

// Smallest intersection-closed family containing the generators, the empty
// set and the full set. Throws resource_error if the closure would exceed
// max_sets (closure size is worst-case exponential in the generators).
ConvexityFamily intersection_closure(int n, const std::vector<Mask>& generators,
                                     std::size_t max_sets = 1'000'000);

// A finite convexity space with a hull oracle. Generator-backed kinds
// (free/chain/grid/product) answer hulls in closed form and materialize their
// explicit family only on demand; explicit spaces scan their family.
// Immutable after construction; hull() is pure and thread-safe.
class ConvexitySpace {
  public:
    static ConvexitySpace from_family(ConvexityFamily family);
    static ConvexitySpace free_space(int n);
    static ConvexitySpace chain_space(int n);
    static ConvexitySpace grid_space(int q, int d);
    static ConvexitySpace product_space(ConvexitySpace a, ConvexitySpace b);

    int size() const { return n_; }
    Mask universe() const { return full_mask(n_); }
    const std::string& kind() const { return kind_; }
    std::string describe() const;

    // conv(s): the minimal convex set containing s. hull(empty) = empty.
    Mask hull(Mask s) const;

    // The explicit family, materialized lazily. Throws resource_error if the
    // space cannot be materialized within max_sets.
    const ConvexityFamily& family(std::size_t max_sets = 1'000'000) const;
    bool family_materialized() const;

    // Grid metadata (kind()=="grid" only).
    int grid_q() const { return q_; }
    int grid_d() const { return d_; }

    // Row-major point index of 1-based grid coordinates and back.
    static int grid_index(int q, int d, const std::vector<int>& coords);
    static std::vector<int> grid_coords(int q, int d, int index);

  private:
    ConvexitySpace() = default;

    Mask hull_uncached(Mask s) const;
    ConvexityFamily materialize(std::size_t max_sets) const;

    std::string kind_;
    int n_ = 0;
    int q_ = 0, d_ = 0;                                 // grid
    std::vector<std::shared_ptr<ConvexitySpace>> factors_;  // product
    struct Cache;
    std::shared_ptr<Cache> cache_;                      // family + hull memo
};

// A multiset of ground-set points. Element "labels" are the positions
// 0..cardinality-1; coincident points still count as distinct labels.
// points is kept ascending, which is the canonical encoding used for
// witness tie-breaking.
struct PointConfig {
    int n = 0;
    std::vector<int> points;  // point index per label, ascending

    int cardinality() const { return static_cast<int>(points.size()); }
    Mask support() const;
    std::map<int, int> multiplicities() const;
    void canonicalize();

    // Lexicographic order on (cardinality, points); total order used for
    // "lexicographically smallest witness".
    bool operator<(const PointConfig& other) const;
    bool operator==(const PointConfig& other) const = default;
};

Mask hull_multiset(const ConvexitySpace& space, const PointConfig& p);

// The q*d axis-parallel hyperplanes of a grid space (exactly one coordinate
// fixed), ordered by coordinate then value.
std::vector<Mask> grid_hyperplane_family(const ConvexitySpace& space);

}  // namespace ccs
