#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccs/invariants.hpp"
#include "ccs/rational.hpp"
#include "ccs/space.hpp"

namespace ccs {

// One audited inequality: symbolic statement, the exact instantiated values,
// and a verdict. Every comparison is made in exact rationals or with
// certified directed rounding; nothing passes on floating-point slack.
struct AuditRow {
    std::string name;
    std::string statement;
    std::vector<std::pair<std::string, std::string>> values;
    bool applicable = true;  // false = informational / precondition unmet
    bool pass = false;

    bool ok() const { return !applicable || pass; }
};

struct AuditReport {
    std::vector<AuditRow> rows;
    bool all_pass() const;
};

// The parameter bundle of the linear-growth proof: given r_f, f, the split
// alpha = alpha_s * alpha_t, beta and k, derive s (rounded up to a multiple
// of r_f so m = s/r_f is integral) and t. Exact big-integer arithmetic; the
// logarithm is evaluated with an upward-rounded bound so rounding can only
// enlarge s. Realistic full-scale parameters are astronomical; max_bits
// caps the intermediate magnitudes (resource_error beyond, reporting the
// log-space size instead).
struct ProofConstants {
    BigInt r_f, f, k;
    Rat alpha_s, alpha_t, beta;
    BigInt s, t, m;
    std::vector<AuditRow> derivation;

    Rat alpha() const { return alpha_s * alpha_t; }
};

ProofConstants derive_constants(const BigInt& r_f, const BigInt& f, const Rat& alpha_s,
                                const Rat& alpha_t, const Rat& beta, const BigInt& k,
                                std::uint64_t max_bits = 1u << 20);

// Exact probability that f independently uniform s-subsets of a tk-element
// label set are pairwise disjoint, against the bounds
// (1 - fs/tk)^{fs} and 1 - (fs)^2/tk.
AuditRow vertex_disjoint_bound_audit(const BigInt& t, const BigInt& k, const BigInt& f,
                                     const BigInt& s);

// C(f*r_f; r_f,...,r_f)^{-1} >= f^{-f*r_f}, exactly.
AuditRow multinomial_bound_audit(const BigInt& f, const BigInt& r_f);

// The chain 1-(1-f^{-f r_f})^m >= 1-e^{-m f^{-f r_f}} (>= alpha_s once m
// meets the derive_constants threshold). The exp side uses certified
// directed rounding; the alpha_s leg is marked not-applicable below the
// threshold.
AuditRow success_chain_audit(const BigInt& f, const BigInt& r_f, const BigInt& m,
                             const Rat& alpha_s);

// The reduced density condition (k-1)s < beta(tk-s+1)/s, evaluated exactly.
bool density_condition(const BigInt& tk, const BigInt& s, const BigInt& k, const Rat& beta);

// (k-1)*s*C(tk,s-1) < beta*C(tk,s), together with the reduced form
// (k-1)s < beta(tk-s+1)/s; the two verdicts are checked to agree.
AuditRow density_matching_audit(const BigInt& tk, const BigInt& s, const BigInt& k,
                                const Rat& beta);

// Exact fraction of unordered f-tuples of distinct s-element label subsets
// of p whose hulls share a point.
Rat lemma3_exact(const ConvexitySpace& space, const PointConfig& p, int s, int f,
                 SearchBudget* budget = nullptr);

struct MonteCarloEstimate {
    double estimate = 0;
    double radius95 = 0;  // normal-approximation 95% half-width
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
};

MonteCarloEstimate lemma3_monte_carlo(const ConvexitySpace& space, const PointConfig& p, int s,
                                      int f, std::uint64_t trials, std::uint64_t seed);

// Random partition of f*s labels into m groups of size f*r_f, each group
// split into f blocks of size r_f.
struct TypePartition {
    int f = 1, r_f = 1;
    // groups[i][j] = labels of block j of group i, j < f, |block| = r_f
    std::vector<std::vector<std::vector<int>>> groups;
};

TypePartition sample_type_partition(const std::vector<int>& labels, int f, int r_f,
                                    std::uint64_t seed);

struct Hypergraph {
    int vertices = 0;
    int uniformity = 0;
    std::vector<Mask> edges;  // multi-edges allowed, each of size `uniformity`

    void check() const;  // structural invariants
    Rat density() const;  // |edges| / C(vertices, uniformity)
};

// k pairwise vertex-disjoint edges (indices into h.edges), or nullopt when
// none exist. Exact backtracking; a budget overrun raises resource_error so
// "unknown" never masquerades as "none".
std::optional<std::vector<int>> find_k_disjoint_edges(const Hypergraph& h, int k,
                                                      SearchBudget* budget = nullptr);

bool validate_matching(const Hypergraph& h, int k, const std::vector<int>& edge_indices);

// Jamison / Eckhoff / Levi rows over an exhaustively computed r_k table,
// plus the informational Bukh gap row for spaces with r = 4.
AuditReport recursion_audit(const std::map<int, int>& r_table, std::optional<int> h,
                            bool exhaustive);

struct GrowthProbe {
    bool r_exists = false;
    std::map<int, int> r_values;           // k -> r_k (multiset)
    std::map<int, Rat> ratios;             // k -> r_k / k
    std::optional<Rat> max_ratio;
    std::string verdict;
};

GrowthProbe linear_growth_probe(const ConvexitySpace& space, int k_max, int cap,
                                SearchBudget* budget = nullptr);

// Full per-space audit: r_k tables in both modes for k = 2..k_max, the Helly
// number, the sandwich inequality, Levi, and the Jamison/Eckhoff recursions
// on both tables, plus an informational linear-growth row.
AuditReport space_audit(const ConvexitySpace& space, int k_max, int cap,
                        SearchBudget* budget = nullptr);

}  // namespace ccs
