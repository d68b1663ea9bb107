#include "ccs/theorem_lab.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include <mpfr.h>

namespace ccs {

bool AuditReport::all_pass() const {
    for (const auto& row : rows)
        if (!row.ok()) return false;
    return true;
}

// --------------------------------------------------------------------------
// Directed-rounding evaluation of ln and exp at exact rational arguments.
// The result is returned as the exact rational value of the computed binary
// float, so subsequent comparisons stay exact.

namespace {

Rat mpfr_to_rat(mpfr_t v) {
    mpz_t z;
    mpz_init(z);
    mpfr_exp_t e = mpfr_get_z_2exp(z, v);
    char* str = mpz_get_str(nullptr, 10, z);
    BigInt mant(str);
    void (*freefn)(void*, std::size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(str, std::strlen(str) + 1);
    mpz_clear(z);
    Rat r(mant);
    if (e >= 0)
        r *= Rat(BigInt(1) << e);
    else
        r /= Rat(BigInt(1) << -e);
    return r;
}

void mpfr_set_rat(mpfr_t out, const Rat& q, mpfr_rnd_t rnd) {
    mpq_t mq;
    mpq_init(mq);
    std::ostringstream os;
    os << numerator(q) << '/' << denominator(q);
    mpq_set_str(mq, os.str().c_str(), 10);
    mpq_canonicalize(mq);
    mpfr_set_q(out, mq, rnd);
    mpq_clear(mq);
}

enum class Fn { log, exp };

// Monotone functions compose with directed rounding: round the argument and
// the function value in the same direction.
Rat eval_directed(Fn fn, const Rat& x, mpfr_rnd_t rnd, mpfr_prec_t prec) {
    mpfr_t v;
    mpfr_init2(v, prec);
    mpfr_set_rat(v, x, rnd);
    if (fn == Fn::log)
        mpfr_log(v, v, rnd);
    else
        mpfr_exp(v, v, rnd);
    Rat out = mpfr_to_rat(v);
    mpfr_clear(v);
    return out;
}

// 64 bits keep the reported exact value short; upward rounding stays valid
// at any precision.
Rat ln_upper(const Rat& x, mpfr_prec_t prec = 64) { return eval_directed(Fn::log, x, MPFR_RNDU, prec); }

// Certified comparison lhs <= e^y (y != 0 rational, so equality cannot occur).
bool leq_exp_certified(const Rat& lhs, const Rat& y) {
    for (mpfr_prec_t prec = 256; prec <= 65536; prec *= 4) {
        if (lhs <= eval_directed(Fn::exp, y, MPFR_RNDD, prec)) return true;
        if (lhs > eval_directed(Fn::exp, y, MPFR_RNDU, prec)) return false;
    }
    throw resource_error("leq_exp_certified: undecided at maximum precision");
}

// Certified comparison lhs >= e^y.
bool geq_exp_certified(const Rat& lhs, const Rat& y) {
    for (mpfr_prec_t prec = 256; prec <= 65536; prec *= 4) {
        if (lhs >= eval_directed(Fn::exp, y, MPFR_RNDU, prec)) return true;
        if (lhs < eval_directed(Fn::exp, y, MPFR_RNDD, prec)) return false;
    }
    throw resource_error("geq_exp_certified: undecided at maximum precision");
}

std::uint64_t to_u64(const BigInt& v, const char* what) {
    if (v < 0 || v > BigInt(std::numeric_limits<std::uint64_t>::max()))
        throw resource_error(std::string(what) + " does not fit in 64 bits");
    return v.convert_to<std::uint64_t>();
}

Rat rat_pow(const Rat& base, const BigInt& exp, std::uint64_t max_bits = 1u << 20) {
    std::uint64_t e = to_u64(exp, "exponent");
    return Rat(checked_pow(numerator(base), e, max_bits), checked_pow(denominator(base), e, max_bits));
}

void push_value(AuditRow& row, const std::string& name, const Rat& v) {
    row.values.emplace_back(name, rat_to_string(v));
}

void push_value(AuditRow& row, const std::string& name, const BigInt& v) {
    row.values.emplace_back(name, v.str());
}

}  // namespace

// --------------------------------------------------------------------------

ProofConstants derive_constants(const BigInt& r_f, const BigInt& f, const Rat& alpha_s,
                                const Rat& alpha_t, const Rat& beta, const BigInt& k,
                                std::uint64_t max_bits) {
    if (r_f < 1 || f < 1 || k < 1) throw input_error("derive_constants: r_f, f, k must be >= 1");
    if (alpha_s <= 0 || alpha_s >= 1 || alpha_t <= 0 || alpha_t >= 1)
        throw input_error("derive_constants: alpha_s, alpha_t must lie in (0,1)");
    if (beta <= 0 || beta > 1) throw input_error("derive_constants: beta must lie in (0,1]");

    ProofConstants c;
    c.r_f = r_f;
    c.f = f;
    c.k = k;
    c.alpha_s = alpha_s;
    c.alpha_t = alpha_t;
    c.beta = beta;

    const BigInt power = checked_pow(f, to_u64(f * r_f, "f*r_f"), max_bits);
    const Rat ln_term_up = ln_upper(Rat(1) / (Rat(1) - alpha_s));
    const Rat s_raw_up = ln_term_up * Rat(r_f) * Rat(power);

    // Round up to a multiple of r_f so m = s/r_f is an integer; rounding up
    // only strengthens the lower bound on s.
    c.s = ceil_rat(s_raw_up / Rat(r_f)) * r_f;
    if (c.s < r_f) c.s = r_f;
    c.m = c.s / r_f;

    const Rat t1 = Rat(c.s * c.s) / beta;
    const Rat t2 = Rat(f * c.s * f * c.s) / (Rat(k) * (Rat(1) - alpha_t));
    c.t = ceil_rat(std::max(t1, t2));

    AuditRow s_row;
    s_row.name = "s-lower-bound";
    s_row.statement = "s >= ln(1/(1-alpha_s)) * r_f * f^(f*r_f), s a multiple of r_f";
    push_value(s_row, "f^(f*r_f)", power);
    push_value(s_row, "ln-term-upper", ln_term_up);
    push_value(s_row, "s", c.s);
    push_value(s_row, "m", c.m);
    s_row.pass = Rat(c.s) >= s_raw_up && c.s % r_f == 0;
    c.derivation.push_back(s_row);

    AuditRow t_row;
    t_row.name = "t-lower-bound";
    t_row.statement = "t >= max(s^2/beta, (f*s)^2/(k*(1-alpha_t)))";
    push_value(t_row, "s^2/beta", t1);
    push_value(t_row, "(f*s)^2/(k*(1-alpha_t))", t2);
    push_value(t_row, "t", c.t);
    t_row.pass = Rat(c.t) >= t1 && Rat(c.t) >= t2;
    c.derivation.push_back(t_row);

    return c;
}

AuditRow vertex_disjoint_bound_audit(const BigInt& t, const BigInt& k, const BigInt& f,
                                     const BigInt& s) {
    if (t < 1 || k < 1 || f < 1 || s < 1)
        throw input_error("vertex_disjoint_bound_audit: parameters must be >= 1");
    const BigInt tk = t * k;
    const BigInt fs = f * s;
    if (tk < fs) throw input_error("vertex_disjoint_bound_audit: requires t*k >= f*s");

    // Choose the f subsets one after another; each must avoid everything
    // already used.
    Rat exact = 1;
    const BigInt denom = binomial(tk, s);
    for (BigInt i = 1; i < f; ++i) exact *= Rat(binomial(tk - i * s, s), denom);

    const Rat bound_power = rat_pow(Rat(tk - fs, tk), fs);
    const Rat bound_linear = Rat(1) - Rat(fs * fs, tk);

    AuditRow row;
    row.name = "vertex-disjoint-bound";
    row.statement = "P[f random s-subsets pairwise disjoint] >= (1-fs/tk)^(fs) >= 1-(fs)^2/tk";
    push_value(row, "exact", exact);
    push_value(row, "(1-fs/tk)^(fs)", bound_power);
    push_value(row, "1-(fs)^2/tk", bound_linear);
    row.pass = exact >= bound_power && bound_power >= bound_linear;
    return row;
}

AuditRow multinomial_bound_audit(const BigInt& f, const BigInt& r_f) {
    if (f < 1 || r_f < 1) throw input_error("multinomial_bound_audit: f, r_f must be >= 1");
    std::vector<BigInt> parts(to_u64(f, "f"), r_f);
    const Rat exact = Rat(1) / Rat(multinomial(parts));
    const Rat bound = Rat(1) / Rat(checked_pow(f, to_u64(f * r_f, "f*r_f")));

    AuditRow row;
    row.name = "multinomial-bound";
    row.statement = "C(f*r_f; r_f,...,r_f)^-1 >= f^(-f*r_f)";
    push_value(row, "multinomial-inverse", exact);
    push_value(row, "f^(-f*r_f)", bound);
    row.pass = exact >= bound;
    return row;
}

AuditRow success_chain_audit(const BigInt& f, const BigInt& r_f, const BigInt& m,
                             const Rat& alpha_s) {
    if (f < 1 || r_f < 1 || m < 1)
        throw input_error("success_chain_audit: f, r_f, m must be >= 1");
    if (alpha_s <= 0 || alpha_s >= 1)
        throw input_error("success_chain_audit: alpha_s must lie in (0,1)");

    const Rat x(BigInt(1), checked_pow(f, to_u64(f * r_f, "f*r_f")));
    const Rat lhs = Rat(1) - rat_pow(Rat(1) - x, m);
    const Rat exponent = -Rat(m) * x;

    // 1-(1-x)^m >= 1-e^{-mx}  <=>  (1-x)^m <= e^{-mx}
    const bool chain_ok = leq_exp_certified(rat_pow(Rat(1) - x, m), exponent);

    // The alpha_s leg applies once m >= ln(1/(1-alpha_s)) * f^(f*r_f).
    const Rat threshold_up = ln_upper(Rat(1) / (Rat(1) - alpha_s)) / x;
    const bool leg_applicable = Rat(m) >= threshold_up;
    bool leg_ok = false;
    if (leg_applicable)
        // 1-e^{-mx} >= alpha_s  <=>  1-alpha_s >= e^{-mx}
        leg_ok = geq_exp_certified(Rat(1) - alpha_s, exponent);

    AuditRow row;
    row.name = "success-chain";
    row.statement = "1-(1-f^(-f*r_f))^m >= 1-e^(-m*f^(-f*r_f)) [>= alpha_s when m >= threshold]";
    push_value(row, "x=f^(-f*r_f)", x);
    push_value(row, "1-(1-x)^m", lhs);
    push_value(row, "m-threshold-upper", threshold_up);
    row.values.emplace_back("alpha_s-leg",
                            !leg_applicable ? "not applicable" : (leg_ok ? "pass" : "fail"));
    row.pass = chain_ok && (!leg_applicable || leg_ok);
    return row;
}

bool density_condition(const BigInt& tk, const BigInt& s, const BigInt& k, const Rat& beta) {
    return Rat((k - 1) * s) < beta * Rat(tk - s + 1, s);
}

AuditRow density_matching_audit(const BigInt& tk, const BigInt& s, const BigInt& k,
                                const Rat& beta) {
    if (tk < s || s < 1 || k < 1) throw input_error("density_matching_audit: requires tk >= s >= 1, k >= 1");
    const bool binomial_form = Rat((k - 1) * s) * Rat(binomial(tk, s - 1)) < beta * Rat(binomial(tk, s));
    const bool reduced_form = density_condition(tk, s, k, beta);

    AuditRow row;
    row.name = "density-matching";
    row.statement = "(k-1)*s*C(tk,s-1) < beta*C(tk,s)  <=>  (k-1)s < beta(tk-s+1)/s";
    push_value(row, "(k-1)*s*C(tk,s-1)", Rat((k - 1) * s * binomial(tk, s - 1)));
    push_value(row, "beta*C(tk,s)", beta * Rat(binomial(tk, s)));
    row.values.emplace_back("condition-holds", binomial_form ? "true" : "false");
    row.pass = binomial_form == reduced_form;
    return row;
}

// --------------------------------------------------------------------------

namespace {

std::vector<Mask> subset_hulls(const ConvexitySpace& space, const PointConfig& p, int s,
                               SearchBudget* budget) {
    const int c = p.cardinality();
    if (s < 1 || s > c) throw input_error("lemma3: s must lie in 1..cardinality");
    std::vector<Mask> hulls;
    std::vector<int> combo(s);
    std::iota(combo.begin(), combo.end(), 0);
    while (true) {
        if (budget) budget->tick("lemma3");
        Mask pts = 0;
        for (int l : combo) pts |= Mask{1} << p.points[l];
        hulls.push_back(space.hull(pts));
        int i = s - 1;
        while (i >= 0 && combo[i] == c - (s - i)) --i;
        if (i < 0) break;
        ++combo[i];
        for (int j = i + 1; j < s; ++j) combo[j] = combo[j - 1] + 1;
    }
    return hulls;
}

void count_intersecting(const std::vector<Mask>& hulls, int f, std::size_t start, int depth,
                        Mask acc, SearchBudget* budget, BigInt& hits) {
    if (budget) budget->tick("lemma3");
    if (acc == 0) return;
    if (depth == f) {
        ++hits;
        return;
    }
    for (std::size_t i = start; i + (f - depth) <= hulls.size(); ++i)
        count_intersecting(hulls, f, i + 1, depth + 1, acc & hulls[i], budget, hits);
}

}  // namespace

Rat lemma3_exact(const ConvexitySpace& space, const PointConfig& p, int s, int f,
                 SearchBudget* budget) {
    if (f < 1) throw input_error("lemma3_exact: f must be >= 1");
    std::vector<Mask> hulls = subset_hulls(space, p, s, budget);
    if (static_cast<std::size_t>(f) > hulls.size())
        throw input_error("lemma3_exact: f exceeds the number of s-subsets");
    BigInt hits = 0;
    count_intersecting(hulls, f, 0, 0, space.universe(), budget, hits);
    return Rat(hits, binomial(BigInt(hulls.size()), f));
}

MonteCarloEstimate lemma3_monte_carlo(const ConvexitySpace& space, const PointConfig& p, int s,
                                      int f, std::uint64_t trials, std::uint64_t seed) {
    const int c = p.cardinality();
    if (s < 1 || s > c) throw input_error("lemma3_monte_carlo: s must lie in 1..cardinality");
    if (f < 1) throw input_error("lemma3_monte_carlo: f must be >= 1");
    if (trials < 1) throw input_error("lemma3_monte_carlo: trials must be >= 1");

    std::mt19937_64 rng(seed);
    std::vector<int> labels(c);
    std::iota(labels.begin(), labels.end(), 0);

    auto draw_subset = [&]() {
        // Partial Fisher-Yates: the first s entries become a uniform s-subset.
        for (int i = 0; i < s; ++i) {
            std::uniform_int_distribution<int> pick(i, c - 1);
            std::swap(labels[i], labels[pick(rng)]);
        }
        Mask label_mask = 0;
        for (int i = 0; i < s; ++i) label_mask |= Mask{1} << labels[i];
        return label_mask;
    };

    MonteCarloEstimate out;
    out.trials = trials;
    std::vector<Mask> tuple(f);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        for (int i = 0; i < f; ++i) {
            // f distinct positions = f distinct s-subsets of the labels.
            while (true) {
                tuple[i] = draw_subset();
                bool fresh = true;
                for (int j = 0; j < i; ++j) fresh = fresh && tuple[j] != tuple[i];
                if (fresh) break;
            }
        }
        Mask acc = space.universe();
        for (int i = 0; i < f && acc; ++i) {
            Mask pts = 0;
            for (int l : mask_to_indices(tuple[i])) pts |= Mask{1} << p.points[l];
            acc &= space.hull(pts);
        }
        if (acc) ++out.hits;
    }
    const double phat = static_cast<double>(out.hits) / static_cast<double>(trials);
    out.estimate = phat;
    out.radius95 = 1.96 * std::sqrt(phat * (1.0 - phat) / static_cast<double>(trials));
    return out;
}

TypePartition sample_type_partition(const std::vector<int>& labels, int f, int r_f,
                                    std::uint64_t seed) {
    if (f < 1 || r_f < 1) throw input_error("sample_type_partition: f, r_f must be >= 1");
    const std::size_t L = labels.size();
    if (L == 0 || L % static_cast<std::size_t>(f) != 0)
        throw input_error("sample_type_partition: label count must be f*s");
    const std::size_t s = L / f;
    if (s % static_cast<std::size_t>(r_f) != 0)
        throw input_error("sample_type_partition: s must be a multiple of r_f");
    const std::size_t m = s / r_f;
    const std::size_t group_size = static_cast<std::size_t>(f) * r_f;

    std::mt19937_64 rng(seed);
    std::vector<int> shuffled = labels;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);

    TypePartition tp;
    tp.f = f;
    tp.r_f = r_f;
    std::size_t pos = 0;
    for (std::size_t g = 0; g < m; ++g) {
        std::vector<std::vector<int>> blocks;
        for (int b = 0; b < f; ++b) {
            blocks.emplace_back(shuffled.begin() + pos, shuffled.begin() + pos + r_f);
            pos += r_f;
        }
        tp.groups.push_back(std::move(blocks));
    }
    return tp;
}

// --------------------------------------------------------------------------

void Hypergraph::check() const {
    if (vertices < 1 || vertices > kMaxGroundSize)
        throw input_error("hypergraph: vertex count out of range");
    if (uniformity < 1) throw input_error("hypergraph: uniformity must be >= 1");
    for (Mask e : edges) {
        if ((e & ~full_mask(vertices)) != 0) throw input_error("hypergraph: edge vertex out of range");
        if (popcount(e) != uniformity)
            throw input_error("hypergraph: edge " + mask_to_string(e) + " has wrong size");
    }
}

Rat Hypergraph::density() const {
    return Rat(BigInt(edges.size()), binomial(vertices, uniformity));
}

namespace {

bool matching_dfs(const Hypergraph& h, int k, std::size_t idx, Mask used, std::vector<int>& chosen,
                  SearchBudget* budget) {
    if (budget) budget->tick("find_k_disjoint_edges");
    if (static_cast<int>(chosen.size()) == k) return true;
    if (h.edges.size() - idx < static_cast<std::size_t>(k) - chosen.size()) return false;
    for (std::size_t i = idx; i < h.edges.size(); ++i) {
        if (h.edges[i] & used) continue;
        chosen.push_back(static_cast<int>(i));
        if (matching_dfs(h, k, i + 1, used | h.edges[i], chosen, budget)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_k_disjoint_edges(const Hypergraph& h, int k,
                                                      SearchBudget* budget) {
    h.check();
    if (k < 1) throw input_error("find_k_disjoint_edges: k must be >= 1");
    std::vector<int> chosen;
    if (matching_dfs(h, k, 0, 0, chosen, budget)) return chosen;
    return std::nullopt;
}

bool validate_matching(const Hypergraph& h, int k, const std::vector<int>& edge_indices) {
    if (static_cast<int>(edge_indices.size()) != k) return false;
    Mask used = 0;
    for (int idx : edge_indices) {
        if (idx < 0 || static_cast<std::size_t>(idx) >= h.edges.size()) return false;
        if (h.edges[idx] & used) return false;
        used |= h.edges[idx];
    }
    return true;
}

// --------------------------------------------------------------------------

namespace {

int ceil_log2(int k) { return k <= 1 ? 0 : std::bit_width(static_cast<unsigned>(k - 1)); }

}  // namespace

AuditReport recursion_audit(const std::map<int, int>& r_table, std::optional<int> h,
                            bool exhaustive) {
    if (!exhaustive) throw input_error("recursion_audit: table must be exhaustively computed");
    AuditReport report;
    const auto r_it = r_table.find(2);
    const std::optional<int> r = r_it == r_table.end() ? std::nullopt : std::optional(r_it->second);

    if (h && r) {
        AuditRow row;
        row.name = "levi";
        row.statement = "h <= r - 1";
        push_value(row, "h", BigInt(*h));
        push_value(row, "r", BigInt(*r));
        row.pass = *h <= *r - 1;
        report.rows.push_back(row);
    }

    for (const auto& [k, rk] : r_table) {
        for (const auto& [l, rl] : r_table) {
            auto prod = r_table.find(k * l);
            if (k < 2 || l < k || prod == r_table.end()) continue;
            AuditRow row;
            row.name = "jamison-product(k=" + std::to_string(k) + ",l=" + std::to_string(l) + ")";
            row.statement = "r_{kl} <= r_k * r_l";
            push_value(row, "r_{kl}", BigInt(prod->second));
            push_value(row, "r_k*r_l", BigInt(rk) * rl);
            row.pass = BigInt(prod->second) <= BigInt(rk) * rl;
            report.rows.push_back(row);
        }
    }

    if (r) {
        for (const auto& [k, rk] : r_table) {
            AuditRow row;
            row.name = "jamison-power(k=" + std::to_string(k) + ")";
            row.statement = "r_k <= r^ceil(log2 k)";
            const BigInt bound = checked_pow(BigInt(*r), ceil_log2(k));
            push_value(row, "r_k", BigInt(rk));
            push_value(row, "r^ceil(log2 k)", bound);
            row.pass = BigInt(rk) <= bound;
            report.rows.push_back(row);
        }
    }

    if (r) {
        for (const auto& [k, rk] : r_table) {
            if (k < 2) continue;
            auto top = r_table.find(2 * k + 1);
            auto mid = r_table.find(k + 1);
            if (top == r_table.end() || mid == r_table.end()) continue;
            AuditRow row;
            row.name = "eckhoff(k=" + std::to_string(k) + ")";
            row.statement = "r_{2k+1} <= (r-1)(r_{k+1}-1) + r_k + 1";
            const BigInt bound = BigInt(*r - 1) * (mid->second - 1) + rk + 1;
            push_value(row, "r_{2k+1}", BigInt(top->second));
            push_value(row, "bound", bound);
            row.pass = BigInt(top->second) <= bound;
            report.rows.push_back(row);
        }
    }

    // Informational only: Eckhoff's conjectured r_k <= (r-1)(k-1)+1 is false
    // in general (there is a space with r=4 and r_k >= 3k-1), so for r=4
    // tables we just report the observed gap.
    if (r && *r == 4) {
        for (const auto& [k, rk] : r_table) {
            AuditRow row;
            row.name = "bukh-gap(k=" + std::to_string(k) + ")";
            row.statement = "observed r_k vs 3k-1 (informational)";
            push_value(row, "r_k", BigInt(rk));
            push_value(row, "3k-1", BigInt(3) * k - 1);
            row.applicable = false;
            row.pass = true;
            report.rows.push_back(row);
        }
    }
    return report;
}

GrowthProbe linear_growth_probe(const ConvexitySpace& space, int k_max, int cap,
                                SearchBudget* budget) {
    if (k_max < 2) throw input_error("linear_growth_probe: k_max must be >= 2");
    GrowthProbe probe;
    for (int k = 2; k <= k_max; ++k) {
        RadonResult res = radon_number(space, k, RadonMode::multiset, cap, budget);
        if (!res.value) {
            if (k == 2) {
                probe.verdict = "Radon number does not exist up to cap " + std::to_string(cap) +
                                "; theorem precondition unmet";
                return probe;
            }
            probe.verdict = "partial table: r_" + std::to_string(k) + " not found up to cap";
            break;
        }
        probe.r_values[k] = *res.value;
        probe.ratios[k] = Rat(*res.value, k);
        if (!probe.max_ratio || probe.ratios[k] > *probe.max_ratio)
            probe.max_ratio = probe.ratios[k];
    }
    probe.r_exists = true;
    if (probe.verdict.empty())
        probe.verdict = "consistent with linear growth; max r_k/k = " + rat_to_string(*probe.max_ratio);
    return probe;
}

AuditReport space_audit(const ConvexitySpace& space, int k_max, int cap, SearchBudget* budget) {
    AuditReport report;

    std::map<int, int> restricted, multiset;
    for (int k = 2; k <= k_max; ++k) {
        RadonResult r1 = radon_number(space, k, RadonMode::restricted, cap, budget);
        RadonResult rm = radon_number(space, k, RadonMode::multiset, cap, budget);
        if (r1.value) restricted[k] = *r1.value;
        if (rm.value) multiset[k] = *rm.value;

        if (r1.value && rm.value) {
            AuditRow row;
            row.name = "sandwich(k=" + std::to_string(k) + ")";
            row.statement = "r_k^(1) <= r_k^(m) <= (k-1)(r_k^(1)-1)+1";
            push_value(row, "r_k^(1)", BigInt(*r1.value));
            push_value(row, "r_k^(m)", BigInt(*rm.value));
            push_value(row, "(k-1)(r_k^(1)-1)+1", BigInt(k - 1) * (*r1.value - 1) + 1);
            row.pass = *r1.value <= *rm.value &&
                       BigInt(*rm.value) <= BigInt(k - 1) * (*r1.value - 1) + 1;
            report.rows.push_back(row);
        }
    }

    HellyResult helly = helly_number(space, 0, budget);
    std::optional<int> h = helly.exact ? helly.value : std::nullopt;

    for (const auto& [mode, table] : {std::pair{"restricted", restricted}, {"multiset", multiset}}) {
        if (table.empty()) continue;
        AuditReport sub = recursion_audit(table, h, true);
        for (AuditRow row : sub.rows) {
            row.name = std::string(mode) + ":" + row.name;
            report.rows.push_back(std::move(row));
        }
    }

    GrowthProbe probe = linear_growth_probe(space, k_max, cap, budget);
    AuditRow growth;
    growth.name = "linear-growth-probe";
    growth.statement = "r_k/k across the computed table (reported, not asserted)";
    if (probe.max_ratio) push_value(growth, "max r_k/k", *probe.max_ratio);
    growth.values.emplace_back("verdict", probe.verdict);
    growth.applicable = false;
    growth.pass = true;
    report.rows.push_back(growth);

    return report;
}

}  // namespace ccs
