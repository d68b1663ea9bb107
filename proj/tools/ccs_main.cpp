// Command-line front end for finite convexity space computations:
// validation, hulls, Radon/Tverberg and Helly numbers, fractional Helly
// profiles, proof-constant derivation and the bound audits.
//
// Exit codes: 0 computed/pass, 1 negative result/fail, 2 input error,
// 3 budget exhausted.

#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ccs/invariants.hpp"
#include "ccs/kernels.hpp"
#include "ccs/report_io.hpp"
#include "ccs/space_io.hpp"
#include "ccs/theorem_lab.hpp"

using nlohmann::json;

namespace {

constexpr std::uint64_t kDefaultBudget = 0;  // 0 = unlimited
constexpr int kDefaultRadonCap = 12;

struct Options {
    std::string format = "human";
    std::uint64_t budget = kDefaultBudget;
};

ccs::ConvexitySpace load_space(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return ccs::space_from_json(json::parse(arg));
    return ccs::space_from_file(arg);
}

void emit(const Options& opt, const json& machine, const std::string& human) {
    if (opt.format == "json")
        std::cout << machine.dump() << "\n";
    else
        std::cout << human;
}

ccs::PointConfig make_config(const ccs::ConvexitySpace& space, const std::string& points_text) {
    ccs::PointConfig config;
    config.n = space.size();
    config.points = ccs::parse_points(space, points_text);
    config.canonicalize();
    return config;
}

int cmd_validate(const Options& opt, const std::string& space_arg) {
    ccs::ConvexitySpace space = load_space(space_arg);
    ccs::ValidationReport report = ccs::validate(space.family(5'000'000));
    json checks = json::array();
    std::string human;
    for (const auto& check : report.checks) {
        checks.push_back({{"axiom", check.axiom}, {"pass", check.pass}, {"witness", check.witness}});
        human += (check.pass ? "PASS " : "FAIL ") + check.axiom +
                 (check.witness.empty() ? "" : "  " + check.witness) + "\n";
    }
    emit(opt, json{{"schema", ccs::kSchemaVersion}, {"pass", report.pass}, {"checks", checks}}, human);
    return report.pass ? 0 : 1;
}

int cmd_hull(const Options& opt, const std::string& space_arg, const std::string& points_text) {
    ccs::ConvexitySpace space = load_space(space_arg);
    ccs::PointConfig config = make_config(space, points_text);
    ccs::Mask h = ccs::hull_multiset(space, config);
    emit(opt, json{{"schema", ccs::kSchemaVersion}, {"hull", ccs::mask_to_indices(h)}},
         ccs::mask_to_string(h) + "\n");
    return 0;
}

int cmd_radon(const Options& opt, const std::string& space_arg, int k, const std::string& mode,
              int cap, const std::string& witness_path) {
    ccs::ConvexitySpace space = load_space(space_arg);
    ccs::SearchBudget budget(opt.budget);
    ccs::RadonResult result =
        ccs::radon_number(space, k, ccs::radon_mode_from_name(mode), cap, &budget);
    std::string human = result.value
                            ? "r_" + std::to_string(k) + "(" + mode + ") = " + std::to_string(*result.value) + "\n"
                            : "no value up to cap " + std::to_string(cap) + "\n";
    emit(opt, ccs::radon_result_to_json(result), human);
    if (!witness_path.empty() && result.lower_witness) {
        std::ofstream out(witness_path);
        out << ccs::partition_to_json(*result.lower_witness, k, std::nullopt).dump() << "\n";
    }
    return result.value ? 0 : 1;
}

int cmd_partition(const Options& opt, const std::string& space_arg, const std::string& points_text,
                  int k) {
    ccs::ConvexitySpace space = load_space(space_arg);
    ccs::PointConfig config = make_config(space, points_text);
    ccs::SearchBudget budget(opt.budget);
    auto partition = ccs::find_k_partition(space, config, k, &budget);
    std::string human = partition ? "partition found, common point " +
                                        std::to_string(partition->common_point) + "\n"
                                  : "no k-partition with intersecting hulls\n";
    emit(opt, ccs::partition_to_json(config, k, partition), human);
    return partition ? 0 : 1;
}

int cmd_helly(const Options& opt, const std::string& space_arg, int cap) {
    ccs::ConvexitySpace space = load_space(space_arg);
    ccs::SearchBudget budget(opt.budget);
    ccs::HellyResult result = ccs::helly_number(space, cap, &budget);
    std::string human = result.value ? "h = " + std::to_string(*result.value) +
                                           (result.exact ? "" : " (cap reached; may be larger)") + "\n"
                                     : "no value\n";
    emit(opt, ccs::helly_result_to_json(result), human);
    return result.value ? 0 : 1;
}

int cmd_fh_profile(const Options& opt, const std::string& space_arg, int f,
                   const std::string& family_text, bool hyperplanes) {
    ccs::ConvexitySpace space = load_space(space_arg);
    std::vector<ccs::Mask> family;
    if (hyperplanes) {
        family = ccs::grid_hyperplane_family(space);
    } else if (!family_text.empty()) {
        for (const auto& set : json::parse(family_text)) {
            ccs::Mask m = 0;
            for (int idx : set.get<std::vector<int>>()) {
                if (idx < 0 || idx >= space.size()) throw ccs::input_error("family index out of range");
                m |= ccs::Mask{1} << idx;
            }
            family.push_back(m);
        }
    } else {
        throw ccs::input_error("fh-profile needs --family or --hyperplanes");
    }
    ccs::SearchBudget budget(opt.budget);
    ccs::FractionalHellyProfile profile = ccs::fractional_helly_profile(space, family, f, &budget);
    emit(opt, ccs::profile_to_json(profile),
         "alpha_observed = " + ccs::rat_to_string(profile.alpha_observed) +
             ", beta_best = " + ccs::rat_to_string(profile.beta_best) + " (point " +
             std::to_string(profile.best_point) + ")\n");
    return 0;
}

int cmd_lemma3(const Options& opt, const std::string& space_arg, int s, int f,
               const std::string& points_text, bool exact, std::uint64_t trials,
               std::optional<std::uint64_t> seed) {
    ccs::ConvexitySpace space = load_space(space_arg);
    ccs::PointConfig config = make_config(space, points_text);
    if (exact) {
        ccs::SearchBudget budget(opt.budget);
        ccs::Rat fraction = ccs::lemma3_exact(space, config, s, f, &budget);
        emit(opt,
             json{{"schema", ccs::kSchemaVersion}, {"exact", ccs::rat_to_string(fraction)}},
             "exact intersecting fraction = " + ccs::rat_to_string(fraction) + "\n");
        return 0;
    }
    if (!seed) throw ccs::input_error("Monte Carlo mode requires an explicit --seed");
    ccs::MonteCarloEstimate est = ccs::lemma3_monte_carlo(space, config, s, f, trials, *seed);
    emit(opt,
         json{{"schema", ccs::kSchemaVersion},
              {"estimate", est.estimate},
              {"radius95", est.radius95},
              {"trials", est.trials},
              {"hits", est.hits}},
         "estimate = " + std::to_string(est.estimate) + " +/- " + std::to_string(est.radius95) +
             " (95%, " + std::to_string(est.trials) + " trials)\n");
    return 0;
}

int cmd_constants(const Options& opt, const std::string& r_f, const std::string& f,
                  const std::string& alpha_s, const std::string& alpha_t, const std::string& beta,
                  const std::string& k) {
    ccs::ProofConstants c =
        ccs::derive_constants(ccs::BigInt(r_f), ccs::BigInt(f), ccs::rat_from_string(alpha_s),
                              ccs::rat_from_string(alpha_t), ccs::rat_from_string(beta),
                              ccs::BigInt(k));
    ccs::AuditReport derivation{c.derivation};
    emit(opt, ccs::constants_to_json(c),
         "s = " + c.s.str() + ", t = " + c.t.str() + ", m = " + c.m.str() + "\n" +
             ccs::audit_report_to_table(derivation));
    return derivation.all_pass() ? 0 : 1;
}

int cmd_matching(const Options& opt, const std::string& hypergraph_path, int k) {
    ccs::Hypergraph h = ccs::hypergraph_from_file(hypergraph_path);
    ccs::SearchBudget budget(opt.budget);
    auto matching = ccs::find_k_disjoint_edges(h, k, &budget);
    json j{{"schema", ccs::kSchemaVersion},
           {"edges", matching ? json(*matching) : json(nullptr)}};
    std::string human;
    if (matching) {
        human = "found " + std::to_string(k) + " disjoint edges:";
        for (int idx : *matching) human += " " + ccs::mask_to_string(h.edges[idx]);
        human += "\n";
    } else {
        human = "no " + std::to_string(k) + " pairwise disjoint edges exist\n";
    }
    emit(opt, j, human);
    return matching ? 0 : 1;
}

int cmd_audit(const Options& opt, const std::string& space_arg, int k_max, int cap,
              bool inject_broken_table) {
    ccs::ConvexitySpace space = load_space(space_arg);
    ccs::SearchBudget budget(opt.budget);
    ccs::AuditReport report = ccs::space_audit(space, k_max, cap, &budget);
    if (inject_broken_table) {
        // Test hook: a row that can never pass, to exercise the failure path.
        ccs::AuditRow broken;
        broken.name = "injected-broken-row";
        broken.statement = "synthetic failure injected via --inject-broken-table";
        broken.pass = false;
        report.rows.push_back(broken);
    }
    if (opt.format == "json")
        std::cout << ccs::audit_report_to_jsonl(report);
    else
        std::cout << ccs::audit_report_to_table(report);
    return report.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite convexity spaces: invariants and proof audits"};
    app.set_version_flag(
        "--version", std::string("convexity schema=") + ccs::kSchemaVersion +
                         " kernel=" + ccs::kernels::active_variant() +
                         " default-budget=" + std::to_string(kDefaultBudget) + " (0=unlimited)" +
                         " default-radon-cap=" + std::to_string(kDefaultRadonCap));

    Options opt;
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"human", "json"}));
    app.add_option("--budget", opt.budget, "Search node budget, 0 = unlimited");
    app.require_subcommand(1);
    app.fallthrough();  // allow --format/--budget after the subcommand too

    std::string space_arg, points_text, family_text, witness_path, hypergraph_path;
    std::string mode = "multiset";
    std::string r_f = "1", f_str = "1", alpha_s = "1/2", alpha_t = "1/2", beta = "1/2", k_str = "2";
    int k = 2, cap = kDefaultRadonCap, s = 1, f = 1, k_max = 3, helly_cap = 0;
    bool exact = false, hyperplanes = false, inject_broken = false;
    std::uint64_t trials = 100000;
    std::optional<std::uint64_t> seed;

    auto* validate = app.add_subcommand("validate", "Check the convexity axioms of a space");
    validate->add_option("space", space_arg, "Space file or inline JSON")->required();

    auto* hull = app.add_subcommand("hull", "Convex hull of a point multiset");
    hull->add_option("space", space_arg)->required();
    hull->add_option("--points", points_text, "Comma-separated indices or [c1,c2] tuples")->required();

    auto* radon = app.add_subcommand("radon", "Radon/Tverberg number by exhaustive search");
    radon->add_option("space", space_arg)->required();
    radon->add_option("--k", k, "Number of parts")->required();
    radon->add_option("--mode", mode)->check(CLI::IsMember({"restricted", "multiset"}));
    radon->add_option("--cap", cap, "Largest configuration size to try");
    radon->add_option("--witness", witness_path, "Write the lower witness JSON here");

    auto* partition = app.add_subcommand("partition", "k-partition with intersecting hulls");
    partition->add_option("space", space_arg)->required();
    partition->add_option("--points", points_text)->required();
    partition->add_option("--k", k)->required();

    auto* helly = app.add_subcommand("helly", "Helly number with witness subfamily");
    helly->add_option("space", space_arg)->required();
    helly->add_option("--cap", helly_cap, "Witness size cap, 0 = complete search");

    auto* fh = app.add_subcommand("fh-profile", "Fractional Helly profile of a family");
    fh->add_option("space", space_arg)->required();
    fh->add_option("--f", f, "Tuple arity")->required();
    fh->add_option("--family", family_text, "JSON array of index arrays");
    fh->add_flag("--hyperplanes", hyperplanes, "Use all axis-parallel hyperplanes (grid spaces)");

    auto* lemma3 = app.add_subcommand("lemma3", "Intersecting fraction of f-tuples of s-subset hulls");
    lemma3->add_option("space", space_arg)->required();
    lemma3->add_option("--s", s, "Subset size")->required();
    lemma3->add_option("--f", f, "Tuple arity")->required();
    lemma3->add_option("--points", points_text, "The point configuration P")->required();
    lemma3->add_flag("--exact", exact, "Exhaustive enumeration instead of sampling");
    lemma3->add_option("--trials", trials, "Monte Carlo trials");
    lemma3->add_option("--seed", seed, "Monte Carlo seed (required unless --exact)");

    auto* constants = app.add_subcommand("constants", "Derive the proof constants s, t, m");
    constants->add_option("--r-f", r_f, "Radon number for f parts")->required();
    constants->add_option("--f", f_str, "Fractional Helly arity")->required();
    constants->add_option("--alpha-s", alpha_s, "First factor of alpha (rational)");
    constants->add_option("--alpha-t", alpha_t, "Second factor of alpha (rational)");
    constants->add_option("--beta", beta, "Piercing fraction (rational)");
    constants->add_option("--k", k_str, "Target part count");

    auto* matching = app.add_subcommand("matching", "k pairwise disjoint hyperedges");
    matching->add_option("hypergraph", hypergraph_path, "Hypergraph JSON file")->required();
    matching->add_option("--k", k)->required();

    auto* audit = app.add_subcommand("audit", "Sandwich/Levi/Jamison/Eckhoff audits for a space");
    audit->add_option("space", space_arg)->required();
    audit->add_option("--k-max", k_max, "Largest part count in the r_k table");
    audit->add_option("--cap", cap, "Radon search cap");
    audit->add_flag("--inject-broken-table", inject_broken)->group("");  // test hook, hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // Normalize CLI11's parse-error codes onto the input-error exit code;
        // --help/--version still exit 0.
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (*validate) return cmd_validate(opt, space_arg);
        if (*hull) return cmd_hull(opt, space_arg, points_text);
        if (*radon) return cmd_radon(opt, space_arg, k, mode, cap, witness_path);
        if (*partition) return cmd_partition(opt, space_arg, points_text, k);
        if (*helly) return cmd_helly(opt, space_arg, helly_cap);
        if (*fh) return cmd_fh_profile(opt, space_arg, f, family_text, hyperplanes);
        if (*lemma3) return cmd_lemma3(opt, space_arg, s, f, points_text, exact, trials, seed);
        if (*constants) return cmd_constants(opt, r_f, f_str, alpha_s, alpha_t, beta, k_str);
        if (*matching) return cmd_matching(opt, hypergraph_path, k);
        if (*audit) return cmd_audit(opt, space_arg, k_max, cap, inject_broken);
    } catch (const ccs::resource_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return 3;
    } catch (const ccs::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
