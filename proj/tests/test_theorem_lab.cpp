#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ccs/theorem_lab.hpp"

using namespace ccs;

namespace {

PointConfig distinct_config(int n) {
    PointConfig p{n, {}};
    for (int i = 0; i < n; ++i) p.points.push_back(i);
    return p;
}

}  // namespace

TEST_CASE("derive_constants") {
    SUBCASE("r_f=3 f=2 alpha=1/4 beta=1/2 k=2") {
        auto c = derive_constants(3, 2, Rat(1, 2), Rat(1, 2), Rat(1, 2), 2);
        CHECK(c.s == 135);
        CHECK(c.m == 45);
        CHECK(c.t == 72900);
        for (const auto& row : c.derivation) {
            CAPTURE(row.name);
            CHECK(row.ok());
        }
        CHECK(c.alpha() == Rat(1, 4));
    }
    SUBCASE("tiny parameters collapse to s=1") {
        auto c = derive_constants(1, 1, Rat(1, 2), Rat(1, 2), Rat(1, 2), 2);
        CHECK(c.s == 1);  // ln 2 < 1, rounded up
        CHECK(c.m == 1);
        CHECK(c.t == 2);  // max(1/beta, 1/(k(1-alpha_t))) = max(2, 1)
    }
    SUBCASE("s stays a multiple of r_f") {
        for (int r_f : {2, 3, 5, 7})
            for (int num : {1, 3, 9}) {
                auto c = derive_constants(r_f, 2, Rat(num, 10), Rat(1, 2), Rat(1, 3), 3);
                CHECK(c.s % r_f == 0);
                CHECK(c.m * r_f == c.s);
                CHECK(Rat(c.t) >= Rat(c.s * c.s) / c.beta);
            }
    }
    SUBCASE("magnitude cap raises resource_error") {
        CHECK_THROWS_AS(derive_constants(10, 10, Rat(1, 2), Rat(1, 2), Rat(1, 2), 2, 64),
                        resource_error);
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(derive_constants(0, 2, Rat(1, 2), Rat(1, 2), Rat(1, 2), 2), input_error);
        CHECK_THROWS_AS(derive_constants(3, 2, Rat(1), Rat(1, 2), Rat(1, 2), 2), input_error);
        CHECK_THROWS_AS(derive_constants(3, 2, Rat(1, 2), Rat(1, 2), Rat(2), 2), input_error);
    }
}

TEST_CASE("vertex_disjoint_bound_audit") {
    SUBCASE("f=1: empty product, probability 1") {
        auto row = vertex_disjoint_bound_audit(5, 2, 1, 2);
        CHECK(row.pass);
        CHECK(row.values[0].second == "1");
    }
    SUBCASE("t=5 k=2 f=2 s=2: exact 28/45 vs (3/5)^4 vs negative linear bound") {
        auto row = vertex_disjoint_bound_audit(5, 2, 2, 2);
        CHECK(row.pass);
        CHECK(row.values[0].second == "28/45");
        CHECK(row.values[1].second == "81/625");
        CHECK(row.values[2].second == "-3/5");
    }
    SUBCASE("t=50 k=2 f=3 s=3") {
        auto row = vertex_disjoint_bound_audit(50, 2, 3, 3);
        CHECK(row.pass);
    }
    SUBCASE("random small parameters never violate the chain") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 200; ++trial) {
            BigInt f = 1 + static_cast<int>(rng() % 3);
            BigInt s = 1 + static_cast<int>(rng() % 4);
            BigInt t = f * s + static_cast<int>(rng() % 40);
            auto row = vertex_disjoint_bound_audit(t, 1 + static_cast<int>(rng() % 3), f, s);
            CAPTURE(row.values);
            CHECK(row.pass);
        }
    }
    SUBCASE("fs > tk rejected") {
        CHECK_THROWS_AS(vertex_disjoint_bound_audit(2, 1, 3, 3), input_error);
    }
}

TEST_CASE("multinomial_bound_audit") {
    SUBCASE("f=2 r_f=2: 1/6 >= 1/16") {
        auto row = multinomial_bound_audit(2, 2);
        CHECK(row.pass);
        CHECK(row.values[0].second == "1/6");
        CHECK(row.values[1].second == "1/16");
    }
    SUBCASE("f=3 r_f=1: 1/6 >= 1/27") {
        auto row = multinomial_bound_audit(3, 1);
        CHECK(row.pass);
        CHECK(row.values[0].second == "1/6");
        CHECK(row.values[1].second == "1/27");
    }
    SUBCASE("f=1 degenerates to equality") {
        auto row = multinomial_bound_audit(1, 4);
        CHECK(row.pass);
        CHECK(row.values[0].second == row.values[1].second);
    }
    SUBCASE("sweep") {
        for (int f = 1; f <= 4; ++f)
            for (int r_f = 1; r_f <= 4; ++r_f) CHECK(multinomial_bound_audit(f, r_f).pass);
    }
}

TEST_CASE("success_chain_audit") {
    SUBCASE("f=1: x=1, chain saturates") {
        auto row = success_chain_audit(1, 3, 1, Rat(1, 2));
        CHECK(row.pass);
        CHECK(row.values[1].second == "1");  // 1-(1-x)^m with x=1
    }
    SUBCASE("f=2 r_f=1 m=4: 175/256, alpha_s leg applicable and holds") {
        auto row = success_chain_audit(2, 1, 4, Rat(1, 2));
        CHECK(row.pass);
        CHECK(row.values[1].second == "175/256");
        CHECK(row.values[3] == std::pair<std::string, std::string>{"alpha_s-leg", "pass"});
    }
    SUBCASE("below threshold the alpha_s leg is informational") {
        auto row = success_chain_audit(2, 1, 1, Rat(1, 2));  // threshold ~ 2.77 > m
        CHECK(row.pass);
        CHECK(row.values[3].second == "not applicable");
    }
    SUBCASE("full-scale m from derive_constants satisfies its own leg") {
        auto c = derive_constants(2, 2, Rat(1, 2), Rat(1, 2), Rat(1, 2), 2);
        auto row = success_chain_audit(c.f, c.r_f, c.m, c.alpha_s);
        CHECK(row.pass);
        CHECK(row.values[3].second == "pass");
    }
    SUBCASE("sweep over m") {
        for (int m = 1; m <= 40; ++m) CHECK(success_chain_audit(2, 2, m, Rat(3, 4)).pass);
    }
}

TEST_CASE("density condition and matching audit") {
    SUBCASE("tk=6 s=2 k=3 beta=1: 4 < 5/2 is false") {
        CHECK_FALSE(density_condition(6, 2, 3, Rat(1)));
    }
    SUBCASE("tk=20 s=2 k=2 beta=1/2: 2 < 19/4 is true") {
        CHECK(density_condition(20, 2, 2, Rat(1, 2)));
    }
    SUBCASE("binomial and reduced forms agree on random tuples") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 2000; ++trial) {
            BigInt s = 1 + static_cast<int>(rng() % 5);
            BigInt tk = s + static_cast<int>(rng() % 60);
            BigInt k = 1 + static_cast<int>(rng() % 5);
            Rat beta(1 + static_cast<int>(rng() % 12), 1 + static_cast<int>(rng() % 12));
            auto row = density_matching_audit(tk, s, k, beta);
            CAPTURE(row.values);
            CHECK(row.pass);
        }
    }
}

TEST_CASE("lemma3_exact") {
    SUBCASE("chain n=10, s=3, f=2: 33/34") {
        auto space = ConvexitySpace::chain_space(10);
        CHECK(lemma3_exact(space, distinct_config(10), 3, 2) == Rat(33, 34));
    }
    SUBCASE("f=1 counts nonempty hulls: probability 1") {
        auto space = ConvexitySpace::chain_space(6);
        CHECK(lemma3_exact(space, distinct_config(6), 2, 1) == Rat(1));
    }
    SUBCASE("free space singletons never meet") {
        auto space = ConvexitySpace::free_space(5);
        CHECK(lemma3_exact(space, distinct_config(5), 1, 2) == Rat(0));
    }
    SUBCASE("repeated points shift the distribution") {
        // all labels on one point: every hull is the same singleton
        auto space = ConvexitySpace::free_space(3);
        PointConfig p{3, {1, 1, 1, 1}};
        CHECK(lemma3_exact(space, p, 2, 2) == Rat(1));
    }
    SUBCASE("budget exhaustion") {
        auto space = ConvexitySpace::chain_space(12);
        SearchBudget budget{50};
        CHECK_THROWS_AS(lemma3_exact(space, distinct_config(12), 3, 3, &budget), resource_error);
    }
    SUBCASE("f larger than the number of subsets is rejected") {
        auto space = ConvexitySpace::chain_space(3);
        CHECK_THROWS_AS(lemma3_exact(space, distinct_config(3), 3, 2), input_error);
    }
}

TEST_CASE("lemma3_monte_carlo") {
    auto space = ConvexitySpace::chain_space(10);
    auto p = distinct_config(10);
    SUBCASE("estimate brackets the exact value and is seed-deterministic") {
        auto a = lemma3_monte_carlo(space, p, 3, 2, 20000, 404);
        auto b = lemma3_monte_carlo(space, p, 3, 2, 20000, 404);
        CHECK(a.hits == b.hits);
        CHECK(a.trials == 20000);
        const double exact = 33.0 / 34.0;
        CHECK(std::abs(a.estimate - exact) < 0.01);
        CHECK(a.radius95 > 0.0);
        CHECK(a.radius95 < 0.01);
    }
    SUBCASE("different seeds differ (almost surely)") {
        auto a = lemma3_monte_carlo(space, p, 3, 2, 5000, 1);
        auto b = lemma3_monte_carlo(space, p, 3, 2, 5000, 2);
        CHECK(a.hits != b.hits);
    }
    SUBCASE("estimates honour their own confidence radius across seeds") {
        const double exact = 33.0 / 34.0;
        int outside = 0;
        for (std::uint64_t seed = 100; seed < 120; ++seed) {
            auto mc = lemma3_monte_carlo(space, p, 3, 2, 100000, seed);
            if (std::abs(mc.estimate - exact) > mc.radius95) ++outside;
        }
        CHECK(outside <= 1);
    }
    SUBCASE("degenerate cases match exact") {
        CHECK(lemma3_monte_carlo(space, p, 3, 1, 100, 9).estimate == 1.0);
        auto free5 = ConvexitySpace::free_space(5);
        CHECK(lemma3_monte_carlo(free5, distinct_config(5), 1, 2, 100, 9).estimate == 0.0);
    }
    SUBCASE("zero trials rejected") {
        CHECK_THROWS_AS(lemma3_monte_carlo(space, p, 3, 2, 0, 1), input_error);
    }
}

TEST_CASE("sample_type_partition") {
    SUBCASE("structure: every label in exactly one block") {
        std::vector<int> labels(24);
        std::iota(labels.begin(), labels.end(), 100);
        for (std::uint64_t seed = 0; seed < 1000; ++seed) {
            auto tp = sample_type_partition(labels, 2, 3, seed);  // s=12, m=4
            REQUIRE(tp.groups.size() == 4);
            std::multiset<int> seen;
            for (const auto& group : tp.groups) {
                REQUIRE(group.size() == 2);
                for (const auto& block : group) {
                    REQUIRE(block.size() == 3);
                    seen.insert(block.begin(), block.end());
                }
            }
            CHECK(seen == std::multiset<int>(labels.begin(), labels.end()));
        }
    }
    SUBCASE("uniformity: f=2 r_f=1 on two labels splits evenly over seeds") {
        std::vector<int> labels{0, 1};
        int first_block_zero = 0;
        const int n = 10000;
        for (int seed = 0; seed < n; ++seed) {
            auto tp = sample_type_partition(labels, 2, 1, seed);
            if (tp.groups[0][0][0] == 0) ++first_block_zero;
        }
        CHECK(first_block_zero > n / 2 - 200);
        CHECK(first_block_zero < n / 2 + 200);
    }
    SUBCASE("shape errors") {
        CHECK_THROWS_AS(sample_type_partition({0, 1, 2}, 2, 1, 0), input_error);
        CHECK_THROWS_AS(sample_type_partition({0, 1, 2, 3}, 2, 3, 0), input_error);
        CHECK_THROWS_AS(sample_type_partition({}, 1, 1, 0), input_error);
    }
}

namespace {

// Oracle: exhaustive scan over all C(E, k) index subsets.
bool has_matching_brute(const Hypergraph& h, int k) {
    const int e = static_cast<int>(h.edges.size());
    std::vector<int> combo(k);
    std::function<bool(int, int, Mask)> rec = [&](int start, int depth, Mask used) {
        if (depth == k) return true;
        for (int i = start; i < e; ++i)
            if (!(h.edges[i] & used) && rec(i + 1, depth + 1, used | h.edges[i])) return true;
        return false;
    };
    return rec(0, 0, 0);
}

Hypergraph complete_graph(int n) {
    Hypergraph h{n, 2, {}};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) h.edges.push_back((Mask{1} << i) | (Mask{1} << j));
    return h;
}

}  // namespace

TEST_CASE("find_k_disjoint_edges") {
    SUBCASE("perfect matching in K6") {
        auto h = complete_graph(6);
        CHECK(h.density() == Rat(1));
        auto m = find_k_disjoint_edges(h, 3);
        REQUIRE(m.has_value());
        CHECK(validate_matching(h, 3, *m));
        CHECK_FALSE(find_k_disjoint_edges(h, 4).has_value());
    }
    SUBCASE("star has no 2-matching") {
        Hypergraph h{6, 2, {}};
        for (int i = 1; i <= 5; ++i) h.edges.push_back(Mask{1} | (Mask{1} << i));
        CHECK_FALSE(find_k_disjoint_edges(h, 2).has_value());
        auto m = find_k_disjoint_edges(h, 1);
        REQUIRE(m.has_value());
        CHECK(validate_matching(h, 1, *m));
    }
    SUBCASE("random corpus agrees with the brute-force oracle") {
        std::mt19937_64 rng(31);
        for (int trial = 0; trial < 300; ++trial) {
            Hypergraph h;
            h.vertices = 4 + static_cast<int>(rng() % 8);
            h.uniformity = 2 + static_cast<int>(rng() % 2);
            const int e = static_cast<int>(rng() % 12);
            for (int i = 0; i < e; ++i) {
                Mask edge = 0;
                while (popcount(edge) < h.uniformity) edge |= Mask{1} << (rng() % h.vertices);
                h.edges.push_back(edge);
            }
            const int k = 1 + static_cast<int>(rng() % 4);
            auto m = find_k_disjoint_edges(h, k);
            CHECK(m.has_value() == has_matching_brute(h, k));
            if (m) CHECK(validate_matching(h, k, *m));
        }
    }
    SUBCASE("budget exhaustion") {
        auto h = complete_graph(16);
        SearchBudget budget{20};
        // k=9 is impossible in K16, forcing the search to exhaust the space.
        CHECK_THROWS_AS(find_k_disjoint_edges(h, 9, &budget), resource_error);
    }
    SUBCASE("structural rejections") {
        Hypergraph bad{4, 2, {0b0111}};
        CHECK_THROWS_AS(bad.check(), input_error);
        CHECK_THROWS_AS((Hypergraph{4, 2, {0b110000}}.check()), input_error);
        CHECK_THROWS_AS(find_k_disjoint_edges(complete_graph(4), 0), input_error);
    }
    SUBCASE("validate_matching rejects overlaps, bad indices, wrong size") {
        auto h = complete_graph(4);  // edges sorted: {0,1},{0,2},{0,3},{1,2},...
        CHECK_FALSE(validate_matching(h, 2, {0, 1}));   // share vertex 0
        CHECK_FALSE(validate_matching(h, 2, {0, 99}));  // out of range
        CHECK_FALSE(validate_matching(h, 2, {0}));      // wrong count
    }
}

TEST_CASE("recursion_audit") {
    const std::map<int, int> chain_table{{2, 3}, {3, 5}, {4, 7}, {5, 9}, {6, 11}};
    SUBCASE("chain r_k = 2k-1 with h=2 passes every row") {
        auto report = recursion_audit(chain_table, 2, true);
        CHECK(report.all_pass());
        bool saw_levi = false, saw_product = false, saw_power = false, saw_eckhoff = false;
        for (const auto& row : report.rows) {
            saw_levi |= row.name == "levi";
            saw_product |= row.name.rfind("jamison-product", 0) == 0;
            saw_power |= row.name.rfind("jamison-power", 0) == 0;
            saw_eckhoff |= row.name.rfind("eckhoff", 0) == 0;
        }
        CHECK(saw_levi);
        CHECK(saw_product);
        CHECK(saw_power);
        CHECK(saw_eckhoff);
    }
    SUBCASE("a corrupted table fails") {
        auto broken = chain_table;
        broken[4] = 10;  // violates r_4 <= r_2^2 = 9
        CHECK_FALSE(recursion_audit(broken, 2, true).all_pass());
    }
    SUBCASE("levi violation detected") {
        CHECK_FALSE(recursion_audit({{2, 3}}, 3, true).all_pass());
    }
    SUBCASE("non-exhaustive tables are refused") {
        CHECK_THROWS_AS(recursion_audit(chain_table, 2, false), input_error);
    }
    SUBCASE("r=4 tables get informational gap rows") {
        auto report = recursion_audit({{2, 4}, {3, 6}}, std::nullopt, true);
        int gap_rows = 0;
        for (const auto& row : report.rows)
            if (row.name.rfind("bukh-gap", 0) == 0) {
                ++gap_rows;
                CHECK_FALSE(row.applicable);
            }
        CHECK(gap_rows == 2);
        CHECK(report.all_pass());
    }
}

TEST_CASE("linear_growth_probe") {
    SUBCASE("chain n=12: ratios 3/2, 5/3, 7/4") {
        auto probe = linear_growth_probe(ConvexitySpace::chain_space(12), 4, 9);
        CHECK(probe.r_exists);
        CHECK(probe.r_values == std::map<int, int>{{2, 3}, {3, 5}, {4, 7}});
        CHECK(probe.ratios.at(2) == Rat(3, 2));
        CHECK(probe.ratios.at(3) == Rat(5, 3));
        CHECK(probe.ratios.at(4) == Rat(7, 4));
        REQUIRE(probe.max_ratio.has_value());
        CHECK(*probe.max_ratio == Rat(7, 4));
        CHECK(probe.verdict.find("consistent with linear growth") != std::string::npos);
    }
    SUBCASE("free n=9 with cap 6: precondition unmet") {
        auto probe = linear_growth_probe(ConvexitySpace::free_space(9), 3, 6);
        CHECK_FALSE(probe.r_exists);
        CHECK(probe.r_values.empty());
        CHECK(probe.verdict.find("precondition unmet") != std::string::npos);
    }
    SUBCASE("partial table when the cap truncates") {
        auto probe = linear_growth_probe(ConvexitySpace::chain_space(12), 4, 6);
        CHECK(probe.r_exists);
        CHECK(probe.r_values == std::map<int, int>{{2, 3}, {3, 5}});
        CHECK(probe.verdict.find("partial table") != std::string::npos);
    }
    SUBCASE("grid 2x2") {
        auto probe = linear_growth_probe(ConvexitySpace::grid_space(2, 2), 3, 8);
        CHECK(probe.r_exists);
        CHECK(probe.r_values.at(2) == 3);
    }
    SUBCASE("computed tables satisfy r_k >= k and r_k >= r_2") {
        std::vector<ConvexitySpace> spaces;
        spaces.push_back(ConvexitySpace::chain_space(10));
        spaces.push_back(ConvexitySpace::grid_space(2, 2));
        spaces.push_back(ConvexitySpace::grid_space(3, 2));
        spaces.push_back(ConvexitySpace::free_space(3));
        for (const auto& space : spaces) {
            CAPTURE(space.describe());
            auto probe = linear_growth_probe(space, 3, 8);
            REQUIRE(probe.r_values.count(2));
            for (const auto& [k, rk] : probe.r_values) {
                CHECK(rk >= k);  // pigeonhole: k nonempty parts need k points
                CHECK(rk >= probe.r_values.at(2));
            }
        }
    }
}

TEST_CASE("space_audit") {
    SUBCASE("chain n=8 audits clean") {
        auto report = space_audit(ConvexitySpace::chain_space(8), 3, 7);
        CHECK(report.all_pass());
        bool saw_sandwich = false, saw_restricted = false, saw_multiset = false, saw_growth = false;
        for (const auto& row : report.rows) {
            saw_sandwich |= row.name.rfind("sandwich", 0) == 0;
            saw_restricted |= row.name.rfind("restricted:", 0) == 0;
            saw_multiset |= row.name.rfind("multiset:", 0) == 0;
            saw_growth |= row.name == "linear-growth-probe";
        }
        CHECK(saw_sandwich);
        CHECK(saw_restricted);
        CHECK(saw_multiset);
        CHECK(saw_growth);
    }
    SUBCASE("grid 2x2 audits clean") {
        CHECK(space_audit(ConvexitySpace::grid_space(2, 2), 3, 8).all_pass());
    }
    SUBCASE("budget propagates") {
        SearchBudget budget{100};
        CHECK_THROWS_AS(space_audit(ConvexitySpace::chain_space(10), 4, 9, &budget),
                        resource_error);
    }
}
