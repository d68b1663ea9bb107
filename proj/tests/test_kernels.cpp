#include <doctest.h>

#include <algorithm>
#include <random>

#include "ccs/kernels.hpp"

using namespace ccs;

TEST_CASE("hull_scan scalar and avx2 agree on random families") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 64);
        const Mask universe = full_mask(n);
        std::vector<Mask> family(rng() % 50);
        for (Mask& m : family) m = rng() & universe;
        const Mask query = rng() & universe;
        Mask scalar = kernels::hull_scan_scalar(family.data(), family.size(), query, universe);
        Mask dispatched = kernels::hull_scan(family.data(), family.size(), query, universe);
        CHECK(scalar == dispatched);
        if (kernels::hull_scan_avx2_available())
            CHECK(scalar == kernels::hull_scan_avx2(family.data(), family.size(), query, universe));
    }
}

TEST_CASE("hull_scan edge cases") {
    const Mask universe = full_mask(8);
    CHECK(kernels::hull_scan(nullptr, 0, 0b101, universe) == universe);
    Mask one = 0b111;
    CHECK(kernels::hull_scan(&one, 1, 0b101, universe) == 0b111);
    CHECK(kernels::hull_scan(&one, 1, 0b1000, universe) == universe);  // no member contains query
}

TEST_CASE("sorted_contains") {
    std::vector<Mask> family{0, 2, 5, 9, 200};
    for (Mask m : family) CHECK(kernels::sorted_contains(family.data(), family.size(), m));
    CHECK_FALSE(kernels::sorted_contains(family.data(), family.size(), 3));
    CHECK_FALSE(kernels::sorted_contains(family.data(), 0, 0));
}

TEST_CASE("membership_counts matches naive counting") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 30);
        std::vector<Mask> family(rng() % 40);
        for (Mask& m : family) m = rng() & full_mask(n);
        std::vector<std::size_t> counts(n);
        kernels::membership_counts(family.data(), family.size(), n, counts.data());
        for (int i = 0; i < n; ++i) {
            std::size_t naive = 0;
            for (Mask m : family)
                if (m & (Mask{1} << i)) ++naive;
            CHECK(counts[i] == naive);
        }
    }
}
