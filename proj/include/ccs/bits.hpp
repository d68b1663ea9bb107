#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace ccs {

// Point sets over a ground set of at most 64 points, stored as a
// characteristic vector in one machine word. Bit i <=> point i.
using Mask = std::uint64_t;

constexpr int kMaxGroundSize = 64;

constexpr Mask full_mask(int n) {
    return n >= 64 ? ~Mask{0} : ((Mask{1} << n) - 1);
}

inline int popcount(Mask m) { return std::popcount(m); }

inline int lowest_bit(Mask m) { return std::countr_zero(m); }

inline std::vector<int> mask_to_indices(Mask m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

inline Mask indices_to_mask(const std::vector<int>& idx) {
    Mask m = 0;
    for (int i : idx) m |= Mask{1} << i;
    return m;
}

inline bool subset_of(Mask a, Mask b) { return (a & ~b) == 0; }

std::string mask_to_string(Mask m);

}  // namespace ccs
