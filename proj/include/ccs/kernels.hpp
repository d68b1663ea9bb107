#pragma once

#include <cstddef>
#include <string>

#include "ccs/bits.hpp"

namespace ccs::kernels {

// Inner loops over families of bitset-encoded sets. The explicit-family hull
// is the hottest path of the whole artifact (the Radon search recomputes it
// constantly), so it has a scalar reference implementation and an AVX2
// variant selected once at startup. Both are kept equivalence-tested.

// AND of all family members that contain `query`, starting from `universe`.
// family points at `count` masks.
Mask hull_scan(const Mask* family, std::size_t count, Mask query, Mask universe);

// True iff `needle` occurs in the ascending-sorted family.
bool sorted_contains(const Mask* family, std::size_t count, Mask needle);

// For every point i < n, how many family members contain it. `counts` has n slots.
void membership_counts(const Mask* family, std::size_t count, int n, std::size_t* counts);

// Reference implementations (always scalar, never dispatched); exposed for
// the equivalence tests.
Mask hull_scan_scalar(const Mask* family, std::size_t count, Mask query, Mask universe);
Mask hull_scan_avx2(const Mask* family, std::size_t count, Mask query, Mask universe);
bool hull_scan_avx2_available();

// "avx2" or "scalar": which variant hull_scan dispatches to on this machine.
std::string active_variant();

}  // namespace ccs::kernels
