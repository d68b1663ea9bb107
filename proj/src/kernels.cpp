#include "ccs/kernels.hpp"

#include <algorithm>

#if defined(__x86_64__) || defined(_M_X64)
#define CCS_X86 1
#include <immintrin.h>
#else
#define CCS_X86 0
#endif

namespace ccs::kernels {

Mask hull_scan_scalar(const Mask* family, std::size_t count, Mask query, Mask universe) {
    Mask acc = universe;
    for (std::size_t i = 0; i < count; ++i) {
        Mask m = family[i];
        if ((m & query) == query) acc &= m;
    }
    return acc;
}

#if CCS_X86

__attribute__((target("avx2")))
Mask hull_scan_avx2(const Mask* family, std::size_t count, Mask query, Mask universe) {
    const __m256i q = _mm256_set1_epi64x(static_cast<long long>(query));
    // Lanes not containing the query must contribute all-ones to the AND.
    __m256i acc = _mm256_set1_epi64x(-1);
    std::size_t i = 0;
    for (; i + 4 <= count; i += 4) {
        __m256i m = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(family + i));
        __m256i hit = _mm256_cmpeq_epi64(_mm256_and_si256(m, q), q);
        acc = _mm256_and_si256(acc, _mm256_or_si256(m, _mm256_andnot_si256(hit, _mm256_set1_epi64x(-1))));
    }
    alignas(32) Mask lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    Mask out = universe & lanes[0] & lanes[1] & lanes[2] & lanes[3];
    for (; i < count; ++i) {
        Mask m = family[i];
        if ((m & query) == query) out &= m;
    }
    return out;
}

bool hull_scan_avx2_available() { return __builtin_cpu_supports("avx2"); }

#else

Mask hull_scan_avx2(const Mask* family, std::size_t count, Mask query, Mask universe) {
    return hull_scan_scalar(family, count, query, universe);
}

bool hull_scan_avx2_available() { return false; }

#endif

namespace {
using ScanFn = Mask (*)(const Mask*, std::size_t, Mask, Mask);
const ScanFn g_scan = hull_scan_avx2_available() ? &hull_scan_avx2 : &hull_scan_scalar;
}  // namespace

Mask hull_scan(const Mask* family, std::size_t count, Mask query, Mask universe) {
    return g_scan(family, count, query, universe);
}

std::string active_variant() { return hull_scan_avx2_available() ? "avx2" : "scalar"; }

bool sorted_contains(const Mask* family, std::size_t count, Mask needle) {
    return std::binary_search(family, family + count, needle);
}

void membership_counts(const Mask* family, std::size_t count, int n, std::size_t* counts) {
    std::fill(counts, counts + n, std::size_t{0});
    for (std::size_t i = 0; i < count; ++i) {
        Mask m = family[i];
        while (m) {
            ++counts[lowest_bit(m)];
            m &= m - 1;
        }
    }
}

}  // namespace ccs::kernels
