// AVX2 variants of the sorted-set kernels. Compiled with -mavx2 in its own
// translation unit; only reached after the runtime CPU check in dispatch.cpp.

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <array>
#include <cstdint>

#include "netdiv/kernels/intersect.hpp"

namespace netdiv::kernels::avx2 {

namespace {

// Lane-compaction indices for an 8-bit match mask.
constexpr auto kCompressIdx = [] {
    std::array<std::array<std::uint32_t, 8>, 256> t{};
    for (unsigned m = 0; m < 256; ++m) {
        unsigned o = 0;
        for (unsigned lane = 0; lane < 8; ++lane)
            if (m >> lane & 1u) t[m][o++] = lane;
    }
    return t;
}();

// -1 in the first n lanes, for masked stores.
constexpr auto kPrefixMask = [] {
    std::array<std::array<std::int32_t, 8>, 9> t{};
    for (unsigned n = 0; n <= 8; ++n)
        for (unsigned lane = 0; lane < n; ++lane) t[n][lane] = -1;
    return t;
}();

// OR of equality tests between va and all 8 rotations of vb: lane l of the
// result is all-ones iff va[l] occurs anywhere in vb.
inline __m256i match_any(__m256i va, __m256i vb) {
    const __m256i iota = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const __m256i seven = _mm256_set1_epi32(7);
    __m256i m = _mm256_cmpeq_epi32(va, vb);
    for (int r = 1; r < 8; ++r) {
        __m256i idx = _mm256_and_si256(_mm256_add_epi32(iota, _mm256_set1_epi32(r)), seven);
        __m256i rot = _mm256_permutevar8x32_epi32(vb, idx);
        m = _mm256_or_si256(m, _mm256_cmpeq_epi32(va, rot));
    }
    return m;
}

template <bool Collect>
std::size_t intersect_impl(const std::uint32_t* a, std::size_t na,
                           const std::uint32_t* b, std::size_t nb,
                           std::uint32_t* out) {
    std::size_t ia = 0, ib = 0, count = 0;
    if (na >= 8 && nb >= 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b));
        for (;;) {
            __m256i m = match_any(va, vb);
            unsigned mask = static_cast<unsigned>(
                _mm256_movemask_ps(_mm256_castsi256_ps(m)));
            if (mask) {
                unsigned hits = static_cast<unsigned>(__builtin_popcount(mask));
                if constexpr (Collect) {
                    __m256i idx = _mm256_loadu_si256(
                        reinterpret_cast<const __m256i*>(kCompressIdx[mask].data()));
                    __m256i packed = _mm256_permutevar8x32_epi32(va, idx);
                    __m256i store_mask = _mm256_loadu_si256(
                        reinterpret_cast<const __m256i*>(kPrefixMask[hits].data()));
                    _mm256_maskstore_epi32(reinterpret_cast<int*>(out + count),
                                           store_mask, packed);
                }
                count += hits;
            }
            std::uint32_t amax = a[ia + 7], bmax = b[ib + 7];
            bool step_a = amax <= bmax, step_b = bmax <= amax;
            if (step_a) {
                ia += 8;
                if (ia + 8 > na) break;
                va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + ia));
            }
            if (step_b) {
                ib += 8;
                if (ib + 8 > nb) break;
                vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + ib));
            }
        }
    }
    if constexpr (Collect)
        return count + scalar::intersect(a + ia, na - ia, b + ib, nb - ib, out + count);
    else
        return count + scalar::intersect_count(a + ia, na - ia, b + ib, nb - ib);
}

}  // namespace

std::size_t intersect_count(const std::uint32_t* a, std::size_t na,
                            const std::uint32_t* b, std::size_t nb) {
    return intersect_impl<false>(a, na, b, nb, nullptr);
}

std::size_t intersect(const std::uint32_t* a, std::size_t na,
                      const std::uint32_t* b, std::size_t nb, std::uint32_t* out) {
    return intersect_impl<true>(a, na, b, nb, out);
}

}  // namespace netdiv::kernels::avx2

#endif  // x86_64
