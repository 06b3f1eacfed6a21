#include "netdiv/kernels/intersect.hpp"

#include <algorithm>

namespace netdiv::kernels::scalar {

namespace {

// Galloping search: first index in [lo, n) with a[idx] >= key.
std::size_t gallop_lower_bound(const std::uint32_t* a, std::size_t lo, std::size_t n,
                               std::uint32_t key) {
    std::size_t step = 1;
    std::size_t hi = lo;
    while (hi < n && a[hi] < key) {
        lo = hi + 1;
        hi += step;
        step <<= 1;
    }
    if (hi > n) hi = n;
    return static_cast<std::size_t>(
        std::lower_bound(a + lo, a + hi, key) - a);
}

// When one list is much shorter, gallop through the long one.
constexpr std::size_t kGallopRatio = 32;

template <bool Collect>
std::size_t intersect_impl(const std::uint32_t* a, std::size_t na,
                           const std::uint32_t* b, std::size_t nb,
                           std::uint32_t* out) {
    if (na > nb) {
        std::swap(a, b);
        std::swap(na, nb);
    }
    std::size_t count = 0;
    if (na * kGallopRatio < nb) {
        std::size_t ib = 0;
        for (std::size_t ia = 0; ia < na; ++ia) {
            ib = gallop_lower_bound(b, ib, nb, a[ia]);
            if (ib == nb) break;
            if (b[ib] == a[ia]) {
                if constexpr (Collect) out[count] = a[ia];
                ++count;
                ++ib;
            }
        }
        return count;
    }
    std::size_t ia = 0, ib = 0;
    while (ia < na && ib < nb) {
        std::uint32_t va = a[ia], vb = b[ib];
        if (va < vb) {
            ++ia;
        } else if (vb < va) {
            ++ib;
        } else {
            if constexpr (Collect) out[count] = va;
            ++count;
            ++ia;
            ++ib;
        }
    }
    return count;
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

}  // namespace netdiv::kernels::scalar
