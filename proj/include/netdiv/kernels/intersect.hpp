#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

// Sorted-set kernels behind the adjacency-intersection hot loops (common
// neighborhoods, triangle counts). All inputs are strictly ascending,
// duplicate-free uint32 lists. A scalar reference implementation is always
// available; an AVX2 variant is selected at runtime when the CPU supports it.
// Both variants are equivalence-tested element-for-element.

namespace netdiv::kernels {

enum class Backend { scalar, avx2 };

// Backend chosen at startup (best available).
Backend active_backend();

bool backend_available(Backend b);

// Overrides the active backend; throws netdiv::Error if unavailable.
void force_backend(Backend b);

std::string backend_name(Backend b);

// |a ∩ b|
std::size_t intersect_count(std::span<const std::uint32_t> a,
                            std::span<const std::uint32_t> b);

// Writes a ∩ b (ascending) to out, which must have room for
// min(a.size(), b.size()) values. Returns the intersection size.
std::size_t intersect(std::span<const std::uint32_t> a,
                      std::span<const std::uint32_t> b, std::uint32_t* out);

// Binary-search membership test.
bool contains(std::span<const std::uint32_t> sorted, std::uint32_t key);

// Reference implementations, exposed for equivalence tests.
namespace scalar {
std::size_t intersect_count(const std::uint32_t* a, std::size_t na,
                            const std::uint32_t* b, std::size_t nb);
std::size_t intersect(const std::uint32_t* a, std::size_t na,
                      const std::uint32_t* b, std::size_t nb, std::uint32_t* out);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
std::size_t intersect_count(const std::uint32_t* a, std::size_t na,
                            const std::uint32_t* b, std::size_t nb);
std::size_t intersect(const std::uint32_t* a, std::size_t na,
                      const std::uint32_t* b, std::size_t nb, std::uint32_t* out);
}  // namespace avx2
#endif

}  // namespace netdiv::kernels
