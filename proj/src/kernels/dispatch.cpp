#include "netdiv/kernels/intersect.hpp"

#include <algorithm>
#include <atomic>

#include "netdiv/error.hpp"

namespace netdiv::kernels {

namespace {

using CountFn = std::size_t (*)(const std::uint32_t*, std::size_t,
                                const std::uint32_t*, std::size_t);
using CollectFn = std::size_t (*)(const std::uint32_t*, std::size_t,
                                  const std::uint32_t*, std::size_t, std::uint32_t*);

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

Backend detect_best() { return cpu_has_avx2() ? Backend::avx2 : Backend::scalar; }

std::atomic<Backend> g_backend{detect_best()};
std::atomic<CountFn> g_count{nullptr};
std::atomic<CollectFn> g_collect{nullptr};

void bind(Backend b) {
#if defined(__x86_64__) || defined(_M_X64)
    if (b == Backend::avx2) {
        g_count.store(&avx2::intersect_count);
        g_collect.store(&avx2::intersect);
        return;
    }
#endif
    g_count.store(&scalar::intersect_count);
    g_collect.store(&scalar::intersect);
}

struct Init {
    Init() { bind(g_backend.load()); }
} g_init;

}  // namespace

Backend active_backend() { return g_backend.load(); }

bool backend_available(Backend b) {
    return b == Backend::scalar || (b == Backend::avx2 && cpu_has_avx2());
}

void force_backend(Backend b) {
    if (!backend_available(b))
        throw Error("kernel backend not available on this CPU: " + backend_name(b));
    g_backend.store(b);
    bind(b);
}

std::string backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

std::size_t intersect_count(std::span<const std::uint32_t> a,
                            std::span<const std::uint32_t> b) {
    return g_count.load()(a.data(), a.size(), b.data(), b.size());
}

std::size_t intersect(std::span<const std::uint32_t> a,
                      std::span<const std::uint32_t> b, std::uint32_t* out) {
    return g_collect.load()(a.data(), a.size(), b.data(), b.size(), out);
}

bool contains(std::span<const std::uint32_t> sorted, std::uint32_t key) {
    return std::binary_search(sorted.begin(), sorted.end(), key);
}

}  // namespace netdiv::kernels
