#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "netdiv/graph.hpp"

namespace netdiv {

struct ErSpec {
    std::uint64_t n = 0;
    double p = 0.0;  // in (0,1)
};

struct BaSpec {
    std::uint64_t n = 0;
    std::uint64_t m = 0;  // 1 <= m < n
};

struct WsSpec {
    std::uint64_t n = 0;
    std::uint64_t k = 0;  // even, < n
    double beta = 0.0;    // in [0,1]
};

struct GeneratorSpec {
    std::variant<ErSpec, BaSpec, WsSpec> family;
    std::uint64_t seed = 0;
};

// Seeded, platform-pinned generation (mt19937_64 plus our own value
// mappings). ER uses geometric skip-sampling over the pair stream, BA
// preferential attachment over the repeated-endpoint list starting from an
// (m+1)-clique, WS single-endpoint rewiring of the ring lattice.
Graph generate(const GeneratorSpec& spec);

std::string spec_filename(const GeneratorSpec& spec);
std::string spec_to_json(const GeneratorSpec& spec);

// JSON list of generator specs.
std::vector<GeneratorSpec> load_manifest(const std::string& path);

}  // namespace netdiv
