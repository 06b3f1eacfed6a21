#include "netdiv/catalog.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "netdiv/error.hpp"

namespace netdiv {

std::uint32_t apply_permutation(unsigned k, std::uint32_t bits,
                                const std::array<std::uint8_t, 6>& perm) {
    std::uint32_t out = 0;
    for (unsigned i = 0; i + 1 < k; ++i) {
        for (unsigned j = i + 1; j < k; ++j) {
            unsigned pi = perm[i], pj = perm[j];
            if (pi > pj) std::swap(pi, pj);
            if (bits >> mask_bit_index(k, pi, pj) & 1u)
                out |= 1u << mask_bit_index(k, i, j);
        }
    }
    return out;
}

namespace {

std::uint32_t count_components(unsigned k, std::uint32_t bits) {
    std::array<std::uint8_t, 6> parent{};
    for (unsigned v = 0; v < k; ++v) parent[v] = static_cast<std::uint8_t>(v);
    auto find = [&](std::uint8_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (unsigned i = 0; i + 1 < k; ++i)
        for (unsigned j = i + 1; j < k; ++j)
            if (bits >> mask_bit_index(k, i, j) & 1u) parent[find(static_cast<std::uint8_t>(i))] = find(static_cast<std::uint8_t>(j));
    std::uint32_t comps = 0;
    for (unsigned v = 0; v < k; ++v)
        if (find(static_cast<std::uint8_t>(v)) == v) ++comps;
    return comps;
}

std::vector<std::uint8_t> degree_sequence_desc(unsigned k, std::uint32_t bits) {
    std::vector<std::uint8_t> deg(k, 0);
    for (unsigned i = 0; i + 1 < k; ++i) {
        for (unsigned j = i + 1; j < k; ++j) {
            if (bits >> mask_bit_index(k, i, j) & 1u) {
                ++deg[i];
                ++deg[j];
            }
        }
    }
    std::sort(deg.begin(), deg.end(), std::greater<>());
    return deg;
}

GraphClass make_class(unsigned k, std::uint32_t canonical_bits) {
    GraphClass c;
    c.k = static_cast<std::uint8_t>(k);
    c.canonical_mask = {static_cast<std::uint8_t>(k), canonical_bits};
    c.edge_count = static_cast<std::uint32_t>(std::popcount(canonical_bits));
    c.component_count = count_components(k, canonical_bits);
    c.density = k > 1 ? static_cast<double>(c.edge_count) / mask_cells(k) : 0.0;
    c.degree_sequence = degree_sequence_desc(k, canonical_bits);
    return c;
}

// FNV-1a over the canonical class list; part of the catalog version tag.
std::uint64_t fingerprint(const std::vector<GraphClass>& classes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xff;
            h *= 0x100000001b3ULL;
        }
    };
    for (const auto& c : classes) {
        mix(c.k);
        mix(c.canonical_mask.bits);
        mix(c.class_id);
    }
    return h;
}

}  // namespace

bool class_order_less(const GraphClass& a, const GraphClass& b) {
    if (a.k != b.k) return a.k < b.k;
    if (a.edge_count != b.edge_count) return a.edge_count < b.edge_count;  // density asc
    if (a.component_count != b.component_count) return a.component_count < b.component_count;
    if (a.degree_sequence != b.degree_sequence)
        return a.degree_sequence > b.degree_sequence;  // descending lexicographic
    return a.canonical_mask.bits < b.canonical_mask.bits;
}

GraphClassCatalog GraphClassCatalog::build(unsigned max_k) {
    if (max_k < 1 || max_k > 6)
        throw Error("catalog max_k out of range [1,6]: " + std::to_string(max_k));

    GraphClassCatalog cat;
    cat.max_k_ = max_k;
    cat.lookup_.resize(max_k);

    constexpr std::uint32_t kUnassigned = 0xffffffffu;
    for (unsigned k = 1; k <= max_k; ++k) {
        const std::uint32_t mask_count = 1u << mask_cells(k);
        auto& table = cat.lookup_[k - 1];
        table.assign(mask_count, kUnassigned);

        std::array<std::uint8_t, 6> perm{};
        std::vector<GraphClass> size_classes;

        // Ascending scan: the first unassigned mask is the minimum of its
        // orbit, i.e. the canonical form. Fill its orbit with a local id.
        for (std::uint32_t bits = 0; bits < mask_count; ++bits) {
            if (table[bits] != kUnassigned) continue;
            auto local = static_cast<std::uint32_t>(size_classes.size());
            GraphClass c = make_class(k, bits);
            std::iota(perm.begin(), perm.begin() + k, 0);
            std::uint64_t orbit = 0;
            do {
                std::uint32_t image = apply_permutation(k, bits, perm);
                if (table[image] == kUnassigned) {
                    table[image] = local;
                    ++orbit;
                }
            } while (std::next_permutation(perm.begin(), perm.begin() + k));
            c.labeled_count = orbit;
            size_classes.push_back(std::move(c));
        }

        // Reorder into display order and remap the lookup table.
        std::vector<std::uint32_t> order(size_classes.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
            return class_order_less(size_classes[a], size_classes[b]);
        });
        std::vector<std::uint32_t> local_to_global(size_classes.size());
        for (std::uint32_t rank = 0; rank < order.size(); ++rank) {
            GraphClass c = size_classes[order[rank]];
            c.class_id = static_cast<std::uint32_t>(cat.classes_.size());
            local_to_global[order[rank]] = c.class_id;
            cat.classes_.push_back(std::move(c));
        }
        for (auto& slot : table) slot = local_to_global[slot];
    }

    char buf[64];
    std::snprintf(buf, sizeof buf, "catalog-v1-k%u-%016llx", max_k,
                  static_cast<unsigned long long>(fingerprint(cat.classes_)));
    cat.version_ = buf;
    return cat;
}

std::uint32_t GraphClassCatalog::classify(const AdjMask& mask) const {
    if (mask.k < 1 || mask.k > max_k_)
        throw Error("classify: mask size " + std::to_string(mask.k) +
                    " outside catalog range 1.." + std::to_string(max_k_));
    return lookup_[mask.k - 1][mask.bits];
}

std::vector<std::uint32_t> GraphClassCatalog::class_ids_of_size(unsigned k) const {
    std::vector<std::uint32_t> ids;
    for (const auto& c : classes_)
        if (c.k == k) ids.push_back(c.class_id);
    return ids;
}

std::uint32_t GraphClassCatalog::class_count_of_size(unsigned k) const {
    std::uint32_t count = 0;
    for (const auto& c : classes_)
        if (c.k == k) ++count;
    return count;
}

void GraphClassCatalog::write_csv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw Error("cannot write catalog csv: " + path);
    out << "class_id,k,edge_count,component_count,density,degree_sequence,canonical_bits\n";
    out.precision(17);
    for (const auto& c : classes_) {
        out << c.class_id << ',' << unsigned(c.k) << ',' << c.edge_count << ','
            << c.component_count << ',' << c.density << ',';
        for (std::size_t i = 0; i < c.degree_sequence.size(); ++i) {
            if (i) out << ' ';
            out << unsigned(c.degree_sequence[i]);
        }
        out << ',' << c.canonical_mask.bits << '\n';
    }
}

}  // namespace netdiv
