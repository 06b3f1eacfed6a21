#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace netdiv {

// Adjacency bitmask over the upper triangle of a k-node graph, row-major:
// cell (i, j) with i < j sits at bit i*(2k-i-1)/2 + (j-i-1).
struct AdjMask {
    std::uint8_t k = 0;
    std::uint32_t bits = 0;
};

inline constexpr unsigned mask_cells(unsigned k) { return k * (k - 1) / 2; }

inline constexpr unsigned mask_bit_index(unsigned k, unsigned i, unsigned j) {
    // requires i < j < k
    return i * (2 * k - i - 1) / 2 + (j - i - 1);
}

// Relabeled mask: node i of the result is node perm[i] of the input.
std::uint32_t apply_permutation(unsigned k, std::uint32_t bits,
                                const std::array<std::uint8_t, 6>& perm);

// One isomorphism class of unlabeled graphs on k nodes.
struct GraphClass {
    std::uint32_t class_id = 0;  // contiguous catalog-order index
    std::uint8_t k = 0;
    AdjMask canonical_mask;      // minimum bits over all k! relabelings
    std::uint32_t edge_count = 0;
    std::uint32_t component_count = 0;
    double density = 0.0;        // edge_count / C(k,2), 0 for k = 1
    std::vector<std::uint8_t> degree_sequence;  // descending
    std::uint64_t labeled_count = 0;            // orbit size among raw masks
};

// Catalog of every unlabeled graph on 1..max_k nodes with O(1) classification
// via per-size lookup tables. Classes are sorted by the display key
// (k asc, density asc, component count asc, degree sequence descending-lex)
// and ids are contiguous across sizes. Immutable after build.
class GraphClassCatalog {
public:
    static GraphClassCatalog build(unsigned max_k);

    unsigned max_k() const { return max_k_; }
    std::size_t size() const { return classes_.size(); }
    const std::vector<GraphClass>& classes() const { return classes_; }
    const GraphClass& cls(std::uint32_t class_id) const { return classes_[class_id]; }

    std::uint32_t classify(const AdjMask& mask) const;

    // Classes of one size, in display order.
    std::vector<std::uint32_t> class_ids_of_size(unsigned k) const;
    std::uint32_t class_count_of_size(unsigned k) const;

    // Version tag embedded in persisted censuses; mismatches are rejected.
    const std::string& version() const { return version_; }

    void write_csv(const std::string& path) const;

private:
    unsigned max_k_ = 0;
    std::vector<GraphClass> classes_;
    // lookup_[k-1][bits] -> class_id
    std::vector<std::vector<std::uint32_t>> lookup_;
    std::string version_;
};

// Display-order key from the figure convention: size ascending, density
// ascending, component count ascending, then degree sequence descending
// lexicographic (greater sequence first).
bool class_order_less(const GraphClass& a, const GraphClass& b);

}  // namespace netdiv
