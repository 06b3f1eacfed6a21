#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace netdiv {

// Pearson correlation after pairwise-complete deletion: cells that are NaN in
// either vector are dropped. Throws UndefinedCorrelationError when fewer than
// 3 complete cells remain or a residual vector has zero variance.
double pearson(const std::vector<double>& x, const std::vector<double>& y);

enum class ProfileKind {
    diversity_signature,
    subgraph_frequency,
    percentile_degrees,
    bag_of_degrees,
    bag_of_cns,
};

struct ProfileMatrix {
    std::vector<std::string> network_names;
    std::vector<std::vector<double>> vectors;  // NaN cells = undefined
    ProfileKind kind = ProfileKind::diversity_signature;
};

// Symmetric matrix with unit diagonal; undefined pairs stay NaN (missing).
std::vector<std::vector<double>> correlation_matrix(const ProfileMatrix& profiles);

struct Merge {
    std::uint32_t cluster_a = 0;  // cluster ids: leaves 0..n-1, merges n..2n-2
    std::uint32_t cluster_b = 0;  // a < b
    double height = 0.0;
    std::uint32_t merged_size = 0;
};

struct Dendrogram {
    std::uint32_t leaf_count = 0;
    std::vector<Merge> merges;            // n-1 entries, heights non-decreasing
    std::vector<std::uint32_t> leaf_order;  // subtree with smaller min leaf first
};

enum class DistanceTransform { one_minus_r, half_one_minus_r };

struct WardOptions {
    DistanceTransform transform = DistanceTransform::one_minus_r;
    // Missing correlation cells are imputed with the mean of the two column
    // means (defined off-diagonal cells only); imputed positions reported.
    std::vector<std::pair<std::uint32_t, std::uint32_t>>* imputed = nullptr;
};

// Agglomerative clustering on d = 1 - r with the Lance-Williams Ward update;
// ties broken toward the smallest cluster-id pair.
Dendrogram ward_cluster(const std::vector<std::vector<double>>& corr,
                        const WardOptions& opts = {});

// Cut after the first (n - k) merges; labels numbered by first appearance in
// leaf order.
std::vector<std::uint32_t> flat_clusters(const Dendrogram& dend, std::uint32_t k);

}  // namespace netdiv
