#pragma once

// Shared fixtures and brute-force oracles. Oracles deliberately avoid the
// library's kernels and enumeration paths: plain std::set_intersection,
// adjacency matrices, and O(n^2)/O(n^3) scans.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "netdiv/catalog.hpp"
#include "netdiv/census.hpp"
#include "netdiv/graph.hpp"
#include "netdiv/randgraph.hpp"
#include "netdiv/rng.hpp"

namespace testutil {

using netdiv::Graph;
using netdiv::NodeId;

inline Graph make_graph(NodeId n, std::vector<std::pair<NodeId, NodeId>> edges) {
    return Graph::from_edges(n, edges);
}

// Node i of the result is node perm[i] of g... inverse orientation matters
// only for invariance tests, where any bijection works.
inline Graph permute_graph(const Graph& g, const std::vector<NodeId>& perm) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return Graph::from_edges(g.node_count(), edges);
}

inline std::vector<NodeId> random_permutation(NodeId n, std::uint64_t seed) {
    std::vector<NodeId> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    netdiv::Rng rng(seed);
    for (NodeId i = n; i > 1; --i)
        std::swap(perm[i - 1], perm[rng.uniform_int(i)]);
    return perm;
}

inline std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
    std::vector<std::vector<bool>> m(g.node_count(),
                                     std::vector<bool>(g.node_count(), false));
    for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
    return m;
}

// O(n^3) triangle count over the adjacency matrix.
inline std::uint64_t brute_triangles(const Graph& g) {
    auto m = adjacency_matrix(g);
    NodeId n = g.node_count();
    std::uint64_t t = 0;
    for (NodeId i = 0; i < n; ++i)
        for (NodeId j = i + 1; j < n; ++j)
            for (NodeId k = j + 1; k < n; ++k)
                if (m[i][j] && m[j][k] && m[i][k]) ++t;
    return t;
}

// Edge-iterated triangle count over bitset rows; a different route from both
// the O(n^3) scan and the library's sorted-list kernels. Each triangle is
// counted once per edge.
inline std::uint64_t bitset_triangles(const Graph& g) {
    NodeId n = g.node_count();
    std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n) * words, 0);
    for (auto [u, v] : g.edges()) {
        rows[static_cast<std::size_t>(u) * words + v / 64] |= 1ull << (v % 64);
        rows[static_cast<std::size_t>(v) * words + u / 64] |= 1ull << (u % 64);
    }
    std::uint64_t count = 0;
    for (auto [u, v] : g.edges()) {
        const std::uint64_t* ru = &rows[static_cast<std::size_t>(u) * words];
        const std::uint64_t* rv = &rows[static_cast<std::size_t>(v) * words];
        for (std::size_t w = 0; w < words; ++w) count += std::popcount(ru[w] & rv[w]);
    }
    return count / 3;
}

inline std::uint64_t brute_wedges(const Graph& g) {
    std::uint64_t w = 0;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        std::uint64_t d = g.degree(v);
        w += d * (d - 1) / 2;
    }
    return w;
}

// All-pairs census with naive set intersection and matrix membership tests.
inline netdiv::CensusTable brute_census(const Graph& g,
                                        const netdiv::GraphClassCatalog& catalog,
                                        unsigned cap) {
    auto m = adjacency_matrix(g);
    netdiv::CensusTable t;
    t.pair_count.assign(catalog.size(), 0);
    t.linked_count.assign(catalog.size(), 0);
    t.bag_of_cn.assign(1, 0);
    t.cap = cap;
    t.catalog_version = catalog.version();
    NodeId n = g.node_count();
    for (NodeId i = 0; i < n; ++i) {
        std::vector<NodeId> ni(g.neighbors(i).begin(), g.neighbors(i).end());
        for (NodeId j = i + 1; j < n; ++j) {
            std::vector<NodeId> nj(g.neighbors(j).begin(), g.neighbors(j).end());
            std::vector<NodeId> cn;
            std::set_intersection(ni.begin(), ni.end(), nj.begin(), nj.end(),
                                  std::back_inserter(cn));
            if (cn.empty()) continue;
            if (cn.size() >= t.bag_of_cn.size()) t.bag_of_cn.resize(cn.size() + 1, 0);
            ++t.bag_of_cn[cn.size()];
            if (cn.size() > cap) continue;
            netdiv::AdjMask mask{static_cast<std::uint8_t>(cn.size()), 0};
            for (std::size_t a = 0; a + 1 < cn.size(); ++a)
                for (std::size_t b = a + 1; b < cn.size(); ++b)
                    if (m[cn[a]][cn[b]])
                        mask.bits |= 1u << netdiv::mask_bit_index(
                            static_cast<unsigned>(cn.size()), static_cast<unsigned>(a),
                            static_cast<unsigned>(b));
            auto cid = catalog.classify(mask);
            ++t.pair_count[cid];
            if (m[i][j]) ++t.linked_count[cid];
        }
    }
    return t;
}

inline bool census_equal(const netdiv::CensusTable& a, const netdiv::CensusTable& b) {
    if (a.pair_count != b.pair_count) return false;
    if (a.linked_count != b.linked_count) return false;
    std::size_t len = std::max(a.bag_of_cn.size(), b.bag_of_cn.size());
    for (std::size_t s = 0; s < len; ++s)
        if (a.bag(s) != b.bag(s)) return false;
    return true;
}

// Mixed ER/BA/WS graph stream for randomized suites.
inline Graph random_small_graph(std::uint64_t seed, NodeId max_n = 200) {
    netdiv::Rng rng(seed);
    auto n = static_cast<std::uint64_t>(20 + rng.uniform_int(max_n - 19));
    netdiv::GeneratorSpec spec;
    spec.seed = seed * 3 + 1;
    switch (rng.uniform_int(3)) {
        case 0:
            spec.family = netdiv::ErSpec{n, 0.02 + 0.1 * rng.uniform()};
            break;
        case 1:
            spec.family = netdiv::BaSpec{n, 1 + rng.uniform_int(4)};
            break;
        default: {
            std::uint64_t k = 2 + 2 * rng.uniform_int(4);  // 2,4,6,8
            if (k >= n) k = 2;
            spec.family = netdiv::WsSpec{n, k, 0.1 + 0.7 * rng.uniform()};
            break;
        }
    }
    return netdiv::generate(spec);
}

// Threshold-sweep metrics oracle over explicit instances.
struct Instance {
    double score;
    bool label;
};

inline double oracle_auroc(const std::vector<Instance>& data) {
    double num = 0;
    std::uint64_t pos = 0, neg = 0;
    for (const auto& p : data) (p.label ? pos : neg)++;
    for (const auto& p : data) {
        if (!p.label) continue;
        for (const auto& q : data) {
            if (q.label) continue;
            if (p.score > q.score)
                num += 1.0;
            else if (p.score == q.score)
                num += 0.5;
        }
    }
    return num / (static_cast<double>(pos) * static_cast<double>(neg));
}

inline double oracle_aupr(const std::vector<Instance>& data) {
    std::set<double> thresholds;
    for (const auto& p : data) thresholds.insert(p.score);
    std::uint64_t pos = 0;
    for (const auto& p : data) pos += p.label;
    double aupr = 0, prev_recall = 0;
    for (auto it = thresholds.rbegin(); it != thresholds.rend(); ++it) {
        std::uint64_t tp = 0, fp = 0;
        for (const auto& p : data) {
            if (p.score >= *it) (p.label ? tp : fp)++;
        }
        double recall = static_cast<double>(tp) / static_cast<double>(pos);
        double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
        aupr += (recall - prev_recall) * precision;
        prev_recall = recall;
    }
    return aupr;
}

}  // namespace testutil
