#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "netdiv/catalog.hpp"
#include "netdiv/graph.hpp"

namespace netdiv {

struct CensusMode {
    bool sampled = false;
    double rate = 1.0;       // node inclusion probability when sampled
    std::uint64_t seed = 0;  // sampling seed

    static CensusMode exact() { return {}; }
    static CensusMode node_sampled(double rate, std::uint64_t seed) {
        return {true, rate, seed};
    }
};

// Counts of unordered node pairs grouped by the isomorphism class of their
// common neighborhood, plus the all-sizes #CN histogram. Node sampling counts
// a pair once per sampled endpoint (raw counts; metadata records the mode).
struct CensusTable {
    std::vector<std::uint64_t> pair_count;    // indexed by class_id
    std::vector<std::uint64_t> linked_count;  // subset with an (i,j) edge
    std::vector<std::uint64_t> bag_of_cn;     // index = #CN size, all sizes
    CensusMode mode;
    unsigned cap = 0;  // classes recorded for cn_size <= cap
    std::string catalog_version;

    std::uint64_t bag(std::size_t size) const {
        return size < bag_of_cn.size() ? bag_of_cn[size] : 0;
    }
};

struct CommonNeighborhood {
    std::uint32_t cn_size = 0;
    bool overflow = false;  // cn_size > cap; mask not produced
    AdjMask mask;
};

// Exact |N(i) ∩ N(j)| plus, when within cap, the induced-subgraph mask with
// the common neighbors indexed in ascending node-id order.
CommonNeighborhood common_neighborhood(const Graph& g, NodeId i, NodeId j,
                                       unsigned cap);

// Streams unordered pairs with at least one common neighbor. Exact mode emits
// each qualifying pair once (candidates j > i from the union of the source's
// two-hop neighborhood). Node-sampled mode draws sources by independent
// inclusion and emits every qualifying partner of a sampled source.
void enumerate_pairs(const Graph& g, const CensusMode& mode,
                     const std::function<void(NodeId, NodeId)>& emit);

CensusTable run_census(const Graph& g, const GraphClassCatalog& catalog,
                       const CensusMode& mode, unsigned cap = 0,
                       unsigned threads = 0);  // cap 0 = catalog.max_k()

// class_id,k,pair_count,linked_count rows for every class with k <= cap.
void write_census_csv(const CensusTable& t, const GraphClassCatalog& catalog,
                      const std::string& path);
// Sidecar: mode, seed, cap, catalog version, bag_of_cn.
void write_census_sidecar(const CensusTable& t, const std::string& path);

// Reads the CSV + sidecar pair back; rejects catalog version mismatches.
CensusTable load_census(const std::string& csv_path, const std::string& sidecar_path,
                        const GraphClassCatalog& catalog);

}  // namespace netdiv
