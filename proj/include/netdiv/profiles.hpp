#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netdiv/catalog.hpp"
#include "netdiv/census.hpp"
#include "netdiv/cluster.hpp"
#include "netdiv/graph.hpp"

namespace netdiv {

// Fixed histogram grid shared across networks so bag vectors align: exact
// bins 1..64, log2-width bins up to cap, one overflow bin above cap.
class HistogramGrid {
public:
    explicit HistogramGrid(std::uint32_t cap = 1024);
    std::size_t bin_count() const { return uppers_.size() + 1; }
    std::size_t bin_of(std::uint64_t value) const;  // value >= 1

private:
    std::vector<std::uint64_t> uppers_;  // inclusive upper bound per bin
};

struct BaselineOptions {
    // Above this many nodes the subgraph census switches from exact ESU
    // enumeration to uniform connected-subgraph sampling.
    std::uint32_t exact_threshold = 50000;
    double sample_prob = 0.3;  // per-depth descent probability when sampling
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::uint32_t hist_cap = 1024;
};

// Counts of connected induced subgraphs on exactly k nodes (k in 3..4),
// indexed by catalog class id. Exact for n <= threshold, sampled otherwise.
std::vector<std::uint64_t> connected_subgraph_census(const Graph& g,
                                                     const GraphClassCatalog& catalog,
                                                     unsigned k,
                                                     const BaselineOptions& opts = {});

// The four comparison profiles:
//  subgraph_frequency: per-size normalized frequencies of connected induced
//    subgraphs on 3 nodes (2 cells) and 4 nodes (6 cells);
//  percentile_degrees: degrees at 0%,10%,...,100% of the ascending sequence;
//  bag_of_degrees: normalized degree histogram on the fixed grid;
//  bag_of_cns: normalized #CN histogram on the fixed grid (census required).
std::vector<double> baseline_profile(const Graph& g, const CensusTable* census,
                                     ProfileKind kind,
                                     const GraphClassCatalog& catalog,
                                     const BaselineOptions& opts = {});

const char* profile_kind_name(ProfileKind k);
ProfileKind parse_profile_kind(const std::string& name);

// Plain "index,value" vector files used by the compare stage.
void write_profile_csv(const std::vector<double>& values, const std::string& path);
std::vector<double> load_profile_csv(const std::string& path);

}  // namespace netdiv
