#pragma once

#include <cstdint>
#include <string>

#include "netdiv/graph.hpp"

namespace netdiv {

struct NetworkStats {
    std::uint64_t node_count = 0;
    std::uint64_t edge_count = 0;
    double avg_degree = 0.0;
    std::uint32_t degree_p10 = 0;
    std::uint32_t degree_p50 = 0;
    std::uint32_t degree_p90 = 0;
    std::uint32_t degree_max = 0;
    double avg_cc = 0.0;
    double global_cc = 0.0;      // 3*triangles / wedges (0 when wedges == 0)
    std::int64_t diameter = -1;  // -1 when skipped; lower bound in double-sweep mode
    std::uint64_t triangles = 0;
    std::uint64_t wedges = 0;    // sum over nodes of deg*(deg-1)/2
};

enum class DiameterMode { exact, double_sweep_lower_bound, skip };

struct StatsOptions {
    DiameterMode diameter_mode = DiameterMode::double_sweep_lower_bound;
    // Exact diameter (all-sources BFS) refused above this many nodes.
    std::uint32_t exact_diameter_threshold = 20000;
    unsigned threads = 0;  // 0 = auto
};

// Percentile q over the ascending degree sequence, element at floor(q*(n-1)).
NetworkStats network_stats(const Graph& g, const StatsOptions& opts = {});

void write_stats_csv(const NetworkStats& s, const std::string& path);
std::string stats_to_json(const NetworkStats& s);

const char* diameter_mode_name(DiameterMode m);
DiameterMode parse_diameter_mode(const std::string& name);

}  // namespace netdiv
