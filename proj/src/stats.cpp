#include "netdiv/stats.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

#include "netdiv/error.hpp"
#include "netdiv/kernels/intersect.hpp"
#include "netdiv/parallel.hpp"

namespace netdiv {

namespace {

// Max finite BFS distance from src; farthest node returned (smallest id on ties).
std::pair<std::int64_t, NodeId> bfs_eccentricity(const Graph& g, NodeId src,
                                                 std::vector<std::int64_t>& dist,
                                                 std::vector<NodeId>& frontier,
                                                 std::vector<NodeId>& next) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    frontier.assign(1, src);
    std::int64_t level = 0;
    NodeId farthest = src;
    while (!frontier.empty()) {
        next.clear();
        ++level;
        for (NodeId v : frontier) {
            for (NodeId w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = level;
                    next.push_back(w);
                }
            }
        }
        if (!next.empty()) farthest = *std::min_element(next.begin(), next.end());
        frontier.swap(next);
    }
    std::int64_t ecc = 0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (dist[v] > ecc) ecc = dist[v];
    return {ecc, farthest};
}

std::int64_t exact_diameter(const Graph& g, unsigned threads) {
    NodeId n = g.node_count();
    if (n == 0) return 0;
    unsigned tcount = resolve_threads(threads);
    std::vector<std::int64_t> best(tcount, 0);
    parallel_chunks(n, tcount, 64, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        std::vector<std::int64_t> dist(n);
        std::vector<NodeId> frontier, next;
        for (std::uint64_t v = begin; v < end; ++v) {
            auto [ecc, far] = bfs_eccentricity(g, static_cast<NodeId>(v), dist, frontier, next);
            (void)far;
            if (ecc > best[w]) best[w] = ecc;
        }
    });
    return *std::max_element(best.begin(), best.end());
}

std::int64_t double_sweep_lower_bound(const Graph& g) {
    NodeId n = g.node_count();
    if (n == 0) return 0;
    std::vector<std::int64_t> dist(n);
    std::vector<NodeId> frontier, next;
    NodeId start = 0;
    for (NodeId v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(start)) start = v;
    std::int64_t lb = 0;
    for (int sweep = 0; sweep < 4; ++sweep) {
        auto [ecc, far] = bfs_eccentricity(g, start, dist, frontier, next);
        if (ecc > lb) lb = ecc;
        if (far == start) break;
        start = far;
    }
    return lb;
}

}  // namespace

NetworkStats network_stats(const Graph& g, const StatsOptions& opts) {
    NetworkStats s;
    NodeId n = g.node_count();
    s.node_count = n;
    s.edge_count = g.edge_count();
    if (n == 0) return s;
    s.avg_degree = 2.0 * static_cast<double>(s.edge_count) / static_cast<double>(n);

    std::vector<std::uint32_t> degrees(n);
    for (NodeId v = 0; v < n; ++v) degrees[v] = g.degree(v);
    std::vector<std::uint32_t> sorted = degrees;
    std::sort(sorted.begin(), sorted.end());
    auto pct = [&](double q) {
        return sorted[static_cast<std::size_t>(q * static_cast<double>(n - 1))];
    };
    s.degree_p10 = pct(0.10);
    s.degree_p50 = pct(0.50);
    s.degree_p90 = pct(0.90);
    s.degree_max = sorted.back();

    for (NodeId v = 0; v < n; ++v) {
        std::uint64_t d = degrees[v];
        s.wedges += d * (d - 1) / 2;
    }

    // Per-node closed wedges: t(v) = (1/2) * sum over neighbors u of
    // |N(v) ∩ N(u)|. Independent per node, so workers need no merges beyond
    // integer sums; total triangles = sum t(v) / 3.
    unsigned tcount = resolve_threads(opts.threads);
    std::vector<std::uint64_t> tri_sum(tcount, 0);
    std::vector<double> cc_sum(tcount, 0.0);
    parallel_chunks(n, tcount, 256, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t vi = begin; vi < end; ++vi) {
            auto v = static_cast<NodeId>(vi);
            auto nv = g.neighbors(v);
            if (nv.size() < 2) continue;
            std::uint64_t closed2 = 0;  // 2 * closed wedges at v
            for (NodeId u : nv) closed2 += kernels::intersect_count(nv, g.neighbors(u));
            tri_sum[w] += closed2 / 2;
            std::uint64_t dd = nv.size();
            cc_sum[w] += static_cast<double>(closed2 / 2) /
                         (static_cast<double>(dd) * static_cast<double>(dd - 1) / 2.0);
        }
    });
    std::uint64_t closed_total = 0;
    double cc_total = 0.0;
    for (unsigned w = 0; w < tcount; ++w) {
        closed_total += tri_sum[w];
        cc_total += cc_sum[w];
    }
    s.triangles = closed_total / 3;
    s.avg_cc = cc_total / static_cast<double>(n);
    s.global_cc = s.wedges > 0
                      ? 3.0 * static_cast<double>(s.triangles) / static_cast<double>(s.wedges)
                      : 0.0;

    switch (opts.diameter_mode) {
        case DiameterMode::skip:
            s.diameter = -1;
            break;
        case DiameterMode::exact:
            if (n > opts.exact_diameter_threshold)
                throw Error("exact diameter refused: " + std::to_string(n) + " nodes > threshold " +
                            std::to_string(opts.exact_diameter_threshold));
            s.diameter = exact_diameter(g, opts.threads);
            break;
        case DiameterMode::double_sweep_lower_bound:
            s.diameter = double_sweep_lower_bound(g);
            break;
    }
    return s;
}

namespace {

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

void write_stats_csv(const NetworkStats& s, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write stats csv: " + path);
    out << "node_count,edge_count,avg_degree,degree_p10,degree_p50,degree_p90,"
           "degree_max,avg_cc,global_cc,diameter,triangles,wedges\n";
    out << s.node_count << ',' << s.edge_count << ',' << fmt_double(s.avg_degree) << ','
        << s.degree_p10 << ',' << s.degree_p50 << ',' << s.degree_p90 << ','
        << s.degree_max << ',' << fmt_double(s.avg_cc) << ',' << fmt_double(s.global_cc)
        << ',' << s.diameter << ',' << s.triangles << ',' << s.wedges << '\n';
}

std::string stats_to_json(const NetworkStats& s) {
    std::ostringstream os;
    os.precision(17);
    os << "{\"node_count\":" << s.node_count << ",\"edge_count\":" << s.edge_count
       << ",\"avg_degree\":" << s.avg_degree << ",\"degree_p10\":" << s.degree_p10
       << ",\"degree_p50\":" << s.degree_p50 << ",\"degree_p90\":" << s.degree_p90
       << ",\"degree_max\":" << s.degree_max << ",\"avg_cc\":" << s.avg_cc
       << ",\"global_cc\":" << s.global_cc << ",\"diameter\":" << s.diameter
       << ",\"triangles\":" << s.triangles << ",\"wedges\":" << s.wedges << "}";
    return os.str();
}

const char* diameter_mode_name(DiameterMode m) {
    switch (m) {
        case DiameterMode::exact: return "exact";
        case DiameterMode::double_sweep_lower_bound: return "double_sweep_lower_bound";
        case DiameterMode::skip: return "skip";
    }
    return "?";
}

DiameterMode parse_diameter_mode(const std::string& name) {
    if (name == "exact") return DiameterMode::exact;
    if (name == "double_sweep_lower_bound" || name == "double_sweep")
        return DiameterMode::double_sweep_lower_bound;
    if (name == "skip") return DiameterMode::skip;
    throw Error("unknown diameter mode: " + name);
}

}  // namespace netdiv
