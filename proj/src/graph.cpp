#include "netdiv/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <queue>

#include "netdiv/error.hpp"
#include "netdiv/kernels/intersect.hpp"

namespace netdiv {

Graph Graph::from_edges(NodeId node_count,
                        std::span<const std::pair<NodeId, NodeId>> edges) {
    Graph g;
    g.offsets_.assign(static_cast<std::size_t>(node_count) + 1, 0);
    for (auto [u, v] : edges) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 1; i < g.offsets_.size(); ++i)
        g.offsets_[i] += g.offsets_[i - 1];
    g.adjacency_.resize(g.offsets_.back());
    std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        g.adjacency_[cursor[u]++] = v;
        g.adjacency_[cursor[v]++] = u;
    }
    for (NodeId v = 0; v < node_count; ++v) {
        auto begin = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto end = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(begin, end);
    }
    g.original_ids_.resize(node_count);
    std::iota(g.original_ids_.begin(), g.original_ids_.end(), 0);
    return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
    if (degree(u) > degree(v)) std::swap(u, v);
    return kernels::contains(neighbors(u), v);
}

std::vector<std::pair<NodeId, NodeId>> Graph::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    out.reserve(edge_count());
    for (NodeId u = 0; u < node_count(); ++u)
        for (NodeId v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

struct RawEdges {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> directed;  // as read
};

RawEdges read_raw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open edge list: " + path);
    RawEdges raw;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t pos = 0;
        auto skip_ws = [&] {
            while (pos < line.size() &&
                   std::isspace(static_cast<unsigned char>(line[pos])))
                ++pos;
        };
        skip_ws();
        if (pos == line.size() || line[pos] == '#') continue;
        std::uint64_t ids[2];
        for (int t = 0; t < 2; ++t) {
            skip_ws();
            std::size_t start = pos;
            while (pos < line.size() &&
                   !std::isspace(static_cast<unsigned char>(line[pos])))
                ++pos;
            auto [ptr, ec] = std::from_chars(line.data() + start, line.data() + pos, ids[t]);
            if (ec != std::errc() || ptr != line.data() + pos || start == pos)
                throw ParseError("malformed edge line: expected two integers", lineno);
        }
        skip_ws();
        if (pos != line.size())
            throw ParseError("malformed edge line: trailing tokens", lineno);
        raw.directed.emplace_back(ids[0], ids[1]);
    }
    return raw;
}

}  // namespace

Graph load_edge_list(const std::string& path, const CleaningPolicy& policy) {
    RawEdges raw = read_raw(path);

    // Compact ids in ascending original order; every mentioned node is kept
    // (even if all its edges are dropped) so keep_lcc can prune it explicitly.
    std::vector<std::uint64_t> ids;
    ids.reserve(raw.directed.size() * 2);
    for (auto [s, d] : raw.directed) {
        ids.push_back(s);
        ids.push_back(d);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.empty()) throw EmptyGraphError("no nodes after cleaning: " + path);

    auto dense = [&](std::uint64_t orig) {
        return static_cast<NodeId>(
            std::lower_bound(ids.begin(), ids.end(), orig) - ids.begin());
    };

    std::vector<std::pair<NodeId, NodeId>> dir;
    dir.reserve(raw.directed.size());
    for (auto [s, d] : raw.directed) {
        if (s == d) continue;  // self-loop
        dir.emplace_back(dense(s), dense(d));
    }

    std::vector<std::pair<NodeId, NodeId>> undirected;
    if (policy.directed_mode == DirectedMode::reciprocal_only) {
        std::sort(dir.begin(), dir.end());
        dir.erase(std::unique(dir.begin(), dir.end()), dir.end());
        for (auto [s, d] : dir) {
            if (s < d && std::binary_search(dir.begin(), dir.end(),
                                            std::make_pair(d, s)))
                undirected.emplace_back(s, d);
        }
    } else {
        // symmetrize and already_undirected both treat a line as an edge
        for (auto& [s, d] : dir)
            if (s > d) std::swap(s, d);
        std::sort(dir.begin(), dir.end());
        dir.erase(std::unique(dir.begin(), dir.end()), dir.end());
        undirected = std::move(dir);
    }

    Graph g = Graph::from_edges(static_cast<NodeId>(ids.size()), undirected);
    g.set_original_ids(std::move(ids));
    if (policy.keep_lcc) g = largest_connected_component(g);
    if (g.node_count() == 0) throw EmptyGraphError("no nodes after cleaning: " + path);
    return g;
}

Graph largest_connected_component(const Graph& g) {
    NodeId n = g.node_count();
    if (n == 0) return g;

    std::vector<NodeId> comp(n, n);  // n = unvisited
    NodeId comp_count = 0;
    std::vector<std::uint64_t> comp_size;
    std::vector<NodeId> queue;
    for (NodeId start = 0; start < n; ++start) {
        if (comp[start] != n) continue;
        NodeId c = comp_count++;
        comp_size.push_back(0);
        queue.assign(1, start);
        comp[start] = c;
        while (!queue.empty()) {
            NodeId v = queue.back();
            queue.pop_back();
            ++comp_size[c];
            for (NodeId w : g.neighbors(v)) {
                if (comp[w] == n) {
                    comp[w] = c;
                    queue.push_back(w);
                }
            }
        }
    }

    // Components are discovered in ascending order of their minimum dense id,
    // and dense ids are assigned in ascending original-id order, so the first
    // component of maximum size wins the tie-break.
    NodeId best = 0;
    for (NodeId c = 1; c < comp_count; ++c)
        if (comp_size[c] > comp_size[best]) best = c;

    std::vector<NodeId> remap(n, n);
    std::vector<std::uint64_t> kept_orig;
    NodeId kept = 0;
    for (NodeId v = 0; v < n; ++v) {
        if (comp[v] == best) {
            remap[v] = kept++;
            kept_orig.push_back(g.original_ids()[v]);
        }
    }

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(g.edge_count());
    for (NodeId u = 0; u < n; ++u) {
        if (comp[u] != best) continue;
        for (NodeId v : g.neighbors(u))
            if (u < v) edges.emplace_back(remap[u], remap[v]);
    }
    Graph out = Graph::from_edges(kept, edges);
    out.set_original_ids(std::move(kept_orig));
    return out;
}

void write_edge_list(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write edge list: " + path);
    const auto& orig = g.original_ids();
    for (NodeId u = 0; u < g.node_count(); ++u) {
        for (NodeId v : g.neighbors(u)) {
            if (u >= v) continue;
            std::uint64_t a = orig[u], b = orig[v];
            if (a > b) std::swap(a, b);
            out << a << ' ' << b << '\n';
        }
    }
}

void write_id_map(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write id map: " + path);
    out << "dense_id,original_id\n";
    for (NodeId v = 0; v < g.node_count(); ++v)
        out << v << ',' << g.original_ids()[v] << '\n';
}

const char* directed_mode_name(DirectedMode m) {
    switch (m) {
        case DirectedMode::already_undirected: return "already_undirected";
        case DirectedMode::reciprocal_only: return "reciprocal_only";
        case DirectedMode::symmetrize: return "symmetrize";
    }
    return "?";
}

DirectedMode parse_directed_mode(const std::string& name) {
    if (name == "already_undirected") return DirectedMode::already_undirected;
    if (name == "reciprocal_only") return DirectedMode::reciprocal_only;
    if (name == "symmetrize") return DirectedMode::symmetrize;
    throw Error("unknown directed mode: " + name);
}

}  // namespace netdiv
