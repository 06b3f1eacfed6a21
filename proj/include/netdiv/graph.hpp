#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace netdiv {

using NodeId = std::uint32_t;

// Immutable undirected graph in compressed sorted-adjacency form. Node ids
// are dense 0..n-1; original input ids are kept in original_ids (identity for
// generated graphs). Adjacency lists are strictly ascending with no
// self-loops, and membership is symmetric. Safe for unsynchronized concurrent
// reads after construction.
class Graph {
public:
    Graph() = default;

    // edges: unordered pairs, no self-loops, no duplicates (u < v not required).
    static Graph from_edges(NodeId node_count,
                            std::span<const std::pair<NodeId, NodeId>> edges);
    static Graph from_edges(NodeId node_count,
                            const std::vector<std::pair<NodeId, NodeId>>& edges) {
        return from_edges(node_count,
                          std::span<const std::pair<NodeId, NodeId>>(edges));
    }

    NodeId node_count() const { return static_cast<NodeId>(offsets_.size() - 1); }
    std::uint64_t edge_count() const { return adjacency_.size() / 2; }

    std::span<const NodeId> neighbors(NodeId v) const {
        return {adjacency_.data() + offsets_[v],
                static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
    }
    std::uint32_t degree(NodeId v) const {
        return static_cast<std::uint32_t>(offsets_[v + 1] - offsets_[v]);
    }
    bool has_edge(NodeId u, NodeId v) const;

    // Dense id -> original input id. Size node_count().
    const std::vector<std::uint64_t>& original_ids() const { return original_ids_; }
    void set_original_ids(std::vector<std::uint64_t> ids) { original_ids_ = std::move(ids); }

    // All unordered edges as (u, v) with u < v, ascending.
    std::vector<std::pair<NodeId, NodeId>> edges() const;

private:
    std::vector<std::uint64_t> offsets_{0};
    std::vector<NodeId> adjacency_;
    std::vector<std::uint64_t> original_ids_;
};

enum class DirectedMode { already_undirected, reciprocal_only, symmetrize };

struct CleaningPolicy {
    DirectedMode directed_mode = DirectedMode::already_undirected;
    bool keep_lcc = false;
};

// Parses a whitespace-separated "src dst" edge list ('#' lines are comments),
// cleans it per the policy, and compacts node ids to 0..n-1 in ascending
// original-id order. Throws ParseError on malformed lines and EmptyGraphError
// when nothing remains.
Graph load_edge_list(const std::string& path, const CleaningPolicy& policy);

// Largest connected component; ties broken by smallest minimum original id.
// The returned graph's original_ids compose through to the input's.
Graph largest_connected_component(const Graph& g);

// One "i j" line per unordered edge, smaller original id first.
void write_edge_list(const Graph& g, const std::string& path);

// CSV "dense_id,original_id".
void write_id_map(const Graph& g, const std::string& path);

const char* directed_mode_name(DirectedMode m);
DirectedMode parse_directed_mode(const std::string& name);

}  // namespace netdiv
