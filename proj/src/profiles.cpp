#include "netdiv/profiles.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

#include "netdiv/error.hpp"
#include "netdiv/parallel.hpp"
#include "netdiv/rng.hpp"

namespace netdiv {

HistogramGrid::HistogramGrid(std::uint32_t cap) {
    if (cap < 1) throw Error("histogram cap must be >= 1");
    std::uint64_t v = 1;
    for (; v <= std::min<std::uint64_t>(64, cap); ++v) uppers_.push_back(v);
    std::uint64_t upper = 128;
    while (uppers_.back() < cap) {
        uppers_.push_back(std::min<std::uint64_t>(upper, cap));
        upper *= 2;
    }
}

std::size_t HistogramGrid::bin_of(std::uint64_t value) const {
    auto it = std::lower_bound(uppers_.begin(), uppers_.end(), value);
    return static_cast<std::size_t>(it - uppers_.begin());  // end() = overflow bin
}

namespace {

// ESU enumeration of connected induced subgraphs of exactly `target` nodes.
// Candidates are restricted to ids above the root and to the exclusive
// neighborhood of the growing subgraph, so each subgraph is visited once.
// When sampling, every descent below the root happens with probability
// `prob`, making all subgraphs equally likely to be reached.
class EsuWorker {
public:
    EsuWorker(const Graph& g, const GraphClassCatalog& catalog, unsigned target,
              std::size_t n_classes, bool sampled, double prob)
        : g_(g),
          catalog_(catalog),
          target_(target),
          sampled_(sampled),
          prob_(prob),
          marked_(g.node_count(), false),
          counts_(n_classes, 0) {}

    void run_root(NodeId v, std::uint64_t seed) {
        if (sampled_) rng_.emplace(splitmix64(seed ^ (v * 0x9e3779b97f4a7c15ULL + 1)));
        sub_.assign(1, v);
        marked_[v] = true;
        std::vector<NodeId> ext;
        for (NodeId u : g_.neighbors(v)) {
            if (u > v) {
                ext.push_back(u);
                marked_[u] = true;
            }
        }
        extend(v, ext);
        marked_[v] = false;
        for (NodeId u : ext) marked_[u] = false;
        sub_.clear();
    }

    const std::vector<std::uint64_t>& counts() const { return counts_; }

private:
    void record() {
        std::array<NodeId, 6> nodes{};
        auto k = static_cast<unsigned>(sub_.size());
        std::copy(sub_.begin(), sub_.end(), nodes.begin());
        std::sort(nodes.begin(), nodes.begin() + k);
        AdjMask m{static_cast<std::uint8_t>(k), 0};
        for (unsigned a = 0; a + 1 < k; ++a)
            for (unsigned b = a + 1; b < k; ++b)
                if (g_.has_edge(nodes[a], nodes[b]))
                    m.bits |= 1u << mask_bit_index(k, a, b);
        ++counts_[catalog_.classify(m)];
    }

    void extend(NodeId root, std::vector<NodeId>& ext) {
        if (sub_.size() == target_) {
            record();
            return;
        }
        for (std::size_t idx = 0; idx < ext.size(); ++idx) {
            NodeId w = ext[idx];
            if (sampled_ && !(rng_->uniform() < prob_)) continue;
            std::size_t first_new = scratch_.size();
            for (NodeId u : g_.neighbors(w)) {
                if (u > root && !marked_[u]) {
                    scratch_.push_back(u);
                    marked_[u] = true;
                }
            }
            std::vector<NodeId> next(ext.begin() + static_cast<std::ptrdiff_t>(idx) + 1,
                                     ext.end());
            next.insert(next.end(), scratch_.begin() + static_cast<std::ptrdiff_t>(first_new),
                        scratch_.end());
            sub_.push_back(w);
            extend(root, next);
            sub_.pop_back();
            for (std::size_t s = first_new; s < scratch_.size(); ++s)
                marked_[scratch_[s]] = false;
            scratch_.resize(first_new);
        }
    }

    const Graph& g_;
    const GraphClassCatalog& catalog_;
    unsigned target_;
    bool sampled_;
    double prob_;
    std::optional<Rng> rng_;
    std::vector<bool> marked_;
    std::vector<NodeId> sub_;
    std::vector<NodeId> scratch_;
    std::vector<std::uint64_t> counts_;
};

}  // namespace

std::vector<std::uint64_t> connected_subgraph_census(const Graph& g,
                                                     const GraphClassCatalog& catalog,
                                                     unsigned k,
                                                     const BaselineOptions& opts) {
    if (k < 2 || k > catalog.max_k())
        throw Error("connected_subgraph_census: size out of range");
    bool sampled = g.node_count() > opts.exact_threshold;
    unsigned tcount = resolve_threads(opts.threads);

    std::vector<EsuWorker> workers;
    workers.reserve(tcount);
    for (unsigned w = 0; w < tcount; ++w)
        workers.emplace_back(g, catalog, k, catalog.size(), sampled, opts.sample_prob);

    parallel_chunks(g.node_count(), tcount, 64,
                    [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
                        for (std::uint64_t v = begin; v < end; ++v)
                            workers[w].run_root(static_cast<NodeId>(v), opts.seed);
                    });

    std::vector<std::uint64_t> total(catalog.size(), 0);
    for (const auto& w : workers)
        for (std::size_t c = 0; c < total.size(); ++c) total[c] += w.counts()[c];
    return total;
}

namespace {

std::vector<double> subgraph_frequency_profile(const Graph& g,
                                               const GraphClassCatalog& catalog,
                                               const BaselineOptions& opts) {
    std::vector<double> out;
    for (unsigned k = 3; k <= 4; ++k) {
        auto counts = connected_subgraph_census(g, catalog, k, opts);
        std::vector<std::uint32_t> connected;
        for (auto cid : catalog.class_ids_of_size(k))
            if (catalog.cls(cid).component_count == 1) connected.push_back(cid);
        std::uint64_t total = 0;
        for (auto cid : connected) total += counts[cid];
        for (auto cid : connected)
            out.push_back(total > 0 ? static_cast<double>(counts[cid]) /
                                          static_cast<double>(total)
                                    : std::numeric_limits<double>::quiet_NaN());
    }
    return out;
}

std::vector<double> percentile_degree_profile(const Graph& g) {
    NodeId n = g.node_count();
    if (n == 0) return std::vector<double>(11, std::numeric_limits<double>::quiet_NaN());
    std::vector<std::uint32_t> degrees(n);
    for (NodeId v = 0; v < n; ++v) degrees[v] = g.degree(v);
    std::sort(degrees.begin(), degrees.end());
    std::vector<double> out;
    out.reserve(11);
    for (int q = 0; q <= 10; ++q) {
        auto idx = static_cast<std::size_t>((static_cast<double>(q) / 10.0) *
                                            static_cast<double>(n - 1));
        out.push_back(degrees[idx]);
    }
    return out;
}

std::vector<double> bag_of_degrees_profile(const Graph& g, const BaselineOptions& opts) {
    HistogramGrid grid(opts.hist_cap);
    std::vector<double> out(grid.bin_count(), 0.0);
    NodeId n = g.node_count();
    if (n == 0) return out;
    for (NodeId v = 0; v < n; ++v) {
        std::uint32_t d = g.degree(v);
        if (d >= 1) out[grid.bin_of(d)] += 1.0;
    }
    for (auto& cell : out) cell /= static_cast<double>(n);
    return out;
}

std::vector<double> bag_of_cns_profile(const CensusTable& census,
                                       const BaselineOptions& opts) {
    HistogramGrid grid(opts.hist_cap);
    std::vector<double> out(grid.bin_count(), 0.0);
    std::uint64_t total = 0;
    for (std::size_t s = 1; s < census.bag_of_cn.size(); ++s) {
        out[grid.bin_of(s)] += static_cast<double>(census.bag_of_cn[s]);
        total += census.bag_of_cn[s];
    }
    if (total > 0)
        for (auto& cell : out) cell /= static_cast<double>(total);
    return out;
}

}  // namespace

std::vector<double> baseline_profile(const Graph& g, const CensusTable* census,
                                     ProfileKind kind,
                                     const GraphClassCatalog& catalog,
                                     const BaselineOptions& opts) {
    switch (kind) {
        case ProfileKind::subgraph_frequency:
            return subgraph_frequency_profile(g, catalog, opts);
        case ProfileKind::percentile_degrees:
            return percentile_degree_profile(g);
        case ProfileKind::bag_of_degrees:
            return bag_of_degrees_profile(g, opts);
        case ProfileKind::bag_of_cns:
            if (!census) throw Error("bag_of_cns profile requires a census");
            return bag_of_cns_profile(*census, opts);
        case ProfileKind::diversity_signature:
            throw Error("diversity_signature is produced by the signature stage");
    }
    throw Error("unknown profile kind");
}

const char* profile_kind_name(ProfileKind k) {
    switch (k) {
        case ProfileKind::diversity_signature: return "diversity_signature";
        case ProfileKind::subgraph_frequency: return "subgraph_frequency";
        case ProfileKind::percentile_degrees: return "percentile_degrees";
        case ProfileKind::bag_of_degrees: return "bag_of_degrees";
        case ProfileKind::bag_of_cns: return "bag_of_cns";
    }
    return "?";
}

ProfileKind parse_profile_kind(const std::string& name) {
    if (name == "diversity_signature") return ProfileKind::diversity_signature;
    if (name == "subgraph_frequency") return ProfileKind::subgraph_frequency;
    if (name == "percentile_degrees") return ProfileKind::percentile_degrees;
    if (name == "bag_of_degrees") return ProfileKind::bag_of_degrees;
    if (name == "bag_of_cns") return ProfileKind::bag_of_cns;
    throw Error("unknown profile kind: " + name);
}

void write_profile_csv(const std::vector<double>& values, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write profile csv: " + path);
    out.precision(17);
    out << "index,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) {
        out << i << ',';
        if (std::isnan(values[i]))
            out << "nan";
        else
            out << values[i];
        out << '\n';
    }
}

std::vector<double> load_profile_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open profile csv: " + path);
    std::vector<double> values;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line.rfind("index", 0) == 0 || line[0] == '#') continue;
        auto comma = line.find(',');
        if (comma == std::string::npos)
            throw ParseError("profile csv: expected index,value", lineno);
        values.push_back(std::stod(line.substr(comma + 1)));
    }
    return values;
}

}  // namespace netdiv
