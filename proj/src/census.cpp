#include "netdiv/census.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "netdiv/error.hpp"
#include "netdiv/kernels/intersect.hpp"
#include "netdiv/parallel.hpp"
#include "netdiv/rng.hpp"

namespace netdiv {

namespace {

// Stateless per-source sampling decision so results are independent of
// worker count and enumeration order.
bool source_sampled(std::uint64_t seed, NodeId v, double rate) {
    return static_cast<double>(splitmix64(seed ^ (0x9e3779b97f4a7c15ULL * (v + 1))) >> 11) *
               0x1.0p-53 <
           rate;
}

// Scratch for one worker: stamp-based dedup of candidate partners.
struct CandidateBuffer {
    std::vector<std::uint32_t> stamp;
    std::uint32_t epoch = 0;
    std::vector<NodeId> out;

    explicit CandidateBuffer(NodeId n) : stamp(n, 0) {}

    // Qualifying partners of i: union of N(w) over w in N(i), j != i,
    // restricted to j > i in exact mode.
    void gather(const Graph& g, NodeId i, bool only_greater) {
        out.clear();
        ++epoch;
        for (NodeId w : g.neighbors(i)) {
            for (NodeId j : g.neighbors(w)) {
                if (only_greater ? j <= i : j == i) continue;
                if (stamp[j] != epoch) {
                    stamp[j] = epoch;
                    out.push_back(j);
                }
            }
        }
    }
};

AdjMask induced_mask(const Graph& g, const std::uint32_t* cn, unsigned size) {
    AdjMask m{static_cast<std::uint8_t>(size), 0};
    for (unsigned a = 0; a + 1 < size; ++a)
        for (unsigned b = a + 1; b < size; ++b)
            if (g.has_edge(cn[a], cn[b])) m.bits |= 1u << mask_bit_index(size, a, b);
    return m;
}

}  // namespace

CommonNeighborhood common_neighborhood(const Graph& g, NodeId i, NodeId j,
                                       unsigned cap) {
    if (i == j) throw Error("common_neighborhood: i == j");
    auto ni = g.neighbors(i), nj = g.neighbors(j);
    std::vector<std::uint32_t> buf(std::min(ni.size(), nj.size()));
    auto size = static_cast<std::uint32_t>(kernels::intersect(ni, nj, buf.data()));
    CommonNeighborhood res;
    res.cn_size = size;
    if (size > cap) {
        res.overflow = true;
        return res;
    }
    res.mask = induced_mask(g, buf.data(), size);
    return res;
}

void enumerate_pairs(const Graph& g, const CensusMode& mode,
                     const std::function<void(NodeId, NodeId)>& emit) {
    if (mode.sampled && !(mode.rate > 0.0 && mode.rate <= 1.0))
        throw Error("sampling rate must be in (0,1]");
    CandidateBuffer buf(g.node_count());
    for (NodeId i = 0; i < g.node_count(); ++i) {
        if (mode.sampled && !source_sampled(mode.seed, i, mode.rate)) continue;
        buf.gather(g, i, /*only_greater=*/!mode.sampled);
        for (NodeId j : buf.out) emit(i, j);
    }
}

CensusTable run_census(const Graph& g, const GraphClassCatalog& catalog,
                       const CensusMode& mode, unsigned cap, unsigned threads) {
    if (cap == 0) cap = catalog.max_k();
    if (cap > catalog.max_k())
        throw Error("census cap exceeds catalog max_k");
    if (mode.sampled && !(mode.rate > 0.0 && mode.rate <= 1.0))
        throw Error("sampling rate must be in (0,1]");

    const NodeId n = g.node_count();
    const std::size_t n_classes = catalog.size();
    unsigned tcount = resolve_threads(threads);

    struct Local {
        std::vector<std::uint64_t> pairs, linked, bag;
        CandidateBuffer cand;
        std::vector<std::uint32_t> cn;
        explicit Local(std::size_t n_classes, NodeId n)
            : pairs(n_classes, 0), linked(n_classes, 0), cand(n) {}
    };
    std::vector<Local> locals;
    locals.reserve(tcount);
    for (unsigned w = 0; w < tcount; ++w) locals.emplace_back(n_classes, n);

    parallel_chunks(n, tcount, 128, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
        Local& loc = locals[w];
        for (std::uint64_t iv = begin; iv < end; ++iv) {
            auto i = static_cast<NodeId>(iv);
            if (mode.sampled && !source_sampled(mode.seed, i, mode.rate)) continue;
            loc.cand.gather(g, i, /*only_greater=*/!mode.sampled);
            auto ni = g.neighbors(i);
            for (NodeId j : loc.cand.out) {
                auto nj = g.neighbors(j);
                loc.cn.resize(std::min(ni.size(), nj.size()));
                auto size = static_cast<std::uint32_t>(
                    kernels::intersect(ni, nj, loc.cn.data()));
                if (size >= loc.bag.size()) loc.bag.resize(size + 1, 0);
                ++loc.bag[size];
                if (size > cap) continue;
                AdjMask m = induced_mask(g, loc.cn.data(), size);
                std::uint32_t cid = catalog.classify(m);
                ++loc.pairs[cid];
                if (kernels::contains(nj, i)) ++loc.linked[cid];
            }
        }
    });

    CensusTable t;
    t.pair_count.assign(n_classes, 0);
    t.linked_count.assign(n_classes, 0);
    t.mode = mode;
    t.cap = cap;
    t.catalog_version = catalog.version();
    std::size_t bag_len = 1;
    for (auto& loc : locals) bag_len = std::max(bag_len, loc.bag.size());
    t.bag_of_cn.assign(bag_len, 0);
    for (auto& loc : locals) {
        for (std::size_t c = 0; c < n_classes; ++c) {
            t.pair_count[c] += loc.pairs[c];
            t.linked_count[c] += loc.linked[c];
        }
        for (std::size_t s = 0; s < loc.bag.size(); ++s) t.bag_of_cn[s] += loc.bag[s];
    }
    return t;
}

void write_census_csv(const CensusTable& t, const GraphClassCatalog& catalog,
                      const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write census csv: " + path);
    out << "class_id,k,pair_count,linked_count\n";
    for (const auto& c : catalog.classes()) {
        if (c.k > t.cap) continue;
        out << c.class_id << ',' << unsigned(c.k) << ',' << t.pair_count[c.class_id]
            << ',' << t.linked_count[c.class_id] << '\n';
    }
}

void write_census_sidecar(const CensusTable& t, const std::string& path) {
    nlohmann::json j;
    j["mode"] = t.mode.sampled ? "node_sampled" : "exact";
    if (t.mode.sampled) {
        j["rate"] = t.mode.rate;
        j["seed"] = t.mode.seed;
    }
    j["cap"] = t.cap;
    j["catalog_version"] = t.catalog_version;
    nlohmann::json bag = nlohmann::json::object();
    for (std::size_t s = 0; s < t.bag_of_cn.size(); ++s)
        if (t.bag_of_cn[s] > 0) bag[std::to_string(s)] = t.bag_of_cn[s];
    j["bag_of_cn"] = bag;
    std::ofstream out(path);
    if (!out) throw Error("cannot write census sidecar: " + path);
    out << j.dump(2) << '\n';
}

CensusTable load_census(const std::string& csv_path, const std::string& sidecar_path,
                        const GraphClassCatalog& catalog) {
    std::ifstream side(sidecar_path);
    if (!side) throw Error("cannot open census sidecar: " + sidecar_path);
    nlohmann::json j = nlohmann::json::parse(side);
    CensusTable t;
    if (j.at("mode") == "node_sampled") {
        t.mode.sampled = true;
        t.mode.rate = j.at("rate").get<double>();
        t.mode.seed = j.at("seed").get<std::uint64_t>();
    }
    t.cap = j.at("cap").get<unsigned>();
    t.catalog_version = j.at("catalog_version").get<std::string>();
    if (t.catalog_version != catalog.version())
        throw Error("census catalog version mismatch: file has " + t.catalog_version +
                    ", catalog is " + catalog.version());
    for (auto& [key, val] : j.at("bag_of_cn").items()) {
        auto s = static_cast<std::size_t>(std::stoull(key));
        if (s >= t.bag_of_cn.size()) t.bag_of_cn.resize(s + 1, 0);
        t.bag_of_cn[s] = val.get<std::uint64_t>();
    }
    if (t.bag_of_cn.empty()) t.bag_of_cn.assign(1, 0);

    t.pair_count.assign(catalog.size(), 0);
    t.linked_count.assign(catalog.size(), 0);
    std::ifstream in(csv_path);
    if (!in) throw Error("cannot open census csv: " + csv_path);
    std::string line;
    std::getline(in, line);  // header
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string tok;
        std::uint64_t fields[4];
        for (int f = 0; f < 4; ++f) {
            if (!std::getline(ss, tok, ','))
                throw ParseError("census csv: expected 4 fields", lineno);
            fields[f] = std::stoull(tok);
        }
        auto cid = static_cast<std::uint32_t>(fields[0]);
        if (cid >= catalog.size())
            throw ParseError("census csv: class_id out of range", lineno);
        t.pair_count[cid] = fields[2];
        t.linked_count[cid] = fields[3];
    }
    return t;
}

}  // namespace netdiv
