#include "netdiv/randgraph.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "netdiv/error.hpp"
#include "netdiv/rng.hpp"

namespace netdiv {

namespace {

std::uint64_t edge_key(std::uint64_t a, std::uint64_t b) {
    if (a > b) std::swap(a, b);
    return (a << 32) | b;
}

Graph er_generate(const ErSpec& spec, std::uint64_t seed) {
    if (!(spec.p > 0.0 && spec.p < 1.0)) throw Error("er: p must be in (0,1)");
    if (spec.n < 2) throw Error("er: n must be >= 2");
    Rng rng(seed);
    const std::uint64_t n = spec.n;
    const std::uint64_t total = n * (n - 1) / 2;
    const double log1mp = std::log1p(-spec.p);

    // Pair t in row-major order over (i, j), i < j; row i starts at
    // base(i) = i*(n-1) - i*(i-1)/2.
    auto row_base = [n](std::uint64_t i) { return i * (n - 1) - i * (i - 1) / 2; };
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(static_cast<double>(total) * spec.p * 1.05) + 16);

    std::uint64_t pos = 0;
    bool first = true;
    while (true) {
        double u = rng.uniform();
        // geometric gap: failures before the next success
        auto gap = static_cast<std::uint64_t>(std::floor(std::log1p(-u) / log1mp));
        pos += gap + (first ? 0 : 1);
        first = false;
        if (pos >= total) break;
        // invert the row base with a float guess plus integer fixup
        double nn = static_cast<double>(n) - 0.5;
        auto i = static_cast<std::uint64_t>(
            std::max(0.0, nn - std::sqrt(std::max(0.0, nn * nn - 2.0 * static_cast<double>(pos)))));
        if (i >= n - 1) i = n - 2;
        while (i > 0 && row_base(i) > pos) --i;
        while (i + 2 < n && row_base(i + 1) <= pos) ++i;
        std::uint64_t j = i + 1 + (pos - row_base(i));
        edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
    }
    return Graph::from_edges(static_cast<NodeId>(n), edges);
}

Graph ba_generate(const BaSpec& spec, std::uint64_t seed) {
    if (spec.m < 1 || spec.m >= spec.n) throw Error("ba: need 1 <= m < n");
    Rng rng(seed);
    const std::uint64_t n = spec.n, m = spec.m;

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(m * (m + 1) / 2 + (n - m - 1) * m);
    // Every edge contributes both endpoints, so sampling an entry uniformly
    // is degree-proportional sampling.
    std::vector<NodeId> endpoints;
    endpoints.reserve(2 * edges.capacity());

    for (std::uint64_t i = 0; i + 1 <= m; ++i) {
        for (std::uint64_t j = i + 1; j <= m; ++j) {
            edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
            endpoints.push_back(static_cast<NodeId>(i));
            endpoints.push_back(static_cast<NodeId>(j));
        }
    }

    std::vector<NodeId> chosen;
    for (std::uint64_t v = m + 1; v < n; ++v) {
        chosen.clear();
        while (chosen.size() < m) {
            NodeId t = endpoints[rng.uniform_int(endpoints.size())];
            if (std::find(chosen.begin(), chosen.end(), t) == chosen.end())
                chosen.push_back(t);
        }
        for (NodeId t : chosen) {
            edges.emplace_back(static_cast<NodeId>(v), t);
            endpoints.push_back(static_cast<NodeId>(v));
            endpoints.push_back(t);
        }
    }
    return Graph::from_edges(static_cast<NodeId>(n), edges);
}

Graph ws_generate(const WsSpec& spec, std::uint64_t seed) {
    if (spec.k % 2 != 0 || spec.k >= spec.n || spec.k < 2)
        throw Error("ws: need even k with 2 <= k < n");
    if (!(spec.beta >= 0.0 && spec.beta <= 1.0)) throw Error("ws: beta must be in [0,1]");
    Rng rng(seed);
    const std::uint64_t n = spec.n, half = spec.k / 2;

    std::unordered_set<std::uint64_t> edge_set;
    edge_set.reserve(n * half * 2);
    std::vector<std::uint64_t> degree(n, 0);
    auto add = [&](std::uint64_t a, std::uint64_t b) {
        edge_set.insert(edge_key(a, b));
        ++degree[a];
        ++degree[b];
    };
    auto remove = [&](std::uint64_t a, std::uint64_t b) {
        edge_set.erase(edge_key(a, b));
        --degree[a];
        --degree[b];
    };
    auto has = [&](std::uint64_t a, std::uint64_t b) {
        return edge_set.count(edge_key(a, b)) > 0;
    };

    for (std::uint64_t d = 1; d <= half; ++d)
        for (std::uint64_t i = 0; i < n; ++i) add(i, (i + d) % n);

    // Original rewiring order: one lattice distance at a time around the ring;
    // the far endpoint moves to a uniform non-self, non-duplicate target.
    for (std::uint64_t d = 1; d <= half; ++d) {
        for (std::uint64_t i = 0; i < n; ++i) {
            std::uint64_t far = (i + d) % n;
            if (!has(i, far)) continue;  // already rewired away by an earlier pass
            if (!rng.bernoulli(spec.beta)) continue;
            if (degree[i] >= n - 1) continue;  // no free slot
            std::uint64_t target;
            do {
                target = rng.uniform_int(n);
            } while (target == i || has(i, target));
            remove(i, far);
            add(i, target);
        }
    }

    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(edge_set.size());
    for (std::uint64_t key : edge_set)
        edges.emplace_back(static_cast<NodeId>(key >> 32),
                           static_cast<NodeId>(key & 0xffffffffu));
    std::sort(edges.begin(), edges.end());
    return Graph::from_edges(static_cast<NodeId>(n), edges);
}

std::string fmt_p(double v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
    if (std::holds_alternative<ErSpec>(spec.family))
        return er_generate(std::get<ErSpec>(spec.family), spec.seed);
    if (std::holds_alternative<BaSpec>(spec.family))
        return ba_generate(std::get<BaSpec>(spec.family), spec.seed);
    return ws_generate(std::get<WsSpec>(spec.family), spec.seed);
}

std::string spec_filename(const GeneratorSpec& spec) {
    std::ostringstream os;
    if (const auto* er = std::get_if<ErSpec>(&spec.family))
        os << "er_n" << er->n << "_p" << fmt_p(er->p);
    else if (const auto* ba = std::get_if<BaSpec>(&spec.family))
        os << "ba_n" << ba->n << "_m" << ba->m;
    else if (const auto* ws = std::get_if<WsSpec>(&spec.family))
        os << "ws_n" << ws->n << "_k" << ws->k << "_beta" << fmt_p(ws->beta);
    os << "_seed" << spec.seed << ".edges";
    return os.str();
}

std::string spec_to_json(const GeneratorSpec& spec) {
    nlohmann::json j;
    if (const auto* er = std::get_if<ErSpec>(&spec.family)) {
        j["family"] = "er";
        j["n"] = er->n;
        j["p"] = er->p;
    } else if (const auto* ba = std::get_if<BaSpec>(&spec.family)) {
        j["family"] = "ba";
        j["n"] = ba->n;
        j["m"] = ba->m;
    } else if (const auto* ws = std::get_if<WsSpec>(&spec.family)) {
        j["family"] = "ws";
        j["n"] = ws->n;
        j["k"] = ws->k;
        j["beta"] = ws->beta;
    }
    j["seed"] = spec.seed;
    return j.dump();
}

std::vector<GeneratorSpec> load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open manifest: " + path);
    nlohmann::json j = nlohmann::json::parse(in);
    if (!j.is_array()) throw Error("manifest must be a JSON list of specs");
    std::vector<GeneratorSpec> specs;
    for (const auto& item : j) {
        GeneratorSpec s;
        s.seed = item.value("seed", 0ULL);
        std::string family = item.at("family").get<std::string>();
        if (family == "er")
            s.family = ErSpec{item.at("n").get<std::uint64_t>(), item.at("p").get<double>()};
        else if (family == "ba")
            s.family = BaSpec{item.at("n").get<std::uint64_t>(), item.at("m").get<std::uint64_t>()};
        else if (family == "ws")
            s.family = WsSpec{item.at("n").get<std::uint64_t>(), item.at("k").get<std::uint64_t>(),
                              item.at("beta").get<double>()};
        else
            throw Error("manifest: unknown family " + family);
        specs.push_back(s);
    }
    return specs;
}

}  // namespace netdiv
