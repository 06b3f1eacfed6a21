#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "netdiv/error.hpp"
#include "netdiv/randgraph.hpp"

using namespace netdiv;

namespace {

bool connected(const Graph& g) {
    if (g.node_count() == 0) return true;
    return largest_connected_component(g).node_count() == g.node_count();
}

}  // namespace

TEST_CASE("ws with beta 0 is exactly the ring lattice") {
    Graph g = generate({WsSpec{10, 4, 0.0}, 1});
    CHECK(g.node_count() == 10);
    CHECK(g.edge_count() == 20);
    for (NodeId v = 0; v < 10; ++v) CHECK(g.degree(v) == 4);
    for (NodeId v = 0; v < 10; ++v) {
        CHECK(g.has_edge(v, (v + 1) % 10));
        CHECK(g.has_edge(v, (v + 2) % 10));
    }
}

TEST_CASE("ws rewiring preserves edge count and spreads degrees") {
    Graph g0 = generate({WsSpec{200, 6, 0.0}, 9});
    Graph g1 = generate({WsSpec{200, 6, 1.0}, 9});
    CHECK(g0.edge_count() == g1.edge_count());  // rewiring moves, never deletes
    double mean = 6.0, var = 0.0;
    for (NodeId v = 0; v < g1.node_count(); ++v) {
        double d = g1.degree(v) - mean;
        var += d * d;
    }
    var /= static_cast<double>(g1.node_count());
    CHECK(var > 0.0);
    for (NodeId v = 0; v < g0.node_count(); ++v) CHECK(g0.degree(v) == 6);
}

TEST_CASE("er edge count within 4 sigma of the binomial mean") {
    Graph g = generate({ErSpec{1000, 0.01}, 12345});
    double mean = 499500 * 0.01;
    double sigma = std::sqrt(499500 * 0.01 * 0.99);
    CHECK(std::fabs(static_cast<double>(g.edge_count()) - mean) <= 4.0 * sigma);
    // no self loops, sorted adjacency come from Graph invariants; spot-check
    for (NodeId v = 0; v < g.node_count(); ++v)
        for (NodeId u : g.neighbors(v)) CHECK(u != v);
}

TEST_CASE("er pair-index decoding covers the full range") {
    // dense p so every pair has a fair chance; compare against the universe
    Graph g = generate({ErSpec{40, 0.5, }, 7});
    std::set<std::pair<NodeId, NodeId>> seen;
    for (auto [u, v] : g.edges()) {
        CHECK(u < v);
        CHECK(v < 40);
        seen.insert({u, v});
    }
    CHECK(seen.size() == g.edge_count());
    double mean = 780 * 0.5, sigma = std::sqrt(780 * 0.25);
    CHECK(std::fabs(static_cast<double>(g.edge_count()) - mean) <= 4 * sigma);
}

TEST_CASE("ba construction arithmetic and connectivity") {
    Graph g = generate({BaSpec{100, 3}, 4});
    // clique on m+1 nodes plus m edges per later node
    CHECK(g.edge_count() == 6 + 96 * 3);
    CHECK(g.node_count() == 100);
    CHECK(connected(g));
    std::uint32_t min_deg = g.degree(0);
    for (NodeId v = 0; v < g.node_count(); ++v) min_deg = std::min(min_deg, g.degree(v));
    CHECK(min_deg >= 3);
}

TEST_CASE("identical spec and seed reproduce the same edge set") {
    for (const GeneratorSpec spec : {GeneratorSpec{ErSpec{500, 0.02}, 77},
                                     GeneratorSpec{BaSpec{300, 4}, 77},
                                     GeneratorSpec{WsSpec{400, 6, 0.3}, 77}}) {
        Graph a = generate(spec);
        Graph b = generate(spec);
        CHECK(a.edges() == b.edges());
        GeneratorSpec other = spec;
        other.seed = 78;
        Graph c = generate(other);
        CHECK(a.edges() != c.edges());
    }
}

TEST_CASE("invariant violations are rejected") {
    CHECK_THROWS_AS(generate({ErSpec{100, 0.0}, 1}), Error);
    CHECK_THROWS_AS(generate({ErSpec{100, 1.0}, 1}), Error);
    CHECK_THROWS_AS(generate({BaSpec{100, 0}, 1}), Error);
    CHECK_THROWS_AS(generate({BaSpec{100, 100}, 1}), Error);
    CHECK_THROWS_AS(generate({WsSpec{100, 5, 0.2}, 1}), Error);   // odd k
    CHECK_THROWS_AS(generate({WsSpec{100, 100, 0.2}, 1}), Error); // k >= n
    CHECK_THROWS_AS(generate({WsSpec{100, 4, 1.5}, 1}), Error);
}

TEST_CASE("spec filenames and manifest round-trip") {
    GeneratorSpec er{ErSpec{1000, 0.01}, 42};
    CHECK(spec_filename(er) == "er_n1000_p0.01_seed42.edges");
    GeneratorSpec ws{WsSpec{50, 4, 0.2}, 7};
    CHECK(spec_filename(ws) == "ws_n50_k4_beta0.2_seed7.edges");

    auto tmp = (std::filesystem::temp_directory_path() / "netdiv_manifest.json").string();
    {
        std::ofstream out(tmp);
        out << R"([{"family":"er","n":100,"p":0.05,"seed":1},)"
            << R"({"family":"ba","n":50,"m":2,"seed":2},)"
            << R"({"family":"ws","n":60,"k":4,"beta":0.8,"seed":3}])";
    }
    auto specs = load_manifest(tmp);
    REQUIRE(specs.size() == 3);
    CHECK(std::get<ErSpec>(specs[0].family).n == 100);
    CHECK(std::get<BaSpec>(specs[1].family).m == 2);
    CHECK(std::get<WsSpec>(specs[2].family).beta == doctest::Approx(0.8));
    CHECK(specs[2].seed == 3);
    for (const auto& s : specs) CHECK(generate(s).node_count() > 0);
    std::filesystem::remove(tmp);
}

TEST_CASE("shipped replication manifest parses and scales down") {
    // the repository manifest pins the full-scale grids; parse it and dry-run
    // one spec per family at reduced n
    auto path = std::filesystem::path(__FILE__).parent_path().parent_path() /
                "data" / "replication_manifest.json";
    auto specs = load_manifest(path.string());
    CHECK(specs.size() == 10 + 8 + 14);
    int er_count = 0, ba_count = 0, ws_count = 0;
    for (const auto& s : specs) {
        if (std::holds_alternative<ErSpec>(s.family)) {
            CHECK(std::get<ErSpec>(s.family).n == 1000000);
            ++er_count;
        } else if (std::holds_alternative<BaSpec>(s.family)) {
            ++ba_count;
        } else {
            auto ws = std::get<WsSpec>(s.family);
            CHECK((ws.beta == 0.2 || ws.beta == 0.8));
            ++ws_count;
        }
    }
    CHECK(er_count == 10);
    CHECK(ba_count == 8);
    CHECK(ws_count == 14);
}
