#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <filesystem>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "netdiv/census.hpp"
#include "netdiv/error.hpp"

using namespace netdiv;

namespace {

// K4 minus the edge {0,3}: edges 01,02,12,13,23
Graph k4_minus_edge() {
    return testutil::make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
}

std::uint32_t find_class(const GraphClassCatalog& catalog, unsigned k,
                         unsigned edge_count) {
    for (auto id : catalog.class_ids_of_size(k))
        if (catalog.cls(id).edge_count == edge_count) return id;
    REQUIRE(false);
    return 0;
}

}  // namespace

TEST_CASE("common neighborhood of K4-minus-edge pairs") {
    Graph g = k4_minus_edge();
    // (0,3): CN = {1,2}, which are adjacent
    auto r = common_neighborhood(g, 0, 3, 6);
    CHECK(r.cn_size == 2);
    CHECK_FALSE(r.overflow);
    CHECK(r.mask.k == 2);
    CHECK(r.mask.bits == 1);

    // (1,2): CN = {0,3}, not adjacent
    r = common_neighborhood(g, 1, 2, 6);
    CHECK(r.cn_size == 2);
    CHECK(r.mask.bits == 0);

    CHECK_THROWS_AS(common_neighborhood(g, 1, 1, 6), Error);
}

TEST_CASE("star center-leaf pairs share no common neighbor") {
    Graph star = testutil::make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    auto r = common_neighborhood(star, 0, 1, 6);
    CHECK(r.cn_size == 0);
    // leaf-leaf pairs share the center
    r = common_neighborhood(star, 1, 2, 6);
    CHECK(r.cn_size == 1);
}

TEST_CASE("overflow marker above the cap") {
    Graph g = testutil::make_graph(6, {{0, 2}, {0, 3}, {0, 4}, {0, 5},
                                       {1, 2}, {1, 3}, {1, 4}, {1, 5}});
    auto r = common_neighborhood(g, 0, 1, 3);
    CHECK(r.cn_size == 4);
    CHECK(r.overflow);
}

TEST_CASE("enumerate_pairs on the 4-cycle finds exactly the diagonals") {
    Graph c4 = testutil::make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    std::set<std::pair<NodeId, NodeId>> pairs;
    enumerate_pairs(c4, CensusMode::exact(),
                    [&](NodeId i, NodeId j) { pairs.insert({i, j}); });
    CHECK(pairs == std::set<std::pair<NodeId, NodeId>>{{0, 2}, {1, 3}});
    for (auto [i, j] : pairs) CHECK(common_neighborhood(c4, i, j, 6).cn_size == 2);
}

TEST_CASE("enumerate_pairs on K3 and the empty graph") {
    Graph k3 = testutil::make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    int count = 0;
    enumerate_pairs(k3, CensusMode::exact(), [&](NodeId, NodeId) { ++count; });
    CHECK(count == 3);

    Graph empty = testutil::make_graph(5, {});
    enumerate_pairs(empty, CensusMode::exact(), [&](NodeId, NodeId) { REQUIRE(false); });

    CHECK_THROWS_AS(enumerate_pairs(empty, CensusMode::node_sampled(0.0, 1),
                                    [](NodeId, NodeId) {}),
                    Error);
    CHECK_THROWS_AS(enumerate_pairs(empty, CensusMode::node_sampled(1.5, 1),
                                    [](NodeId, NodeId) {}),
                    Error);
}

TEST_CASE("census of K4 minus an edge") {
    auto catalog = GraphClassCatalog::build(6);
    Graph g = k4_minus_edge();
    CensusTable t = run_census(g, catalog, CensusMode::exact());

    CHECK(t.bag(1) == 4);
    CHECK(t.bag(2) == 2);
    std::uint32_t c2_edge = find_class(catalog, 2, 1);
    std::uint32_t c2_empty = find_class(catalog, 2, 0);
    CHECK(t.pair_count[c2_edge] == 1);
    CHECK(t.linked_count[c2_edge] == 0);
    CHECK(t.pair_count[c2_empty] == 1);
    CHECK(t.linked_count[c2_empty] == 1);
}

TEST_CASE("census of K3: three linked pairs with a single common neighbor") {
    auto catalog = GraphClassCatalog::build(4);
    Graph k3 = testutil::make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CensusTable t = run_census(k3, catalog, CensusMode::exact());
    CHECK(t.bag(1) == 3);
    CHECK(t.pair_count[0] == 3);
    CHECK(t.linked_count[0] == 3);
}

TEST_CASE("partition identity: class counts sum to the bag below the cap") {
    auto catalog = GraphClassCatalog::build(6);
    for (std::uint64_t seed : {11u, 22u, 33u}) {
        Graph g = testutil::random_small_graph(seed);
        CensusTable t = run_census(g, catalog, CensusMode::exact());
        for (unsigned k = 1; k <= t.cap; ++k) {
            std::uint64_t class_sum = 0;
            for (auto id : catalog.class_ids_of_size(k)) class_sum += t.pair_count[id];
            CAPTURE(seed);
            CAPTURE(k);
            CHECK(class_sum == t.bag(k));
        }
    }
}

TEST_CASE("oracle equivalence on random graphs") {
    auto catalog = GraphClassCatalog::build(6);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = testutil::random_small_graph(seed, 120);
        CensusTable mine = run_census(g, catalog, CensusMode::exact());
        CensusTable oracle = testutil::brute_census(g, catalog, mine.cap);
        CAPTURE(seed);
        CHECK(testutil::census_equal(mine, oracle));
    }
}

TEST_CASE("relabeling invariance of per-class counts") {
    auto catalog = GraphClassCatalog::build(6);
    Graph g = testutil::random_small_graph(5, 120);
    auto perm = testutil::random_permutation(g.node_count(), 17);
    Graph h = testutil::permute_graph(g, perm);
    CensusTable a = run_census(g, catalog, CensusMode::exact());
    CensusTable b = run_census(h, catalog, CensusMode::exact());
    CHECK(testutil::census_equal(a, b));
}

TEST_CASE("worker-count independence") {
    auto catalog = GraphClassCatalog::build(6);
    for (std::uint64_t seed : {3u, 14u}) {
        Graph g = testutil::random_small_graph(seed);
        CensusTable t1 = run_census(g, catalog, CensusMode::exact(), 0, 1);
        CensusTable t2 = run_census(g, catalog, CensusMode::exact(), 0, 2);
        CensusTable t8 = run_census(g, catalog, CensusMode::exact(), 0, 8);
        CHECK(testutil::census_equal(t1, t2));
        CHECK(testutil::census_equal(t1, t8));
    }
}

TEST_CASE("removing an edge never raises linked totals (oracle recompute)") {
    auto catalog = GraphClassCatalog::build(6);
    Graph g = testutil::random_small_graph(21, 60);
    CensusTable before = testutil::brute_census(g, catalog, 6);
    std::uint64_t linked_before = 0;
    for (auto v : before.linked_count) linked_before += v;

    auto edges = g.edges();
    REQUIRE(!edges.empty());
    for (std::size_t drop = 0; drop < std::min<std::size_t>(edges.size(), 5); ++drop) {
        auto reduced = edges;
        reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(drop));
        Graph h = Graph::from_edges(g.node_count(), reduced);
        CensusTable after = testutil::brute_census(h, catalog, 6);
        std::uint64_t linked_after = 0;
        for (auto v : after.linked_count) linked_after += v;
        CHECK(linked_after <= linked_before);
    }
}

TEST_CASE("node-sampled mode is deterministic and tracks the rate") {
    auto catalog = GraphClassCatalog::build(6);
    Graph g = testutil::random_small_graph(8, 150);
    auto mode = CensusMode::node_sampled(0.5, 99);
    CensusTable a = run_census(g, catalog, mode, 0, 1);
    CensusTable b = run_census(g, catalog, mode, 0, 4);
    CHECK(testutil::census_equal(a, b));  // worker-count independent
    CHECK(a.mode.sampled);
    CHECK(a.mode.rate == 0.5);

    // exact >= sampled-at-any-rate is not guaranteed pairwise (two sampled
    // endpoints double-count), but total sampled mass is near rate*2x
    CensusTable exact = run_census(g, catalog, CensusMode::exact());
    std::uint64_t exact_pairs = 0, sampled_pairs = 0;
    for (std::size_t s = 1; s < exact.bag_of_cn.size(); ++s) exact_pairs += exact.bag_of_cn[s];
    for (std::size_t s = 1; s < a.bag_of_cn.size(); ++s) sampled_pairs += a.bag_of_cn[s];
    CHECK(sampled_pairs > 0);
    CHECK(sampled_pairs < 2 * exact_pairs);
}

TEST_CASE("csv + sidecar round-trip preserves counts and rejects mismatches") {
    auto catalog = GraphClassCatalog::build(6);
    Graph g = testutil::random_small_graph(4);
    CensusTable t = run_census(g, catalog, CensusMode::exact());
    auto dir = std::filesystem::temp_directory_path();
    auto csv = (dir / "netdiv_census.csv").string();
    auto side = (dir / "netdiv_census.json").string();
    write_census_csv(t, catalog, csv);
    write_census_sidecar(t, side);
    CensusTable back = load_census(csv, side, catalog);
    CHECK(testutil::census_equal(t, back));
    CHECK(back.cap == t.cap);
    CHECK(back.catalog_version == t.catalog_version);

    auto catalog4 = GraphClassCatalog::build(4);
    CHECK_THROWS_AS(load_census(csv, side, catalog4), Error);
    std::filesystem::remove(csv);
    std::filesystem::remove(side);
}
