#include <doctest.h>

#include <random>
#include <set>

#include "fml/frt.hpp"
#include "fml/io.hpp"
#include "test_util.hpp"

using namespace fml;

namespace {

DistanceMatrix metric_of(const ColoredGraph& g) { return all_pairs_hop_distance(g); }

void check_hst_structure(const HstDecomposition& hst, const DistanceMatrix& d) {
    const int n = d.size();
    // Every vertex in exactly one cluster per level; leaves are singletons.
    for (int level = 0; level < hst.num_levels; ++level) {
        std::set<NodeId> seen;
        for (const auto& c : hst.clusters) {
            if (c.level != level) continue;
            for (NodeId v : c.members) CHECK(seen.insert(v).second);
        }
        CHECK(static_cast<int>(seen.size()) == n);
    }
    // Level-i diameter bound and distinct sibling centers.
    for (const auto& c : hst.clusters) {
        for (NodeId u : c.members)
            for (NodeId v : c.members)
                CHECK(double(d.at(u, v)) <= 2.0 * hst.beta * std::exp2(double(c.level)));
        std::set<NodeId> centers;
        for (int child : c.children)
            CHECK(centers.insert(hst.clusters[static_cast<size_t>(child)].center).second);
    }
}

}  // namespace

TEST_CASE("sample_hst on degenerate inputs") {
    SUBCASE("single node") {
        DistanceMatrix d(1);
        d.set(0, 0, 0);
        const auto hst = sample_hst(d, 3);
        CHECK(hst.clusters.size() == 1);
        CHECK(hst.num_levels == 1);
        const auto tree = contract_to_vertex_tree(hst, 0);
        CHECK(tree.size() == 1);
        CHECK(tree.root == 0);
        CHECK(tree.height() == 0);
    }
    SUBCASE("two nodes dominate their distance") {
        DistanceMatrix d(2);
        d.set(0, 0, 0);
        d.set(1, 1, 0);
        d.set(0, 1, 1);
        d.set(1, 0, 1);
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            const auto hst = sample_hst(d, seed);
            CHECK(hst.leaf_distance(0, 1) >= 1.0);
            const auto tree = contract_to_vertex_tree(hst, 0);
            CHECK(tree.root == 0);
            CHECK(tree.parent[1] == 0);
            CHECK(tree.weight[1] >= 1.0);
        }
    }
    SUBCASE("disconnected metric is rejected") {
        DistanceMatrix d(2);
        d.set(0, 0, 0);
        d.set(1, 1, 0);
        CHECK_THROWS_AS(sample_hst(d, 1), DisconnectedError);
    }
}

TEST_CASE("HST domination holds exactly for every pair and seed") {
    std::mt19937_64 gen(2024);
    for (int it = 0; it < 12; ++it) {
        const int n = 5 + static_cast<int>(gen() % 26);
        const auto g = testutil::random_connected_graph(n, 0.12, gen);
        const auto d = metric_of(g);
        for (std::uint64_t seed = 0; seed < 8; ++seed) {
            const auto hst = sample_hst(d, derive_seed(9000 + it, seed));
            check_hst_structure(hst, d);
            for (NodeId u = 0; u < n; ++u)
                for (NodeId v = u + 1; v < n; ++v)
                    CHECK(hst.leaf_distance(u, v) >= double(d.at(u, v)));
        }
    }
}

TEST_CASE("contracted tree is a spanning tree rooted at the terminal") {
    SUBCASE("star graph keeps all five nodes with the hub terminal") {
        const auto g = testutil::make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}, {}, {0});
        const auto hst = sample_hst(metric_of(g), 77);
        const auto tree = contract_to_vertex_tree(hst, 0);
        CHECK(tree.size() == 5);
        CHECK(tree.root == 0);
        const auto depth = tree.depths();
        for (NodeId v = 0; v < 5; ++v) CHECK(depth[static_cast<size_t>(v)] >= 0);
    }
    SUBCASE("random graphs: spanning, acyclic, positive integral weights") {
        std::mt19937_64 gen(31);
        for (int it = 0; it < 25; ++it) {
            const int n = 4 + static_cast<int>(gen() % 27);
            const auto g = testutil::random_connected_graph(n, 0.15, gen);
            const auto d = metric_of(g);
            for (std::uint64_t seed = 0; seed < 2; ++seed) {
                const auto hst = sample_hst(d, derive_seed(123 + it, seed));
                const NodeId terminal = static_cast<NodeId>(gen() % static_cast<std::uint64_t>(n));
                const auto tree = contract_to_vertex_tree(hst, terminal);
                CHECK(tree.size() == n);
                CHECK(tree.root == terminal);
                CHECK(tree.parent[static_cast<size_t>(terminal)] == -1);
                const auto depth = tree.depths();  // any unreachable node would stay -1
                int edges = 0;
                for (NodeId v = 0; v < n; ++v) {
                    CHECK(depth[static_cast<size_t>(v)] >= 0);
                    if (v != terminal) {
                        ++edges;
                        CHECK(tree.weight[static_cast<size_t>(v)] >= 1.0);
                        CHECK(tree.weight[static_cast<size_t>(v)] ==
                              double(static_cast<long long>(tree.weight[static_cast<size_t>(v)])));
                        // Contracted weights are HST leaf distances, so they
                        // dominate the graph metric on the edge's endpoints.
                        CHECK(tree.weight[static_cast<size_t>(v)] >=
                              double(d.at(v, tree.parent[static_cast<size_t>(v)])));
                    }
                }
                CHECK(edges == n - 1);
                CHECK(tree.height() <= 2 * (hst.num_levels + 1));
            }
        }
    }
}

TEST_CASE("sampling is deterministic per seed") {
    std::mt19937_64 gen(8);
    const auto g = testutil::random_connected_graph(24, 0.15, gen);
    const auto d = metric_of(g);
    const auto t1 = contract_to_vertex_tree(sample_hst(d, 42), 5);
    const auto t2 = contract_to_vertex_tree(sample_hst(d, 42), 5);
    CHECK(write_tree(t1) == write_tree(t2));
    const auto t3 = contract_to_vertex_tree(sample_hst(d, 43), 5);
    CHECK(write_tree(t1) != write_tree(t3));  // overwhelmingly likely
}

TEST_CASE("empirical stretch") {
    SUBCASE("two nodes, one trial: stretch at least one") {
        const auto g = testutil::make_graph(2, {{0, 1}}, {}, {0});
        const auto stats = empirical_stretch(g, 1, 5);
        CHECK(stats.max_mean_stretch >= 1.0);
        CHECK(stats.at(0, 1) == stats.max_mean_stretch);
        CHECK(stats.at(1, 0) == stats.at(0, 1));
    }
    SUBCASE("every per-pair mean dominates one") {
        std::mt19937_64 gen(3);
        const auto g = testutil::random_connected_graph(12, 0.2, gen);
        const auto stats = empirical_stretch(g, 8, 21);
        for (NodeId u = 0; u < 12; ++u)
            for (NodeId v = u + 1; v < 12; ++v) CHECK(stats.at(u, v) >= 1.0);
    }
    SUBCASE("identical seeds give identical statistics") {
        std::mt19937_64 gen(9);
        const auto g = testutil::random_connected_graph(16, 0.2, gen);
        const auto a = empirical_stretch(g, 5, 11);
        const auto b = empirical_stretch(g, 5, 11);
        CHECK(a.max_mean_stretch == b.max_mean_stretch);
        CHECK(a.mean_mean_stretch == b.mean_mean_stretch);
    }
}
