#include <doctest.h>

#include <random>

#include "fml/generators.hpp"
#include "fml/projection.hpp"
#include "fml/tree_dp.hpp"
#include "test_util.hpp"

using namespace fml;
using testutil::make_graph;

TEST_CASE("projecting a tree edge between adjacent nodes yields one temporal edge") {
    const auto g = make_graph(2, {{0, 1}}, {{1, Color::Blue}}, {0});
    WeightedTree tree;
    tree.root = 0;
    tree.parent = {-1, 0};
    tree.weight = {0.0, 1.0};
    TreeSolution sol;
    sol.selected_children = {1};
    sol.timestamps = {1};
    const auto lab = project(g, sol, tree);
    CHECK(lab.size() == 1);
    CHECK(lab.contains(Edge(0, 1), 1));
}

TEST_CASE("a three-hop tree edge at tau=2 lands on timestamps 11,12,13 when n=10") {
    // 0-1-2-3 path plus filler nodes to reach n=10.
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}};
    for (NodeId v = 4; v < 10; ++v) edges.emplace_back(0, v);
    const auto g = make_graph(10, std::move(edges), {}, {3});
    WeightedTree tree;
    tree.root = 3;
    tree.parent.assign(10, 3);
    tree.weight.assign(10, 3.0);
    tree.parent[3] = -1;
    tree.weight[3] = 0.0;
    for (NodeId v = 4; v < 10; ++v) tree.weight[static_cast<size_t>(v)] = 2.0;
    TreeSolution sol;
    sol.selected_children = {0};
    sol.timestamps = {2};
    const auto lab = project(g, sol, tree);
    CHECK(lab.size() == 3);
    CHECK(lab.contains(Edge(0, 1), 11));
    CHECK(lab.contains(Edge(1, 2), 12));
    CHECK(lab.contains(Edge(2, 3), 13));
}

TEST_CASE("projected_cost") {
    SUBCASE("empty selection costs nothing") {
        const auto g = make_graph(3, {{0, 1}, {1, 2}}, {}, {0});
        WeightedTree tree;
        tree.root = 0;
        tree.parent = {-1, 0, 1};
        tree.weight = {0.0, 1.0, 1.0};
        CHECK(projected_cost(g, TreeSolution{}, tree) == 0);
    }
    SUBCASE("edge-disjoint paths cost the sum of their lengths") {
        const auto g = make_graph(5, {{0, 1}, {1, 2}, {0, 3}, {3, 4}}, {}, {0});
        WeightedTree tree;
        tree.root = 0;
        tree.parent = {-1, 0, 0, 0, 0};
        tree.weight = {0.0, 1.0, 2.0, 1.0, 2.0};
        TreeSolution sol;
        sol.selected_children = {2, 4};
        sol.timestamps = {1, 1};
        CHECK(projected_cost(g, sol, tree) == 4);
    }
    SUBCASE("overlapping paths in one window deduplicate") {
        // Shortest paths 1->4 and 2->4 share the edge (3,4) at the same
        // position of the same window.
        const auto g = make_graph(5, {{0, 4}, {1, 3}, {2, 3}, {3, 4}}, {}, {4});
        WeightedTree tree;
        tree.root = 4;
        tree.parent = {4, 4, 4, 4, -1};
        tree.weight = {1.0, 2.0, 2.0, 1.0, 0.0};
        TreeSolution sol;
        sol.selected_children = {1, 2};
        sol.timestamps = {1, 1};
        CHECK(projected_cost(g, sol, tree) == 3);  // 2 + 2 minus one shared label
    }
}

TEST_CASE("projection preserves tree-solution coverage end to end") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const auto geo = gen_geometric(40, 0.35, seed);
        const auto colored = assign_groups_by_proximity(geo.graph, 0, geo.graph.num_nodes() / 4,
                                                        geo.graph.num_nodes() / 4);
        const auto metric = all_pairs_hop_distance(colored);
        const auto hst = sample_hst(metric, derive_seed(seed, 1));
        const auto tree = contract_to_vertex_tree(hst, 0);
        const auto sol = (seed & 1) ? solve_exact(tree, colored.colors(), 0.5)
                                    : solve_bicriteria(tree, colored.colors(), 0.5, 0.25);
        const auto lab = project(colored, sol, tree);
        const auto reached = reachable_set(colored, lab, 0);
        int blue = 0, red = 0;
        for (NodeId v : sol.selected_nodes(tree)) {
            CHECK(reached.count(v) == 1);
            if (colored.color(v) == Color::Blue) ++blue;
            if (colored.color(v) == Color::Red) ++red;
        }
        CHECK(blue == sol.achieved_blue);
        CHECK(red == sol.achieved_red);

        // Cost never exceeds the sum of graph distances over selected edges,
        // which in turn never exceeds the weighted tree cost.
        long long distance_sum = 0;
        for (NodeId c : sol.selected_children)
            distance_sum += metric.at(c, tree.parent[static_cast<size_t>(c)]);
        CHECK(lab.size() <= distance_sum);
        CHECK(double(distance_sum) <= sol.weighted_cost + 1e-9);
    }
}
