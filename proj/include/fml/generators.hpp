#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fml/problem.hpp"

namespace fml {

struct GeometricGraph {
    ColoredGraph graph;                          // largest component, re-indexed
    std::vector<std::pair<double, double>> positions;  // parallel to node ids
};

// Random geometric graph: n uniform points in the unit square, edges within
// Euclidean `radius`, largest connected component kept and re-indexed in
// original id order. The provisional terminal is node 0 until one is chosen.
GeometricGraph gen_geometric(int n, double radius, std::uint64_t seed);

// Barabasi-Albert preferential attachment over a K_{m_bar} seed clique;
// every new node attaches to m_bar distinct existing nodes, so
// |E| = m_bar * (n - m_bar) + m_bar * (m_bar - 1) / 2.
ColoredGraph gen_barabasi_albert(int n, int m_bar, std::uint64_t seed);

// Colors the count_b nodes closest to the terminal Blue and the count_r
// farthest Red (hop distance, ties by id). The terminal stays uncolored.
ColoredGraph assign_groups_by_proximity(const ColoredGraph& graph, NodeId terminal, int count_b,
                                        int count_r);

// Euclidean variant for geometric instances.
ColoredGraph assign_groups_by_euclidean(const ColoredGraph& graph,
                                        const std::vector<std::pair<double, double>>& positions,
                                        NodeId terminal, int count_b, int count_r);

struct SetCoverReduction {
    FmlInstance instance;
    long long known_optimum = 0;   // m + L * k_star
    int min_cover_size = 0;        // k_star, exact
    NodeId terminal = -1;
    std::vector<NodeId> element_nodes;
    std::vector<NodeId> set_nodes;
};

// Adversarial instance from a set cover system: one Blue node per universe
// element adjacent to the sets containing it, and a cost-L chain from every
// set node to the terminal. The FML optimum is m + L * k_star where k_star
// is the minimum cover size (computed exactly; |sets| must stay small).
SetCoverReduction gen_setcover_reduction(int universe_size,
                                         const std::vector<std::vector<int>>& sets,
                                         int chain_length);

// Optional rewrites applied between parsing and validation, for edge lists
// prepared without group tags: assign count_b + count_r random non-terminal
// nodes to the groups, or replace the terminal set.
struct IngestOverrides {
    std::optional<std::pair<int, int>> random_colors;  // (count_b, count_r)
    std::uint64_t color_seed = 0;
    std::optional<NodeId> terminal;
};

// Reads a graph file, validates it, restricts to the component containing
// the terminals (all colored nodes must live there too) and re-indexes
// densely. rho/alpha complete the instance.
FmlInstance ingest_edge_list(const std::string& path, int rho, double alpha,
                             const IngestOverrides& overrides = {});

}  // namespace fml
