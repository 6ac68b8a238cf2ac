#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "fml/errors.hpp"

namespace fml {

using NodeId = int;

enum class Color : std::uint8_t { None = 0, Blue = 1, Red = 2 };

// Undirected edge, stored normalized with first < second.
struct Edge {
    NodeId u = -1;
    NodeId v = -1;

    Edge() = default;
    Edge(NodeId a, NodeId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Static undirected simple graph with per-node group membership and a
// nonempty terminal set. Nodes are dense integers 0..n-1; immutable after
// construction.
class ColoredGraph {
public:
    ColoredGraph(int n, std::vector<Edge> edges, std::vector<Color> colors,
                 std::vector<NodeId> terminals);

    int num_nodes() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Color>& colors() const { return colors_; }
    Color color(NodeId u) const { return colors_[static_cast<size_t>(u)]; }
    const std::vector<NodeId>& terminals() const { return terminals_; }
    const std::vector<NodeId>& neighbors(NodeId u) const { return adj_[static_cast<size_t>(u)]; }

    bool has_edge(NodeId u, NodeId v) const;
    bool has_node(NodeId u) const { return u >= 0 && u < n_; }

    int count_color(Color c) const;
    std::vector<NodeId> nodes_of_color(Color c) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;           // sorted, unique
    std::vector<Color> colors_;         // size n
    std::vector<NodeId> terminals_;     // sorted, unique, nonempty
    std::vector<std::vector<NodeId>> adj_;  // sorted neighbor lists
};

// Map from static edges to finite sets of positive timestamps. The size of
// the labeling (total number of assigned timestamps) is the solution cost.
class TemporalLabeling {
public:
    TemporalLabeling() = default;

    // Inserts timestamp t (>= 1) on edge {u, v}; duplicate inserts are a no-op.
    void add(NodeId u, NodeId v, int t);
    void add(const Edge& e, int t);

    bool contains(const Edge& e, int t) const;
    long long size() const;
    bool empty() const { return assignments_.empty(); }

    const std::map<Edge, std::vector<int>>& assignments() const { return assignments_; }

private:
    std::map<Edge, std::vector<int>> assignments_;  // timestamps sorted, unique
};

struct TemporalEdge {
    Edge edge;
    int time = 0;

    friend bool operator==(const TemporalEdge&, const TemporalEdge&) = default;
};

// Distance matrix in hops. Disconnected pairs hold an explicit infinity
// sentinel; callers must check is_finite before doing arithmetic.
class DistanceMatrix {
public:
    static constexpr std::int32_t kInfinity = std::numeric_limits<std::int32_t>::max();

    DistanceMatrix() = default;
    DistanceMatrix(int n) : n_(n), d_(static_cast<size_t>(n) * n, kInfinity) {}

    int size() const { return n_; }
    std::int32_t at(NodeId u, NodeId v) const { return d_[static_cast<size_t>(u) * n_ + v]; }
    void set(NodeId u, NodeId v, std::int32_t value) { d_[static_cast<size_t>(u) * n_ + v] = value; }
    bool is_finite(NodeId u, NodeId v) const { return at(u, v) != kInfinity; }
    std::int32_t max_finite() const;
    bool all_finite() const;

private:
    int n_ = 0;
    std::vector<std::int32_t> d_;
};

// Returns one TemporalEdge per (edge, timestamp) pair, ordered by
// (timestamp, edge). Throws InvalidLabelingError if a labeled edge is
// missing from the graph.
std::vector<TemporalEdge> induce_temporal_graph(const ColoredGraph& graph,
                                                const TemporalLabeling& labeling);

// Set of nodes with a time-respecting path (strictly increasing timestamps)
// to `target` under the labeling. The target itself is always included.
std::set<NodeId> reachable_set(const ColoredGraph& graph, const TemporalLabeling& labeling,
                               NodeId target);

struct CoverageCounts {
    int covered_blue = 0;
    int covered_red = 0;
};

// Counts per group of nodes that temporally reach at least `rho` terminals.
CoverageCounts coverage_counts(const ColoredGraph& graph, const TemporalLabeling& labeling,
                               int rho);

// All-pairs hop distances via BFS per node.
DistanceMatrix all_pairs_hop_distance(const ColoredGraph& graph);

// Shortest u-v path as an ordered edge list from u to v. Ties are broken by
// the lexicographically smallest node id at every BFS layer, so the output
// is deterministic. Throws NoPathError if u and v are disconnected.
std::vector<Edge> shortest_path(const ColoredGraph& graph, NodeId u, NodeId v);

// Same path as shortest_path but as the node sequence u, ..., v.
std::vector<NodeId> shortest_path_nodes(const ColoredGraph& graph, NodeId u, NodeId v);

}  // namespace fml
