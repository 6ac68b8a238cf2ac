#pragma once

#include <cstdint>
#include <vector>

#include "fml/graph.hpp"

namespace fml {

// Deterministic 64-bit mixer for deriving independent sub-seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Hierarchical decomposition sampled from the FRT distribution. Level 0
// holds singleton clusters; the top level is the whole vertex set. Cluster
// `center` is the member earliest in the sampled permutation.
struct HstCluster {
    int level = 0;
    NodeId center = -1;
    int parent = -1;               // index into clusters, -1 for the root
    std::vector<int> children;     // indices into clusters
    std::vector<NodeId> members;   // sorted
};

class HstDecomposition {
public:
    // Built by sample_hst; see that function for the construction.
    std::vector<HstCluster> clusters;
    int root = -1;
    int num_levels = 0;  // levels run 0..num_levels-1, root at num_levels-1
    double beta = 1.0;
    std::vector<NodeId> permutation;       // pi[rank] = vertex
    std::vector<int> permutation_rank;     // rank of each vertex in pi
    std::vector<int> leaf_cluster;         // per-vertex index of its singleton cluster

    // Weight of the HST edge between a cluster at `level` and its parent.
    static double edge_weight_to_parent(int level) { return double(1 << (level + 1)); }

    // Tree-metric distance between the leaves of two vertices.
    double leaf_distance(NodeId u, NodeId v) const;

    int cluster_of(NodeId v, int level) const;  // cluster index containing v at a level
};

// Rooted tree over the original vertex set with positive edge weights.
// parent[root] == -1 and weight[root] == 0.
struct WeightedTree {
    NodeId root = -1;
    std::vector<NodeId> parent;
    std::vector<double> weight;  // weight of the edge to the parent

    int size() const { return static_cast<int>(parent.size()); }
    std::vector<std::vector<NodeId>> children() const;
    std::vector<int> depths() const;   // edge count from the root
    std::vector<int> heights() const;  // per-node height of its subtree
    int height() const;                // max root-to-leaf edge count
};

// Samples one HST from the FRT distribution over the given metric.
// Deterministic per seed: beta has density 1/(beta ln 2) on [1,2) and the
// permutation is a seeded Fisher-Yates shuffle. Throws DisconnectedError
// when the metric contains infinite distances.
HstDecomposition sample_hst(const DistanceMatrix& metric, std::uint64_t seed);

// Collapses the HST to a tree on the vertex set: each cluster is
// represented by its center and chains of clusters sharing a center merge
// into one node. The weight between adjacent representatives is the HST
// leaf distance between them, then the tree is re-rooted at the terminal.
WeightedTree contract_to_vertex_tree(const HstDecomposition& hst, NodeId terminal);

struct StretchStats {
    double max_mean_stretch = 0.0;   // max over pairs of the mean d_T/d_G
    double mean_mean_stretch = 0.0;  // average over pairs
    int trials = 0;
    int n = 0;
    std::vector<double> pair_mean;   // row-major n*n, 0 on and below the diagonal

    double at(NodeId u, NodeId v) const {
        if (u > v) std::swap(u, v);
        return pair_mean[static_cast<size_t>(u) * n + v];
    }
};

// Mean per-pair stretch of the HST metric over repeated samples.
StretchStats empirical_stretch(const ColoredGraph& graph, int trials, std::uint64_t seed);

}  // namespace fml
