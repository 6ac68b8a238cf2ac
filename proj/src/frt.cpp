#include "fml/frt.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace fml {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 step over seed + stream
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double HstDecomposition::leaf_distance(NodeId u, NodeId v) const {
    if (u == v) return 0.0;
    int cu = leaf_cluster[static_cast<size_t>(u)];
    int cv = leaf_cluster[static_cast<size_t>(v)];
    double dist = 0.0;
    while (cu != cv) {
        dist += edge_weight_to_parent(clusters[static_cast<size_t>(cu)].level);
        dist += edge_weight_to_parent(clusters[static_cast<size_t>(cv)].level);
        cu = clusters[static_cast<size_t>(cu)].parent;
        cv = clusters[static_cast<size_t>(cv)].parent;
    }
    return dist;
}

int HstDecomposition::cluster_of(NodeId v, int level) const {
    int c = leaf_cluster[static_cast<size_t>(v)];
    while (clusters[static_cast<size_t>(c)].level < level) c = clusters[static_cast<size_t>(c)].parent;
    return c;
}

std::vector<std::vector<NodeId>> WeightedTree::children() const {
    std::vector<std::vector<NodeId>> out(parent.size());
    for (NodeId v = 0; v < size(); ++v)
        if (parent[static_cast<size_t>(v)] >= 0) out[static_cast<size_t>(parent[static_cast<size_t>(v)])].push_back(v);
    return out;
}

std::vector<int> WeightedTree::depths() const {
    const auto kids = children();
    std::vector<int> depth(parent.size(), -1);
    std::vector<NodeId> stack{root};
    depth[static_cast<size_t>(root)] = 0;
    while (!stack.empty()) {
        NodeId v = stack.back();
        stack.pop_back();
        for (NodeId c : kids[static_cast<size_t>(v)]) {
            depth[static_cast<size_t>(c)] = depth[static_cast<size_t>(v)] + 1;
            stack.push_back(c);
        }
    }
    return depth;
}

std::vector<int> WeightedTree::heights() const {
    const auto kids = children();
    std::vector<int> height(parent.size(), 0);
    // Process nodes by decreasing depth.
    const auto depth = depths();
    std::vector<NodeId> order(parent.size());
    for (NodeId v = 0; v < size(); ++v) order[static_cast<size_t>(v)] = v;
    std::sort(order.begin(), order.end(),
              [&](NodeId a, NodeId b) { return depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(b)]; });
    for (NodeId v : order)
        for (NodeId c : kids[static_cast<size_t>(v)])
            height[static_cast<size_t>(v)] = std::max(height[static_cast<size_t>(v)], height[static_cast<size_t>(c)] + 1);
    return height;
}

int WeightedTree::height() const {
    const auto depth = depths();
    return *std::max_element(depth.begin(), depth.end());
}

namespace {

double uniform01(std::mt19937_64& gen) {
    return double(gen() >> 11) * 0x1.0p-53;
}

std::vector<NodeId> sample_permutation(int n, std::mt19937_64& gen) {
    std::vector<NodeId> pi(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pi[static_cast<size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) {
        const auto j = static_cast<size_t>(gen() % static_cast<std::uint64_t>(i + 1));
        std::swap(pi[static_cast<size_t>(i)], pi[j]);
    }
    return pi;
}

}  // namespace

HstDecomposition sample_hst(const DistanceMatrix& metric, std::uint64_t seed) {
    const int n = metric.size();
    if (n <= 0) throw Error("metric must be nonempty");
    if (!metric.all_finite())
        throw DisconnectedError("metric has infinite distances; the graph must be connected");

    HstDecomposition hst;
    std::mt19937_64 gen(seed);
    hst.beta = std::exp2(uniform01(gen));  // density 1/(beta ln 2) on [1,2)
    hst.permutation = sample_permutation(n, gen);
    hst.permutation_rank.assign(static_cast<size_t>(n), 0);
    for (int r = 0; r < n; ++r) hst.permutation_rank[static_cast<size_t>(hst.permutation[static_cast<size_t>(r)])] = r;

    if (n == 1) {
        hst.clusters.push_back(HstCluster{0, 0, -1, {}, {0}});
        hst.root = 0;
        hst.num_levels = 1;
        hst.leaf_cluster = {0};
        return hst;
    }

    const std::int32_t diameter = metric.max_finite();
    const int partition_levels = std::max(1, static_cast<int>(std::ceil(std::log2(double(diameter)))));
    hst.num_levels = partition_levels + 1;

    auto pi_min_member = [&](const std::vector<NodeId>& members) {
        NodeId best = members.front();
        for (NodeId v : members)
            if (hst.permutation_rank[static_cast<size_t>(v)] < hst.permutation_rank[static_cast<size_t>(best)]) best = v;
        return best;
    };

    std::vector<NodeId> all(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) all[static_cast<size_t>(i)] = i;
    hst.clusters.push_back(HstCluster{partition_levels, pi_min_member(all), -1, {}, all});
    hst.root = 0;

    // first_center[v] = lowest permutation rank whose vertex lies within the
    // current radius of v; monotone in the shrinking radius, so the pointer
    // only ever advances while descending levels.
    std::vector<int> first_center(static_cast<size_t>(n), 0);
    std::vector<int> current_level;  // cluster indices at the level being split
    current_level.push_back(0);

    for (int level = partition_levels - 1; level >= 0; --level) {
        const double radius = hst.beta * std::exp2(double(level - 1));
        for (int v = 0; v < n; ++v) {
            int& rank = first_center[static_cast<size_t>(v)];
            while (double(metric.at(hst.permutation[static_cast<size_t>(rank)], v)) > radius) ++rank;
        }
        std::vector<int> next_level;
        for (int ci : current_level) {
            // Group members by their assigned center, in permutation order.
            std::vector<std::pair<int, NodeId>> keyed;  // (center rank, member)
            for (NodeId v : hst.clusters[static_cast<size_t>(ci)].members)
                keyed.emplace_back(first_center[static_cast<size_t>(v)], v);
            std::sort(keyed.begin(), keyed.end());
            size_t i = 0;
            while (i < keyed.size()) {
                size_t j = i;
                std::vector<NodeId> members;
                while (j < keyed.size() && keyed[j].first == keyed[i].first)
                    members.push_back(keyed[j++].second);
                std::sort(members.begin(), members.end());
                HstCluster child;
                child.level = level;
                child.center = pi_min_member(members);
                child.parent = ci;
                child.members = std::move(members);
                const int idx = static_cast<int>(hst.clusters.size());
                hst.clusters.push_back(std::move(child));
                hst.clusters[static_cast<size_t>(ci)].children.push_back(idx);
                next_level.push_back(idx);
                i = j;
            }
        }
        current_level = std::move(next_level);
    }

    hst.leaf_cluster.assign(static_cast<size_t>(n), -1);
    for (int ci : current_level) {
        const auto& c = hst.clusters[static_cast<size_t>(ci)];
        if (c.members.size() != 1)
            throw Error("internal: bottom-level cluster is not a singleton");
        hst.leaf_cluster[static_cast<size_t>(c.members.front())] = ci;
    }
    return hst;
}

WeightedTree contract_to_vertex_tree(const HstDecomposition& hst, NodeId terminal) {
    const int n = static_cast<int>(hst.leaf_cluster.size());
    if (terminal < 0 || terminal >= n) throw Error("terminal out of range");

    WeightedTree tree;
    tree.parent.assign(static_cast<size_t>(n), -1);
    tree.weight.assign(static_cast<size_t>(n), 0.0);
    if (n == 1) {
        tree.root = terminal;
        return tree;
    }

    NodeId natural_root = -1;
    for (NodeId v = 0; v < n; ++v) {
        // Topmost cluster whose center is v; centers along a leaf-to-root
        // chain change monotonically in permutation rank, so the clusters
        // centered at v are contiguous.
        int c = hst.leaf_cluster[static_cast<size_t>(v)];
        while (hst.clusters[static_cast<size_t>(c)].parent >= 0 &&
               hst.clusters[static_cast<size_t>(hst.clusters[static_cast<size_t>(c)].parent)].center == v)
            c = hst.clusters[static_cast<size_t>(c)].parent;
        const int parent_cluster = hst.clusters[static_cast<size_t>(c)].parent;
        if (parent_cluster < 0) {
            natural_root = v;
            continue;
        }
        const NodeId rep = hst.clusters[static_cast<size_t>(parent_cluster)].center;
        tree.parent[static_cast<size_t>(v)] = rep;
        tree.weight[static_cast<size_t>(v)] = hst.leaf_distance(v, rep);
    }
    tree.root = natural_root;

    // Re-root at the terminal: reverse parent pointers along the path to the
    // old root; edge weights are unchanged.
    std::vector<NodeId> path;
    for (NodeId x = terminal; x != -1; x = tree.parent[static_cast<size_t>(x)]) path.push_back(x);
    std::vector<double> path_weights(path.size(), 0.0);
    for (size_t i = 0; i + 1 < path.size(); ++i) path_weights[i] = tree.weight[static_cast<size_t>(path[i])];
    tree.parent[static_cast<size_t>(terminal)] = -1;
    tree.weight[static_cast<size_t>(terminal)] = 0.0;
    for (size_t i = 1; i < path.size(); ++i) {
        tree.parent[static_cast<size_t>(path[i])] = path[i - 1];
        tree.weight[static_cast<size_t>(path[i])] = path_weights[i - 1];
    }
    tree.root = terminal;
    return tree;
}

StretchStats empirical_stretch(const ColoredGraph& graph, int trials, std::uint64_t seed) {
    if (trials < 1) throw Error("trials must be >= 1");
    const auto metric = all_pairs_hop_distance(graph);
    if (!metric.all_finite())
        throw DisconnectedError("stretch statistics require a connected graph");
    const int n = graph.num_nodes();
    std::vector<double> ratio_sum(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
    for (int trial = 0; trial < trials; ++trial) {
        const auto hst = sample_hst(metric, derive_seed(seed, static_cast<std::uint64_t>(trial)));
        for (NodeId u = 0; u < n; ++u)
            for (NodeId v = u + 1; v < n; ++v)
                ratio_sum[static_cast<size_t>(u) * n + v] += hst.leaf_distance(u, v) / double(metric.at(u, v));
    }
    StretchStats stats;
    stats.trials = trials;
    stats.n = n;
    stats.pair_mean.assign(static_cast<size_t>(n) * static_cast<size_t>(n), 0.0);
    long long pairs = 0;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            const double mean = ratio_sum[static_cast<size_t>(u) * n + v] / double(trials);
            stats.pair_mean[static_cast<size_t>(u) * n + v] = mean;
            stats.max_mean_stretch = std::max(stats.max_mean_stretch, mean);
            stats.mean_mean_stretch += mean;
            ++pairs;
        }
    }
    if (pairs > 0) stats.mean_mean_stretch /= double(pairs);
    return stats;
}

}  // namespace fml
