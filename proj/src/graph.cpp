#include "fml/graph.hpp"

#include <algorithm>
#include <queue>

namespace fml {

ColoredGraph::ColoredGraph(int n, std::vector<Edge> edges, std::vector<Color> colors,
                           std::vector<NodeId> terminals)
    : n_(n), edges_(std::move(edges)), colors_(std::move(colors)), terminals_(std::move(terminals)) {
    if (n_ < 0) throw Error("node count must be nonnegative");
    if (static_cast<int>(colors_.size()) != n_)
        throw Error("color array size must equal node count");

    std::sort(edges_.begin(), edges_.end());
    for (const Edge& e : edges_) {
        if (!has_node(e.u) || !has_node(e.v)) throw Error("edge endpoint out of range");
        if (e.u == e.v) throw Error("self-loops are not allowed");
    }
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw Error("duplicate edge");

    std::sort(terminals_.begin(), terminals_.end());
    terminals_.erase(std::unique(terminals_.begin(), terminals_.end()), terminals_.end());
    if (terminals_.empty()) throw Error("terminal set must be nonempty");
    for (NodeId t : terminals_)
        if (!has_node(t)) throw Error("terminal out of range");

    adj_.assign(static_cast<size_t>(n_), {});
    for (const Edge& e : edges_) {
        adj_[static_cast<size_t>(e.u)].push_back(e.v);
        adj_[static_cast<size_t>(e.v)].push_back(e.u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool ColoredGraph::has_edge(NodeId u, NodeId v) const {
    if (!has_node(u) || !has_node(v) || u == v) return false;
    const auto& nbrs = adj_[static_cast<size_t>(u)];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int ColoredGraph::count_color(Color c) const {
    return static_cast<int>(std::count(colors_.begin(), colors_.end(), c));
}

std::vector<NodeId> ColoredGraph::nodes_of_color(Color c) const {
    std::vector<NodeId> out;
    for (NodeId u = 0; u < n_; ++u)
        if (colors_[static_cast<size_t>(u)] == c) out.push_back(u);
    return out;
}

void TemporalLabeling::add(NodeId u, NodeId v, int t) { add(Edge(u, v), t); }

void TemporalLabeling::add(const Edge& e, int t) {
    if (e.u == e.v || e.u < 0) throw InvalidLabelingError("malformed edge in labeling");
    if (t < 1) throw InvalidLabelingError("timestamps must be >= 1");
    auto& times = assignments_[e];
    auto it = std::lower_bound(times.begin(), times.end(), t);
    if (it == times.end() || *it != t) times.insert(it, t);
}

bool TemporalLabeling::contains(const Edge& e, int t) const {
    auto it = assignments_.find(e);
    if (it == assignments_.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), t);
}

long long TemporalLabeling::size() const {
    long long total = 0;
    for (const auto& [e, times] : assignments_) total += static_cast<long long>(times.size());
    return total;
}

std::int32_t DistanceMatrix::max_finite() const {
    std::int32_t best = 0;
    for (std::int32_t x : d_)
        if (x != kInfinity && x > best) best = x;
    return best;
}

bool DistanceMatrix::all_finite() const {
    return std::none_of(d_.begin(), d_.end(), [](std::int32_t x) { return x == kInfinity; });
}

std::vector<TemporalEdge> induce_temporal_graph(const ColoredGraph& graph,
                                                const TemporalLabeling& labeling) {
    std::vector<TemporalEdge> out;
    for (const auto& [e, times] : labeling.assignments()) {
        if (!graph.has_edge(e.u, e.v))
            throw InvalidLabelingError("labeled edge {" + std::to_string(e.u) + "," +
                                       std::to_string(e.v) + "} not present in graph");
        for (int t : times) out.push_back(TemporalEdge{e, t});
    }
    std::sort(out.begin(), out.end(), [](const TemporalEdge& a, const TemporalEdge& b) {
        if (a.time != b.time) return a.time < b.time;
        return a.edge < b.edge;
    });
    return out;
}

namespace {

// Forward temporal BFS from `source` over temporal edges sorted by
// timestamp, tracking earliest arrival. An edge ({u,v},tau) relaxes v when
// arrival(u) < tau; strictness matches the increasing-path definition.
bool temporally_reaches(const std::vector<TemporalEdge>& sorted_edges, int n, NodeId source,
                        NodeId target, std::vector<int>& arrival) {
    if (source == target) return true;
    constexpr int kUnreached = std::numeric_limits<int>::max();
    arrival.assign(static_cast<size_t>(n), kUnreached);
    arrival[static_cast<size_t>(source)] = 0;
    for (const TemporalEdge& te : sorted_edges) {
        const int au = arrival[static_cast<size_t>(te.edge.u)];
        const int av = arrival[static_cast<size_t>(te.edge.v)];
        if (au < te.time && te.time < av) arrival[static_cast<size_t>(te.edge.v)] = te.time;
        if (av < te.time && te.time < au) arrival[static_cast<size_t>(te.edge.u)] = te.time;
    }
    return arrival[static_cast<size_t>(target)] != kUnreached;
}

}  // namespace

std::set<NodeId> reachable_set(const ColoredGraph& graph, const TemporalLabeling& labeling,
                               NodeId target) {
    if (!graph.has_node(target)) throw Error("target node out of range");
    const auto sorted_edges = induce_temporal_graph(graph, labeling);
    std::set<NodeId> reached;
    reached.insert(target);
    std::vector<int> arrival;
    for (NodeId u = 0; u < graph.num_nodes(); ++u) {
        if (u == target) continue;
        if (temporally_reaches(sorted_edges, graph.num_nodes(), u, target, arrival))
            reached.insert(u);
    }
    return reached;
}

CoverageCounts coverage_counts(const ColoredGraph& graph, const TemporalLabeling& labeling,
                               int rho) {
    if (rho < 1 || rho > static_cast<int>(graph.terminals().size()))
        throw InfeasibleError("rho must be between 1 and the number of terminals");
    std::vector<int> hits(static_cast<size_t>(graph.num_nodes()), 0);
    for (NodeId t : graph.terminals())
        for (NodeId u : reachable_set(graph, labeling, t)) ++hits[static_cast<size_t>(u)];
    CoverageCounts counts;
    for (NodeId u = 0; u < graph.num_nodes(); ++u) {
        if (hits[static_cast<size_t>(u)] < rho) continue;
        if (graph.color(u) == Color::Blue) ++counts.covered_blue;
        if (graph.color(u) == Color::Red) ++counts.covered_red;
    }
    return counts;
}

namespace {

void bfs_distances(const ColoredGraph& graph, NodeId source, std::vector<std::int32_t>& dist) {
    dist.assign(static_cast<size_t>(graph.num_nodes()), DistanceMatrix::kInfinity);
    dist[static_cast<size_t>(source)] = 0;
    std::queue<NodeId> queue;
    queue.push(source);
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop();
        for (NodeId w : graph.neighbors(u)) {
            if (dist[static_cast<size_t>(w)] != DistanceMatrix::kInfinity) continue;
            dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
            queue.push(w);
        }
    }
}

}  // namespace

DistanceMatrix all_pairs_hop_distance(const ColoredGraph& graph) {
    DistanceMatrix matrix(graph.num_nodes());
    std::vector<std::int32_t> dist;
    for (NodeId s = 0; s < graph.num_nodes(); ++s) {
        bfs_distances(graph, s, dist);
        for (NodeId v = 0; v < graph.num_nodes(); ++v) matrix.set(s, v, dist[static_cast<size_t>(v)]);
    }
    return matrix;
}

std::vector<NodeId> shortest_path_nodes(const ColoredGraph& graph, NodeId u, NodeId v) {
    if (!graph.has_node(u) || !graph.has_node(v)) throw Error("path endpoint out of range");
    std::vector<std::int32_t> dist;
    bfs_distances(graph, v, dist);
    if (dist[static_cast<size_t>(u)] == DistanceMatrix::kInfinity)
        throw NoPathError("nodes " + std::to_string(u) + " and " + std::to_string(v) +
                          " are disconnected");
    std::vector<NodeId> nodes;
    nodes.push_back(u);
    NodeId cur = u;
    while (cur != v) {
        // Neighbor lists are sorted, so the first one strictly closer to v
        // is the smallest-id choice in the next BFS layer.
        for (NodeId w : graph.neighbors(cur)) {
            if (dist[static_cast<size_t>(w)] == dist[static_cast<size_t>(cur)] - 1) {
                cur = w;
                break;
            }
        }
        nodes.push_back(cur);
    }
    return nodes;
}

std::vector<Edge> shortest_path(const ColoredGraph& graph, NodeId u, NodeId v) {
    const auto nodes = shortest_path_nodes(graph, u, v);
    std::vector<Edge> path;
    for (size_t i = 0; i + 1 < nodes.size(); ++i) path.emplace_back(nodes[i], nodes[i + 1]);
    return path;
}

}  // namespace fml
