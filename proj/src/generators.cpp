#include "fml/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>

#include "fml/frt.hpp"
#include "fml/io.hpp"

namespace fml {

namespace {

double uniform01(std::mt19937_64& gen) { return double(gen() >> 11) * 0x1.0p-53; }

std::vector<int> component_ids(int n, const std::vector<Edge>& edges) {
    std::vector<std::vector<NodeId>> adj(static_cast<size_t>(n));
    for (const Edge& e : edges) {
        adj[static_cast<size_t>(e.u)].push_back(e.v);
        adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
    std::vector<int> comp(static_cast<size_t>(n), -1);
    int next = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (comp[static_cast<size_t>(s)] >= 0) continue;
        comp[static_cast<size_t>(s)] = next;
        std::queue<NodeId> queue;
        queue.push(s);
        while (!queue.empty()) {
            NodeId u = queue.front();
            queue.pop();
            for (NodeId w : adj[static_cast<size_t>(u)]) {
                if (comp[static_cast<size_t>(w)] >= 0) continue;
                comp[static_cast<size_t>(w)] = next;
                queue.push(w);
            }
        }
        ++next;
    }
    return comp;
}

}  // namespace

GeometricGraph gen_geometric(int n, double radius, std::uint64_t seed) {
    if (n < 1) throw Error("n must be positive");
    if (radius <= 0.0 || radius > std::sqrt(2.0) + 1e-12)
        throw Error("radius must lie in (0, sqrt(2)]");
    std::mt19937_64 gen(seed);
    std::vector<std::pair<double, double>> points(static_cast<size_t>(n));
    for (auto& p : points) {
        p.first = uniform01(gen);
        p.second = uniform01(gen);
    }
    std::vector<Edge> edges;
    const double r2 = radius * radius;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const double dx = points[static_cast<size_t>(u)].first - points[static_cast<size_t>(v)].first;
            const double dy = points[static_cast<size_t>(u)].second - points[static_cast<size_t>(v)].second;
            if (dx * dx + dy * dy <= r2) edges.emplace_back(u, v);
        }
    }

    // Keep the largest connected component, re-indexed in id order.
    const auto comp = component_ids(n, edges);
    const int num_comps = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    std::vector<int> comp_size(static_cast<size_t>(num_comps), 0);
    for (int c : comp) ++comp_size[static_cast<size_t>(c)];
    const int keep =
        static_cast<int>(std::max_element(comp_size.begin(), comp_size.end()) - comp_size.begin());

    std::vector<NodeId> remap(static_cast<size_t>(n), -1);
    std::vector<std::pair<double, double>> kept_points;
    int next_id = 0;
    for (NodeId u = 0; u < n; ++u) {
        if (comp[static_cast<size_t>(u)] != keep) continue;
        remap[static_cast<size_t>(u)] = next_id++;
        kept_points.push_back(points[static_cast<size_t>(u)]);
    }
    std::vector<Edge> kept_edges;
    for (const Edge& e : edges)
        if (remap[static_cast<size_t>(e.u)] >= 0 && remap[static_cast<size_t>(e.v)] >= 0)
            kept_edges.emplace_back(remap[static_cast<size_t>(e.u)], remap[static_cast<size_t>(e.v)]);

    std::vector<Color> colors(static_cast<size_t>(next_id), Color::None);
    ColoredGraph graph(next_id, std::move(kept_edges), std::move(colors), {0});
    return GeometricGraph{std::move(graph), std::move(kept_points)};
}

ColoredGraph gen_barabasi_albert(int n, int m_bar, std::uint64_t seed) {
    if (m_bar < 1 || m_bar >= n) throw Error("attachment parameter must satisfy 1 <= m_bar < n");
    std::mt19937_64 gen(seed);
    std::vector<Edge> edges;
    // Endpoint pool: picking uniformly from it is degree-proportional.
    std::vector<NodeId> pool;
    for (int u = 0; u < m_bar; ++u)
        for (int v = u + 1; v < m_bar; ++v) {
            edges.emplace_back(u, v);
            pool.push_back(u);
            pool.push_back(v);
        }
    if (m_bar == 1) pool.push_back(0);  // lone seed node has degree 0 otherwise
    std::vector<NodeId> chosen;
    for (int v = m_bar; v < n; ++v) {
        chosen.clear();
        while (static_cast<int>(chosen.size()) < std::min(m_bar, v)) {
            const NodeId candidate = pool[static_cast<size_t>(gen() % pool.size())];
            if (std::find(chosen.begin(), chosen.end(), candidate) == chosen.end())
                chosen.push_back(candidate);
        }
        for (NodeId u : chosen) {
            edges.emplace_back(u, v);
            pool.push_back(u);
            pool.push_back(v);
        }
    }
    std::vector<Color> colors(static_cast<size_t>(n), Color::None);
    return ColoredGraph(n, std::move(edges), std::move(colors), {0});
}

namespace {

ColoredGraph recolor(const ColoredGraph& graph, const std::vector<std::pair<double, NodeId>>& ranked,
                     NodeId terminal, int count_b, int count_r) {
    if (count_b < 0 || count_r < 0 || count_b + count_r > graph.num_nodes() - 1)
        throw Error("requested group sizes exceed available nodes");
    std::vector<Color> colors(static_cast<size_t>(graph.num_nodes()), Color::None);
    for (int i = 0; i < count_b; ++i)
        colors[static_cast<size_t>(ranked[static_cast<size_t>(i)].second)] = Color::Blue;
    for (int i = 0; i < count_r; ++i)
        colors[static_cast<size_t>(ranked[ranked.size() - 1 - static_cast<size_t>(i)].second)] =
            Color::Red;
    return ColoredGraph(graph.num_nodes(), graph.edges(), std::move(colors), {terminal});
}

}  // namespace

ColoredGraph assign_groups_by_proximity(const ColoredGraph& graph, NodeId terminal, int count_b,
                                        int count_r) {
    if (!graph.has_node(terminal)) throw Error("terminal out of range");
    std::vector<std::int32_t> dist(static_cast<size_t>(graph.num_nodes()),
                                   DistanceMatrix::kInfinity);
    dist[static_cast<size_t>(terminal)] = 0;
    std::queue<NodeId> queue;
    queue.push(terminal);
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop();
        for (NodeId w : graph.neighbors(u)) {
            if (dist[static_cast<size_t>(w)] != DistanceMatrix::kInfinity) continue;
            dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(u)] + 1;
            queue.push(w);
        }
    }
    std::vector<std::pair<double, NodeId>> ranked;
    for (NodeId u = 0; u < graph.num_nodes(); ++u) {
        if (u == terminal) continue;
        if (dist[static_cast<size_t>(u)] == DistanceMatrix::kInfinity)
            throw DisconnectedError("proximity grouping requires a connected graph");
        ranked.emplace_back(double(dist[static_cast<size_t>(u)]), u);
    }
    std::sort(ranked.begin(), ranked.end());
    return recolor(graph, ranked, terminal, count_b, count_r);
}

ColoredGraph assign_groups_by_euclidean(const ColoredGraph& graph,
                                        const std::vector<std::pair<double, double>>& positions,
                                        NodeId terminal, int count_b, int count_r) {
    if (!graph.has_node(terminal)) throw Error("terminal out of range");
    if (static_cast<int>(positions.size()) != graph.num_nodes())
        throw Error("positions must cover every node");
    std::vector<std::pair<double, NodeId>> ranked;
    const auto [tx, ty] = positions[static_cast<size_t>(terminal)];
    for (NodeId u = 0; u < graph.num_nodes(); ++u) {
        if (u == terminal) continue;
        const double dx = positions[static_cast<size_t>(u)].first - tx;
        const double dy = positions[static_cast<size_t>(u)].second - ty;
        ranked.emplace_back(std::sqrt(dx * dx + dy * dy), u);
    }
    std::sort(ranked.begin(), ranked.end());
    return recolor(graph, ranked, terminal, count_b, count_r);
}

SetCoverReduction gen_setcover_reduction(int universe_size,
                                         const std::vector<std::vector<int>>& sets,
                                         int chain_length) {
    if (universe_size < 1 || universe_size > 30)
        throw Error("universe size must lie in [1, 30]");
    if (chain_length < 1) throw Error("chain length must be >= 1");
    if (sets.empty()) throw Error("set system must be nonempty");
    if (sets.size() > 20) throw Error("exact cover computation supports at most 20 sets");

    const int m = universe_size;
    const int k = static_cast<int>(sets.size());
    std::vector<std::uint32_t> masks(sets.size(), 0);
    for (size_t i = 0; i < sets.size(); ++i) {
        for (int el : sets[i]) {
            if (el < 0 || el >= m) throw Error("set element outside the universe");
            masks[i] |= (1u << el);
        }
    }
    std::uint32_t all = 0;
    for (auto mask : masks) all |= mask;
    if (all != (1u << m) - 1)
        throw Error("some universe element is not covered by any set");

    int k_star = k + 1;
    for (std::uint32_t choose = 0; choose < (1u << k); ++choose) {
        std::uint32_t covered = 0;
        for (int i = 0; i < k; ++i)
            if (choose & (1u << i)) covered |= masks[static_cast<size_t>(i)];
        if (covered == all) k_star = std::min(k_star, __builtin_popcount(choose));
    }

    // Layout: element nodes 0..m-1 (Blue), set nodes m..m+k-1, then per set
    // chain_length-1 intermediates, terminal r last. Each set reaches r via
    // a path of exactly chain_length edges.
    const int intermediates = chain_length - 1;
    const int n = m + k + k * intermediates + 1;
    const NodeId terminal = n - 1;
    auto set_node = [&](int i) { return m + i; };
    auto chain_node = [&](int i, int j) { return m + k + i * intermediates + j; };

    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int el : sets[static_cast<size_t>(i)]) edges.emplace_back(el, set_node(i));
    for (int i = 0; i < k; ++i) {
        NodeId prev = set_node(i);
        for (int j = 0; j < intermediates; ++j) {
            edges.emplace_back(prev, chain_node(i, j));
            prev = chain_node(i, j);
        }
        edges.emplace_back(prev, terminal);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::vector<Color> colors(static_cast<size_t>(n), Color::None);
    for (int el = 0; el < m; ++el) colors[static_cast<size_t>(el)] = Color::Blue;

    ColoredGraph graph(n, std::move(edges), std::move(colors), {terminal});
    SetCoverReduction out{FmlInstance::with_alpha(std::move(graph), 1, 1.0),
                          static_cast<long long>(m) + static_cast<long long>(chain_length) * k_star,
                          k_star, terminal, {}, {}};
    for (int el = 0; el < m; ++el) out.element_nodes.push_back(el);
    for (int i = 0; i < k; ++i) out.set_nodes.push_back(set_node(i));
    return out;
}

FmlInstance ingest_edge_list(const std::string& path, int rho, double alpha,
                             const IngestOverrides& overrides) {
    ColoredGraph raw = read_graph(load_text_file(path));
    if (overrides.terminal || overrides.random_colors) {
        std::vector<NodeId> terminals =
            overrides.terminal ? std::vector<NodeId>{*overrides.terminal} : raw.terminals();
        std::vector<Color> colors = raw.colors();
        if (overrides.random_colors) {
            const auto [count_b, count_r] = *overrides.random_colors;
            std::vector<NodeId> pool;
            for (NodeId u = 0; u < raw.num_nodes(); ++u)
                if (std::find(terminals.begin(), terminals.end(), u) == terminals.end())
                    pool.push_back(u);
            if (count_b + count_r > static_cast<int>(pool.size()))
                throw Error("requested group sizes exceed available nodes");
            std::mt19937_64 gen(overrides.color_seed);
            for (size_t i = pool.size(); i > 1; --i)
                std::swap(pool[i - 1], pool[static_cast<size_t>(gen() % i)]);
            std::fill(colors.begin(), colors.end(), Color::None);
            for (int i = 0; i < count_b; ++i) colors[static_cast<size_t>(pool[static_cast<size_t>(i)])] = Color::Blue;
            for (int i = 0; i < count_r; ++i)
                colors[static_cast<size_t>(pool[static_cast<size_t>(count_b + i)])] = Color::Red;
        }
        raw = ColoredGraph(raw.num_nodes(), raw.edges(), std::move(colors), std::move(terminals));
    }
    const auto comp = component_ids(raw.num_nodes(), raw.edges());

    const int home = comp[static_cast<size_t>(raw.terminals().front())];
    for (NodeId t : raw.terminals())
        if (comp[static_cast<size_t>(t)] != home)
            throw DisconnectedError("terminals span multiple components");
    for (NodeId u = 0; u < raw.num_nodes(); ++u)
        if (raw.color(u) != Color::None && comp[static_cast<size_t>(u)] != home)
            throw DisconnectedError("colored node disconnected from the terminal component");

    std::vector<NodeId> remap(static_cast<size_t>(raw.num_nodes()), -1);
    int next_id = 0;
    for (NodeId u = 0; u < raw.num_nodes(); ++u)
        if (comp[static_cast<size_t>(u)] == home) remap[static_cast<size_t>(u)] = next_id++;

    std::vector<Edge> edges;
    for (const Edge& e : raw.edges())
        if (remap[static_cast<size_t>(e.u)] >= 0)
            edges.emplace_back(remap[static_cast<size_t>(e.u)], remap[static_cast<size_t>(e.v)]);
    std::vector<Color> colors(static_cast<size_t>(next_id), Color::None);
    for (NodeId u = 0; u < raw.num_nodes(); ++u)
        if (remap[static_cast<size_t>(u)] >= 0)
            colors[static_cast<size_t>(remap[static_cast<size_t>(u)])] = raw.color(u);
    std::vector<NodeId> terminals;
    for (NodeId t : raw.terminals()) terminals.push_back(remap[static_cast<size_t>(t)]);

    return FmlInstance::with_alpha(
        ColoredGraph(next_id, std::move(edges), std::move(colors), std::move(terminals)), rho,
        alpha);
}

}  // namespace fml
