#include "fml/baselines.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace fml {

namespace {

struct BaselineState {
    const FmlInstance* instance = nullptr;
    NodeId terminal = -1;
    std::vector<std::int32_t> dist;       // hop distance to the terminal
    std::vector<bool> covered;            // selected as a source
    TemporalLabeling labeling;
    long long hop_cost = 0;
    int covered_blue = 0;
    int covered_red = 0;
    int windows_used = 0;
};

BaselineState init_state(const FmlInstance& instance) {
    const ColoredGraph& graph = instance.graph();
    if (graph.terminals().size() != 1 || instance.rho() != 1)
        throw Error("baselines require a single terminal and rho = 1");
    BaselineState st;
    st.instance = &instance;
    st.terminal = graph.terminals().front();
    st.dist.assign(static_cast<size_t>(graph.num_nodes()), DistanceMatrix::kInfinity);
    st.dist[static_cast<size_t>(st.terminal)] = 0;
    std::queue<NodeId> queue;
    queue.push(st.terminal);
    while (!queue.empty()) {
        NodeId u = queue.front();
        queue.pop();
        for (NodeId w : graph.neighbors(u)) {
            if (st.dist[static_cast<size_t>(w)] != DistanceMatrix::kInfinity) continue;
            st.dist[static_cast<size_t>(w)] = st.dist[static_cast<size_t>(u)] + 1;
            queue.push(w);
        }
    }
    st.covered.assign(static_cast<size_t>(graph.num_nodes()), false);
    return st;
}

// Closest uncovered colored node whose group `want` permits; ties by id.
// want == Color::None means any group.
NodeId pick_closest(const BaselineState& st, Color want) {
    const ColoredGraph& graph = st.instance->graph();
    NodeId best = -1;
    for (NodeId u = 0; u < graph.num_nodes(); ++u) {
        if (st.covered[static_cast<size_t>(u)] || graph.color(u) == Color::None) continue;
        if (want != Color::None && graph.color(u) != want) continue;
        if (st.dist[static_cast<size_t>(u)] == DistanceMatrix::kInfinity) continue;
        if (best < 0 || st.dist[static_cast<size_t>(u)] < st.dist[static_cast<size_t>(best)]) best = u;
    }
    return best;
}

// Activates the shortest path from `source` toward the terminal inside its
// own timestamp window, mirroring the projection's window rule.
void cover(BaselineState& st, NodeId source) {
    const ColoredGraph& graph = st.instance->graph();
    const long long window = graph.num_nodes();
    const auto path = shortest_path(graph, source, st.terminal);
    long long t = static_cast<long long>(st.windows_used) * window;
    if (t + window > std::numeric_limits<int>::max())
        throw Error("timestamp window exceeds the representable range");
    for (const Edge& e : path) st.labeling.add(e, static_cast<int>(++t));
    ++st.windows_used;
    st.covered[static_cast<size_t>(source)] = true;
    st.hop_cost += st.dist[static_cast<size_t>(source)];
    if (graph.color(source) == Color::Blue) ++st.covered_blue;
    if (graph.color(source) == Color::Red) ++st.covered_red;
}

FmlSolution finish(BaselineState& st, const std::string& name) {
    SolutionMeta meta;
    meta.algorithm = name;
    meta.hop_cost = st.hop_cost;
    meta.alpha = st.instance->alpha().value_or(0.0);
    return FmlSolution::from_labeling(std::move(st.labeling), std::move(meta));
}

}  // namespace

FmlSolution greedy_agnostic(const FmlInstance& instance) {
    BaselineState st = init_state(instance);
    const long long quota =
        ceil_requirement(instance.requirement_blue() + instance.requirement_red());
    long long total = 0;
    while (total < quota) {
        const NodeId pick = pick_closest(st, Color::None);
        if (pick < 0) throw InfeasibleError("not enough reachable colored nodes");
        cover(st, pick);
        ++total;
    }
    return finish(st, "greedy");
}

FmlSolution closest(const FmlInstance& instance) {
    BaselineState st = init_state(instance);
    const long long quota_b = instance.required_blue();
    const long long quota_r = instance.required_red();
    while (st.covered_blue < quota_b || st.covered_red < quota_r) {
        Color want = Color::None;
        if (st.covered_blue >= quota_b) want = Color::Red;
        if (st.covered_red >= quota_r) want = Color::Blue;
        const NodeId pick = pick_closest(st, want);
        if (pick < 0) throw InfeasibleError("not enough reachable colored nodes");
        cover(st, pick);
    }
    return finish(st, "closest");
}

FmlSolution alternating(const FmlInstance& instance) {
    BaselineState st = init_state(instance);
    const long long quota_b = instance.required_blue();
    const long long quota_r = instance.required_red();
    Color turn = Color::Blue;
    while (st.covered_blue < quota_b || st.covered_red < quota_r) {
        Color want = turn;
        if (want == Color::Blue && st.covered_blue >= quota_b) want = Color::Red;
        if (want == Color::Red && st.covered_red >= quota_r) want = Color::Blue;
        const NodeId pick = pick_closest(st, want);
        if (pick < 0) throw InfeasibleError("not enough reachable colored nodes");
        cover(st, pick);
        turn = (turn == Color::Blue) ? Color::Red : Color::Blue;
    }
    return finish(st, "alternating");
}

}  // namespace fml
