#include "fml/tree_dp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "fml/problem.hpp"

namespace fml {

long long bucket_index(long long x, double eps) {
    if (eps <= 0.0) throw Error("epsilon must be positive");
    if (x <= 0) return 0;
    if (x == 1) return 1;
    const double log_base = std::log1p(eps);
    long long i = 1 + static_cast<long long>(std::floor(std::log(double(x)) / log_base));
    auto power = [&](long long k) { return std::exp(double(k) * log_base); };
    while (i > 1 && power(i - 1) > double(x)) --i;
    while (power(i) <= double(x)) ++i;
    return i;
}

namespace {

constexpr double kInfCost = std::numeric_limits<double>::infinity();

// Dense (b, r) -> best candidate grid reused across merges of one DP run.
struct MergeScratch {
    int stride = 0;
    std::vector<double> cost;
    std::vector<std::int32_t> prev;
    std::vector<std::int32_t> via;
    std::vector<std::int32_t> touched;

    void init(int max_b, int max_r) {
        stride = max_r + 1;
        const size_t cells = static_cast<size_t>(max_b + 1) * static_cast<size_t>(stride);
        cost.assign(cells, kInfCost);
        prev.assign(cells, -1);
        via.assign(cells, -1);
        touched.clear();
    }

    void offer(int b, int r, double c, int p, int v) {
        const size_t idx = static_cast<size_t>(b) * stride + r;
        if (c < cost[idx]) {
            if (cost[idx] == kInfCost) touched.push_back(static_cast<std::int32_t>(idx));
            cost[idx] = c;
            prev[idx] = p;
            via[idx] = v;
        }
    }

    // Collects touched cells in (b, r) order and resets them.
    LabelSet collect() {
        std::sort(touched.begin(), touched.end());
        LabelSet out;
        out.reserve(touched.size());
        for (std::int32_t idx : touched) {
            const size_t i = static_cast<size_t>(idx);
            out.push_back(DpLabel{static_cast<int>(i / stride), static_cast<int>(i % stride),
                                  cost[i], prev[i], via[i]});
            cost[i] = kInfCost;
            prev[i] = -1;
            via[i] = -1;
        }
        touched.clear();
        return out;
    }
};

LabelSet combine_and_prune_exact(const LabelSet& acc, const LabelSet& child, double edge_weight,
                                 MergeScratch& scratch) {
    for (int i = 0; i < static_cast<int>(acc.size()); ++i) {
        const DpLabel& a = acc[static_cast<size_t>(i)];
        scratch.offer(a.b, a.r, a.cost, i, -1);  // skip the child subtree
        for (int j = 0; j < static_cast<int>(child.size()); ++j) {
            const DpLabel& c = child[static_cast<size_t>(j)];
            scratch.offer(a.b + c.b, a.r + c.r, a.cost + c.cost + edge_weight, i, j);
        }
    }
    return prune_dominated(scratch.collect());
}

}  // namespace

LabelSet prune_dominated(LabelSet labels) {
    if (labels.size() <= 1) return labels;
    // labels sorted by (b asc, r asc); keys are unique.
    int max_r = 0;
    for (const DpLabel& l : labels) max_r = std::max(max_r, l.r);
    std::vector<double> suffix_min(static_cast<size_t>(max_r) + 2, kInfCost);

    LabelSet kept;
    kept.reserve(labels.size());
    int group_end = static_cast<int>(labels.size());
    while (group_end > 0) {
        int group_begin = group_end - 1;
        while (group_begin > 0 && labels[static_cast<size_t>(group_begin - 1)].b ==
                                      labels[static_cast<size_t>(group_end - 1)].b)
            --group_begin;
        // Within the group r is ascending; scan descending so row_min covers
        // strictly larger r of the same b.
        double row_min = kInfCost;
        for (int k = group_end - 1; k >= group_begin; --k) {
            const DpLabel& l = labels[static_cast<size_t>(k)];
            const bool dominated = suffix_min[static_cast<size_t>(l.r)] <= l.cost || row_min <= l.cost;
            if (!dominated) kept.push_back(l);
            row_min = std::min(row_min, l.cost);
        }
        for (int k = group_begin; k < group_end; ++k) {
            const DpLabel& l = labels[static_cast<size_t>(k)];
            suffix_min[static_cast<size_t>(l.r)] = std::min(suffix_min[static_cast<size_t>(l.r)], l.cost);
        }
        for (int r = max_r - 1; r >= 0; --r)
            suffix_min[static_cast<size_t>(r)] =
                std::min(suffix_min[static_cast<size_t>(r)], suffix_min[static_cast<size_t>(r) + 1]);
        group_end = group_begin;
    }
    std::sort(kept.begin(), kept.end(), [](const DpLabel& a, const DpLabel& b) {
        if (a.b != b.b) return a.b < b.b;
        return a.r < b.r;
    });
    return kept;
}

LabelSet bucket_prune(const LabelSet& labels, double eps) {
    // Bucket index per distinct count value, cached (counts repeat a lot).
    std::map<int, long long> index_cache;
    auto bucket_of = [&](int x) {
        auto it = index_cache.find(x);
        if (it != index_cache.end()) return it->second;
        const long long i = bucket_index(x, eps);
        index_cache.emplace(x, i);
        return i;
    };

    std::map<std::pair<long long, long long>, DpLabel> best;
    for (const DpLabel& l : labels) {
        const auto key = std::make_pair(bucket_of(l.b), bucket_of(l.r));
        auto [it, inserted] = best.try_emplace(key, l);
        if (inserted) continue;
        const DpLabel& cur = it->second;
        const bool better = l.cost < cur.cost ||
                            (l.cost == cur.cost && std::make_pair(l.b, l.r) > std::make_pair(cur.b, cur.r));
        if (better) it->second = l;
    }
    LabelSet out;
    out.reserve(best.size());
    for (const auto& [key, l] : best) out.push_back(l);
    std::sort(out.begin(), out.end(), [](const DpLabel& a, const DpLabel& b) {
        if (a.b != b.b) return a.b < b.b;
        return a.r < b.r;
    });
    return out;
}

LabelSet merge_child(const LabelSet& acc, const LabelSet& child, double edge_weight,
                     const DpMode& mode) {
    int max_b = 0, max_r = 0;
    for (const DpLabel& l : acc) {
        max_b = std::max(max_b, l.b);
        max_r = std::max(max_r, l.r);
    }
    int child_max_b = 0, child_max_r = 0;
    for (const DpLabel& l : child) {
        child_max_b = std::max(child_max_b, l.b);
        child_max_r = std::max(child_max_r, l.r);
    }
    MergeScratch scratch;
    scratch.init(max_b + child_max_b, max_r + child_max_r);
    LabelSet merged = combine_and_prune_exact(acc, child, edge_weight, scratch);
    if (mode.bucketed) merged = prune_dominated(bucket_prune(merged, mode.epsilon));
    return merged;
}

namespace {

DpLabel base_label(Color c) {
    DpLabel l;
    if (c == Color::Blue) l.b = 1;
    if (c == Color::Red) l.r = 1;
    return l;
}

}  // namespace

DpRun run_label_dp(const WeightedTree& tree, const std::vector<Color>& colors,
                   const DpMode& mode) {
    const int n = tree.size();
    if (static_cast<int>(colors.size()) != n) throw Error("color array size must match tree");
    if (mode.bucketed && mode.epsilon <= 0.0) throw Error("epsilon must be positive");

    DpRun run;
    run.mode = mode;
    run.heights = tree.heights();
    run.nodes.resize(static_cast<size_t>(n));

    int total_b = 0, total_r = 0;
    for (Color c : colors) {
        if (c == Color::Blue) ++total_b;
        if (c == Color::Red) ++total_r;
    }
    MergeScratch scratch;
    scratch.init(total_b, total_r);

    const auto kids = tree.children();
    const auto depth = tree.depths();
    std::vector<NodeId> order(static_cast<size_t>(n));
    for (NodeId v = 0; v < n; ++v) order[static_cast<size_t>(v)] = v;
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (depth[static_cast<size_t>(a)] != depth[static_cast<size_t>(b)])
            return depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(b)];
        return a < b;
    });

    for (NodeId v : order) {
        NodeTables& tables = run.nodes[static_cast<size_t>(v)];
        tables.stages.push_back(LabelSet{base_label(colors[static_cast<size_t>(v)])});
        for (NodeId u : kids[static_cast<size_t>(v)]) {
            const LabelSet& child_final = run.nodes[static_cast<size_t>(u)].final;
            tables.stages.push_back(combine_and_prune_exact(
                tables.stages.back(), child_final, tree.weight[static_cast<size_t>(u)], scratch));
        }
        if (mode.bucketed) {
            tables.final = prune_dominated(bucket_prune(tables.stages.back(), mode.epsilon));
        } else {
            tables.final = tables.stages.back();
        }
        // Map final labels back into stages.back() for reconstruction.
        std::map<std::pair<int, int>, int> where;
        const LabelSet& last = tables.stages.back();
        for (int i = 0; i < static_cast<int>(last.size()); ++i)
            where[{last[static_cast<size_t>(i)].b, last[static_cast<size_t>(i)].r}] = i;
        tables.final_stage_index.clear();
        for (const DpLabel& l : tables.final)
            tables.final_stage_index.push_back(where.at({l.b, l.r}));
    }
    return run;
}

namespace {

std::vector<NodeId> reconstruct_edges(const DpRun& run, const WeightedTree& tree, NodeId root,
                                      int root_final_index) {
    const auto kids = tree.children();
    std::vector<NodeId> selected;
    std::vector<std::pair<NodeId, int>> stack{{root, root_final_index}};
    while (!stack.empty()) {
        auto [v, final_idx] = stack.back();
        stack.pop_back();
        const NodeTables& tables = run.nodes[static_cast<size_t>(v)];
        int idx = tables.final_stage_index[static_cast<size_t>(final_idx)];
        for (int k = static_cast<int>(tables.stages.size()) - 1; k >= 1; --k) {
            const DpLabel& l = tables.stages[static_cast<size_t>(k)][static_cast<size_t>(idx)];
            if (l.via >= 0) {
                const NodeId child = kids[static_cast<size_t>(v)][static_cast<size_t>(k - 1)];
                selected.push_back(child);
                stack.emplace_back(child, l.via);
            }
            idx = l.prev;
        }
    }
    std::sort(selected.begin(), selected.end());
    return selected;
}

TreeSolution select_and_reconstruct(const DpRun& run, const WeightedTree& tree,
                                    long long need_b, long long need_r, double xi) {
    const NodeTables& root_tables = run.nodes[static_cast<size_t>(tree.root)];
    int best = -1;
    for (int i = 0; i < static_cast<int>(root_tables.final.size()); ++i) {
        const DpLabel& l = root_tables.final[static_cast<size_t>(i)];
        if (l.b < need_b || l.r < need_r) continue;
        if (best < 0) {
            best = i;
            continue;
        }
        const DpLabel& cur = root_tables.final[static_cast<size_t>(best)];
        if (l.cost < cur.cost ||
            (l.cost == cur.cost && std::make_pair(l.b, l.r) > std::make_pair(cur.b, cur.r)))
            best = i;
    }
    if (best < 0) throw InfeasibleError("no root label satisfies the coverage requirements");

    const DpLabel chosen = root_tables.final[static_cast<size_t>(best)];
    TreeSolution solution;
    solution.selected_children = reconstruct_edges(run, tree, tree.root, best);
    solution.timestamps = schedule_tree_timestamps(solution.selected_children, tree);
    solution.achieved_blue = chosen.b;
    solution.achieved_red = chosen.r;
    solution.weighted_cost = chosen.cost;
    solution.xi = xi;
    solution.tree_height = tree.height();
    return solution;
}

}  // namespace

std::vector<NodeId> TreeSolution::selected_nodes(const WeightedTree& tree) const {
    std::vector<NodeId> nodes{tree.root};
    for (NodeId child : selected_children) nodes.push_back(child);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    return nodes;
}

TreeSolution solve_exact(const WeightedTree& tree, const std::vector<Color>& colors, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw Error("alpha must lie in [0, 1]");
    int total_b = 0, total_r = 0;
    for (Color c : colors) {
        if (c == Color::Blue) ++total_b;
        if (c == Color::Red) ++total_r;
    }
    const DpRun run = run_label_dp(tree, colors, DpMode::exact());
    return select_and_reconstruct(run, tree, ceil_requirement(alpha * total_b),
                                  ceil_requirement(alpha * total_r), 1.0);
}

TreeSolution solve_bicriteria(const WeightedTree& tree, const std::vector<Color>& colors,
                              double alpha, double epsilon) {
    if (alpha < 0.0 || alpha > 1.0) throw Error("alpha must lie in [0, 1]");
    if (epsilon <= 0.0) throw Error("epsilon must be positive");
    int total_b = 0, total_r = 0;
    for (Color c : colors) {
        if (c == Color::Blue) ++total_b;
        if (c == Color::Red) ++total_r;
    }
    const double xi = std::pow(1.0 + epsilon, tree.height() + 1);
    const DpRun run = run_label_dp(tree, colors, DpMode::bucketed_mode(epsilon));
    const long long need_b =
        ceil_requirement(double(ceil_requirement(alpha * total_b)) / xi);
    const long long need_r =
        ceil_requirement(double(ceil_requirement(alpha * total_r)) / xi);
    return select_and_reconstruct(run, tree, need_b, need_r, xi);
}

std::vector<int> schedule_tree_timestamps(const std::vector<NodeId>& selected_children,
                                          const WeightedTree& tree) {
    if (selected_children.empty()) return {};
    std::vector<bool> selected(static_cast<size_t>(tree.size()), false);
    for (NodeId c : selected_children) {
        if (c == tree.root || c < 0 || c >= tree.size())
            throw Error("internal: selected edge child out of range");
        selected[static_cast<size_t>(c)] = true;
    }
    const auto depth = tree.depths();
    int max_depth = 0;
    for (NodeId c : selected_children) {
        const NodeId p = tree.parent[static_cast<size_t>(c)];
        if (p != tree.root && !selected[static_cast<size_t>(p)])
            throw Error("internal: selected edges do not form a subtree containing the root");
        max_depth = std::max(max_depth, depth[static_cast<size_t>(c)]);
    }
    std::vector<int> timestamps;
    timestamps.reserve(selected_children.size());
    for (NodeId c : selected_children)
        timestamps.push_back(max_depth - depth[static_cast<size_t>(c)] + 1);
    return timestamps;
}

}  // namespace fml
