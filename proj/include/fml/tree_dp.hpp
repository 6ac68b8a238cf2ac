#pragma once

#include <cstdint>
#include <vector>

#include "fml/frt.hpp"
#include "fml/graph.hpp"

namespace fml {

// DP state: counts of blue/red nodes connected to the subtree root and the
// weighted cost of connecting them. prev/via are backpointers for solution
// reconstruction: prev indexes the previous merge stage, via the used label
// in the child's final set (-1 when the child subtree is skipped).
struct DpLabel {
    int b = 0;
    int r = 0;
    double cost = 0.0;
    int prev = -1;
    int via = -1;
};

using LabelSet = std::vector<DpLabel>;

struct DpMode {
    bool bucketed = false;
    double epsilon = 0.0;

    static DpMode exact() { return DpMode{}; }
    static DpMode bucketed_mode(double eps) { return DpMode{true, eps}; }
};

// Geometric bucket index: 0 for x = 0, otherwise the unique i >= 1 with
// (1+eps)^(i-1) <= x < (1+eps)^i, computed as 1 + floor(ln x / ln(1+eps))
// with a guard against floating-point drift at integer powers.
long long bucket_index(long long x, double eps);

// One pairwise merge step: every label of `acc` either keeps its child
// subtree excluded or combines with a child label at cost
// c1 + c2 + edge_weight. The result keeps one minimum-cost label per key
// ((b, r) exact, bucket pair bucketed) and drops dominated labels.
LabelSet merge_child(const LabelSet& acc, const LabelSet& child, double edge_weight,
                     const DpMode& mode);

// Keeps the cheapest label per (BucketIndex(b), BucketIndex(r)) pair; ties
// keep the lexicographically larger (b, r).
LabelSet bucket_prune(const LabelSet& labels, double eps);

// Removes labels dominated by another label (>= counts, <= cost, one strict).
LabelSet prune_dominated(LabelSet labels);

// Per-node result of the bottom-up label computation. `stages[k]` is the
// label set after merging the first k children; `final` is the node's kept
// set handed to its parent (bucket-pruned in bucketed mode) and
// `final_stage_index` maps each final label back into stages.back().
struct NodeTables {
    std::vector<LabelSet> stages;
    LabelSet final;
    std::vector<int> final_stage_index;
};

struct DpRun {
    std::vector<NodeTables> nodes;  // indexed by tree node id
    std::vector<int> heights;       // per-node subtree height
    DpMode mode;
};

// Bottom-up label computation over the whole tree in post-order; children
// merge left-to-right in ascending node id order. In bucketed mode the
// per-child merges keep exact (b, r) keys and the geometric bucketing is
// applied once per node, which is what the height-indexed coverage bound
// requires.
DpRun run_label_dp(const WeightedTree& tree, const std::vector<Color>& colors,
                   const DpMode& mode);

// A concrete tree solution: selected edges (identified by their child
// endpoint), one timestamp per edge, achieved counts and weighted cost.
struct TreeSolution {
    std::vector<NodeId> selected_children;
    std::vector<int> timestamps;  // parallel to selected_children
    int achieved_blue = 0;
    int achieved_red = 0;
    double weighted_cost = 0.0;
    double xi = 1.0;
    int tree_height = 0;

    std::vector<NodeId> selected_nodes(const WeightedTree& tree) const;
};

// Minimum weighted cost selection whose root label meets
// ceil(alpha |B|) and ceil(alpha |R|).
TreeSolution solve_exact(const WeightedTree& tree, const std::vector<Color>& colors, double alpha);

// Same DP with per-node geometric bucketing. The returned solution is the
// cheapest root label meeting the requirements divided by
// xi = (1+eps)^(H+1), re-ceiled; xi is declared in the solution.
TreeSolution solve_bicriteria(const WeightedTree& tree, const std::vector<Color>& colors,
                              double alpha, double epsilon);

// Assigns the timestamp D - k + 1 to every selected edge at depth k, where
// D is the maximum selected depth, so timestamps strictly increase toward
// the root along every selected path.
std::vector<int> schedule_tree_timestamps(const std::vector<NodeId>& selected_children,
                                          const WeightedTree& tree);

}  // namespace fml
