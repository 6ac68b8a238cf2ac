#pragma once

#include "fml/graph.hpp"
#include "fml/tree_dp.hpp"

namespace fml {

// Translates a tree solution into a temporal labeling on the original
// graph. Every selected tree edge (child u, parent v) with tree timestamp
// tau activates the deterministic shortest path from u to v with
// consecutive timestamps (tau-1)*n + 1 ... (tau-1)*n + p, child side first.
// Windows for distinct tau never interleave, so temporal reachability
// toward the root carries over to the graph.
TemporalLabeling project(const ColoredGraph& graph, const TreeSolution& tree_solution,
                         const WeightedTree& tree);

// Size of the projected labeling after merging coincident (edge, timestamp)
// pairs; never exceeds the sum of shortest-path lengths of selected edges.
long long projected_cost(const ColoredGraph& graph, const TreeSolution& tree_solution,
                         const WeightedTree& tree);

}  // namespace fml
