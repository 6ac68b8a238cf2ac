#include "fml/projection.hpp"

#include <limits>

namespace fml {

TemporalLabeling project(const ColoredGraph& graph, const TreeSolution& tree_solution,
                         const WeightedTree& tree) {
    if (tree.size() != graph.num_nodes())
        throw Error("tree node set must match the graph node set");
    const long long window = graph.num_nodes();  // upper bound on any path length
    TemporalLabeling labeling;
    for (size_t i = 0; i < tree_solution.selected_children.size(); ++i) {
        const NodeId child = tree_solution.selected_children[i];
        const NodeId parent = tree.parent[static_cast<size_t>(child)];
        const int tau = tree_solution.timestamps[i];
        const auto path = shortest_path(graph, child, parent);
        long long t = (static_cast<long long>(tau) - 1) * window;
        if (t + window > std::numeric_limits<int>::max())
            throw Error("timestamp window exceeds the representable range");
        for (const Edge& e : path) labeling.add(e, static_cast<int>(++t));
    }
    return labeling;
}

long long projected_cost(const ColoredGraph& graph, const TreeSolution& tree_solution,
                         const WeightedTree& tree) {
    return project(graph, tree_solution, tree).size();
}

}  // namespace fml
