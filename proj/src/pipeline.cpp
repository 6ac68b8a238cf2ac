#include "fml/pipeline.hpp"

#include <chrono>

namespace fml {

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "fml-exact") return Algorithm::FmlExact;
    if (name == "fml-bicriteria") return Algorithm::FmlBicriteria;
    if (name == "greedy") return Algorithm::Greedy;
    if (name == "closest") return Algorithm::Closest;
    if (name == "alternating") return Algorithm::Alternating;
    throw UsageError("unknown algorithm: " + name);
}

std::string algorithm_name(Algorithm algo) {
    switch (algo) {
        case Algorithm::FmlExact: return "fml-exact";
        case Algorithm::FmlBicriteria: return "fml-bicriteria";
        case Algorithm::Greedy: return "greedy";
        case Algorithm::Closest: return "closest";
        case Algorithm::Alternating: return "alternating";
    }
    throw Error("unreachable");
}

bool is_fml_algorithm(Algorithm algo) {
    return algo == Algorithm::FmlExact || algo == Algorithm::FmlBicriteria;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

SolveResult run_fml_pipeline(const FmlInstance& instance, const SolveOptions& options) {
    const ColoredGraph& graph = instance.graph();
    if (graph.terminals().size() != 1 || instance.rho() != 1)
        throw UsageError("fml solvers require a single terminal and rho = 1");
    if (!instance.alpha())
        throw UsageError("fml solvers require an alpha-form instance");
    const NodeId terminal = graph.terminals().front();
    const double alpha = *instance.alpha();

    const auto embed_start = std::chrono::steady_clock::now();
    const DistanceMatrix metric = all_pairs_hop_distance(graph);
    double embed_seconds = seconds_since(embed_start);

    std::optional<SolveResult> best;
    for (int trial = 0; trial < std::max(1, options.trials); ++trial) {
        const auto trial_embed_start = std::chrono::steady_clock::now();
        const auto hst = sample_hst(metric, derive_seed(options.seed, static_cast<std::uint64_t>(trial)));
        const WeightedTree tree = contract_to_vertex_tree(hst, terminal);
        embed_seconds += seconds_since(trial_embed_start);

        const auto solve_start = std::chrono::steady_clock::now();
        TreeSolution tree_solution =
            options.algorithm == Algorithm::FmlExact
                ? solve_exact(tree, graph.colors(), alpha)
                : solve_bicriteria(tree, graph.colors(), alpha, options.epsilon);
        TemporalLabeling labeling = project(graph, tree_solution, tree);
        const double solve_seconds = seconds_since(solve_start);

        SolutionMeta meta;
        meta.algorithm = algorithm_name(options.algorithm);
        meta.seed = options.seed;
        meta.epsilon = options.algorithm == Algorithm::FmlBicriteria ? options.epsilon : 0.0;
        meta.alpha = alpha;
        meta.xi = tree_solution.xi;
        meta.tree_height = tree_solution.tree_height;
        meta.embed_seconds = embed_seconds;
        meta.solve_seconds = solve_seconds;

        SolveResult candidate;
        candidate.solution = FmlSolution::from_labeling(std::move(labeling), std::move(meta));
        candidate.report = verify_relaxed(instance, candidate.solution, tree_solution.xi);
        candidate.tree = tree;
        candidate.tree_solution = std::move(tree_solution);
        if (!candidate.report.feasible)
            throw Error("internal: projected solution failed its declared guarantee");
        if (!best || candidate.solution.cost < best->solution.cost) best = std::move(candidate);
    }
    return std::move(*best);
}

}  // namespace

SolveResult run_algorithm(const FmlInstance& instance, const SolveOptions& options) {
    if (is_fml_algorithm(options.algorithm)) return run_fml_pipeline(instance, options);

    const auto start = std::chrono::steady_clock::now();
    FmlSolution solution;
    switch (options.algorithm) {
        case Algorithm::Greedy: solution = greedy_agnostic(instance); break;
        case Algorithm::Closest: solution = closest(instance); break;
        case Algorithm::Alternating: solution = alternating(instance); break;
        default: throw Error("unreachable");
    }
    solution.meta.seed = options.seed;
    solution.meta.solve_seconds = seconds_since(start);

    SolveResult result;
    result.report = verify(instance, solution);
    result.solution = std::move(solution);
    return result;
}

}  // namespace fml
