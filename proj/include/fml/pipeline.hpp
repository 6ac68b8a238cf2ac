#pragma once

#include <optional>
#include <string>

#include "fml/baselines.hpp"
#include "fml/frt.hpp"
#include "fml/problem.hpp"
#include "fml/projection.hpp"
#include "fml/tree_dp.hpp"
#include "fml/verifier.hpp"

namespace fml {

enum class Algorithm { FmlExact, FmlBicriteria, Greedy, Closest, Alternating };

Algorithm algorithm_from_name(const std::string& name);
std::string algorithm_name(Algorithm algo);
bool is_fml_algorithm(Algorithm algo);

struct SolveOptions {
    Algorithm algorithm = Algorithm::FmlBicriteria;
    double epsilon = 0.1;     // bicriteria only
    std::uint64_t seed = 0;   // drives the tree sample
    int trials = 1;           // keep the cheapest verified solution
};

struct SolveResult {
    FmlSolution solution;
    VerifyReport report;      // with the declared xi
    std::optional<WeightedTree> tree;  // last embedding tree (fml algorithms)
    TreeSolution tree_solution;        // fml algorithms only
};

// Runs the requested algorithm on the instance. The fml algorithms require
// a single terminal and rho = 1: they embed the hop metric into a sampled
// tree rooted at the terminal, solve the tree DP and project the solution
// back onto the graph.
SolveResult run_algorithm(const FmlInstance& instance, const SolveOptions& options);

}  // namespace fml
