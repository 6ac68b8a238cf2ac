#pragma once

#include "fml/problem.hpp"

namespace fml {

// Fairness-agnostic greedy: activates shortest paths to the closest colored
// nodes (any group) until ceil(requirement_B + requirement_R) sources are
// covered. Meets the total quota but may leave one group uncovered.
FmlSolution greedy_agnostic(const FmlInstance& instance);

// Activates the shortest path to the closest uncovered colored node whose
// group is still below its quota, until both groups meet theirs.
FmlSolution closest(const FmlInstance& instance);

// Like closest but strictly alternates between groups B, R, B, R, ...;
// a group already at quota is skipped.
FmlSolution alternating(const FmlInstance& instance);

}  // namespace fml
