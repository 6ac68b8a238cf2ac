#pragma once

#include <string>

#include "fml/problem.hpp"

namespace fml {

// Outcome of checking one labeling against the instance's constraint
// system. Slacks are covered minus required; negative means violated.
struct VerifyReport {
    bool feasible = false;
    long long covered_blue = 0;
    long long covered_red = 0;
    long long required_blue = 0;  // after relaxation, when any
    long long required_red = 0;
    long long slack_blue = 0;
    long long slack_red = 0;
    long long cost = 0;
    double xi = 1.0;
};

// Checks the full constraint system: at least ceil(requirement_c) nodes of
// each group temporally reach >= rho terminals. Throws InvalidLabelingError
// when the labeling references edges outside the instance graph.
VerifyReport verify(const FmlInstance& instance, const FmlSolution& solution);

// Same test with requirements divided by xi >= 1 before the ceiling.
VerifyReport verify_relaxed(const FmlInstance& instance, const FmlSolution& solution, double xi);

std::string report_to_json(const VerifyReport& report);

}  // namespace fml
