#include "fml/verifier.hpp"

#include <json.hpp>

namespace fml {

namespace {

VerifyReport run_check(const FmlInstance& instance, const FmlSolution& solution, double xi) {
    const auto counts = coverage_counts(instance.graph(), solution.labeling, instance.rho());
    VerifyReport report;
    report.xi = xi;
    report.covered_blue = counts.covered_blue;
    report.covered_red = counts.covered_red;
    report.required_blue = ceil_requirement(instance.requirement_blue() / xi);
    report.required_red = ceil_requirement(instance.requirement_red() / xi);
    report.slack_blue = report.covered_blue - report.required_blue;
    report.slack_red = report.covered_red - report.required_red;
    report.cost = solution.labeling.size();
    report.feasible = report.slack_blue >= 0 && report.slack_red >= 0;
    return report;
}

}  // namespace

VerifyReport verify(const FmlInstance& instance, const FmlSolution& solution) {
    return run_check(instance, solution, 1.0);
}

VerifyReport verify_relaxed(const FmlInstance& instance, const FmlSolution& solution, double xi) {
    if (xi < 1.0) throw Error("relaxation factor xi must be >= 1");
    return run_check(instance, solution, xi);
}

std::string report_to_json(const VerifyReport& report) {
    nlohmann::ordered_json j;
    j["feasible"] = report.feasible;
    j["covered_B"] = report.covered_blue;
    j["covered_R"] = report.covered_red;
    j["required_B"] = report.required_blue;
    j["required_R"] = report.required_red;
    j["slack_B"] = report.slack_blue;
    j["slack_R"] = report.slack_red;
    j["cost"] = report.cost;
    j["xi"] = report.xi;
    return j.dump();
}

}  // namespace fml
