#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "fml/graph.hpp"

namespace fml {

// Ceiling of a real-valued requirement, guarded against floating point
// drift just below an integer (e.g. 0.3 * 20 = 6.000000000000001).
inline long long ceil_requirement(double x) {
    if (x <= 0.0) return 0;
    return static_cast<long long>(std::ceil(x - 1e-9));
}

// An FML problem statement: colored graph, terminal multiplicity rho and
// per-group coverage requirements. When constructed from alpha the
// requirements are alpha * |group|.
class FmlInstance {
public:
    static FmlInstance with_alpha(ColoredGraph graph, int rho, double alpha);
    static FmlInstance with_requirements(ColoredGraph graph, int rho, double requirement_blue,
                                         double requirement_red);

    const ColoredGraph& graph() const { return graph_; }
    int rho() const { return rho_; }
    double requirement_blue() const { return requirement_blue_; }
    double requirement_red() const { return requirement_red_; }
    std::optional<double> alpha() const { return alpha_; }

    long long required_blue() const { return ceil_requirement(requirement_blue_); }
    long long required_red() const { return ceil_requirement(requirement_red_); }

private:
    FmlInstance(ColoredGraph graph, int rho, double req_b, double req_r,
                std::optional<double> alpha);

    ColoredGraph graph_;
    int rho_ = 1;
    double requirement_blue_ = 0.0;
    double requirement_red_ = 0.0;
    std::optional<double> alpha_;
};

// Provenance and measurements attached to a solution.
struct SolutionMeta {
    std::string algorithm;
    std::uint64_t seed = 0;
    double epsilon = 0.0;       // 0 when not applicable
    double alpha = 0.0;
    double xi = 1.0;            // declared coverage relaxation factor
    int tree_height = -1;       // -1 when no embedding tree was used
    long long hop_cost = -1;    // per-source hop-distance cost (baselines), -1 otherwise
    double embed_seconds = 0.0;
    double solve_seconds = 0.0;
};

struct FmlSolution {
    TemporalLabeling labeling;
    long long cost = 0;  // always equals labeling.size()
    SolutionMeta meta;

    static FmlSolution from_labeling(TemporalLabeling labeling, SolutionMeta meta) {
        FmlSolution s;
        s.cost = labeling.size();
        s.labeling = std::move(labeling);
        s.meta = std::move(meta);
        return s;
    }
};

}  // namespace fml
