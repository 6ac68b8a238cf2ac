#include "fml/problem.hpp"

namespace fml {

FmlInstance::FmlInstance(ColoredGraph graph, int rho, double req_b, double req_r,
                         std::optional<double> alpha)
    : graph_(std::move(graph)),
      rho_(rho),
      requirement_blue_(req_b),
      requirement_red_(req_r),
      alpha_(alpha) {
    if (rho_ < 1 || rho_ > static_cast<int>(graph_.terminals().size()))
        throw InfeasibleError("rho must be between 1 and the number of terminals");
    if (requirement_blue_ < 0.0 || requirement_red_ < 0.0)
        throw Error("requirements must be nonnegative");
    // Reject impossible instances eagerly rather than at verify time.
    if (ceil_requirement(requirement_blue_) > graph_.count_color(Color::Blue))
        throw InfeasibleError("blue requirement exceeds group size");
    if (ceil_requirement(requirement_red_) > graph_.count_color(Color::Red))
        throw InfeasibleError("red requirement exceeds group size");
}

FmlInstance FmlInstance::with_alpha(ColoredGraph graph, int rho, double alpha) {
    if (alpha < 0.0 || alpha > 1.0) throw Error("alpha must lie in [0, 1]");
    const double req_b = alpha * graph.count_color(Color::Blue);
    const double req_r = alpha * graph.count_color(Color::Red);
    return FmlInstance(std::move(graph), rho, req_b, req_r, alpha);
}

FmlInstance FmlInstance::with_requirements(ColoredGraph graph, int rho, double requirement_blue,
                                           double requirement_red) {
    return FmlInstance(std::move(graph), rho, requirement_blue, requirement_red, std::nullopt);
}

}  // namespace fml
