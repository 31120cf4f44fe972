#include "interplab/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <numbers>
#include <numeric>

#include "interplab/error.hpp"
#include "interplab/parallel.hpp"
#include "interplab/rng.hpp"

namespace interplab {

std::string_view to_string(Objective objective) { return objective == Objective::Sup ? "sup" : "integral"; }

Objective parse_objective(std::string_view name) {
    if (name == "sup") return Objective::Sup;
    if (name == "integral") return Objective::Integral;
    throw InvalidArgument("unknown objective: " + std::string(name));
}

double certificate(std::size_t n, Interval interval, Objective objective, double slack) {
    if (n < 2) throw InvalidArgument("certificate: need n >= 2");
    require_nondegenerate(interval, "optimize");
    const double log_n = std::log(static_cast<double>(n));
    const double pi = std::numbers::pi;
    const bool full = interval == Interval{};
    if (objective == Objective::Sup) return full ? 2.0 / pi * log_n + kVertesiConstant : 2.0 / pi * log_n - slack;
    return 4.0 * interval.length() / (pi * pi) * log_n - slack;
}

double objective_value(const NodeSet& nodes, Interval interval, Objective objective, std::size_t resolution) {
    const LagrangeBasis basis(nodes);
    if (objective == Objective::Sup) return lebesgue_sup(basis, interval, resolution).sup_value;
    return lebesgue_integral(basis, interval, resolution).integral_value;
}

OptimizationResult optimize_nodes(const NodeSet& start, Interval interval, Objective objective, std::size_t iterations,
                                  std::uint64_t seed, const OptimizeOptions& options) {
    require_nondegenerate(interval, "optimize");
    if (!(options.initial_step > 0.0 && options.min_step > 0.0 && options.step_shrink > 0.0 && options.step_shrink < 1.0))
        throw InvalidArgument("optimize_nodes: bad step schedule");
    const std::size_t resolution = objective == Objective::Sup ? options.grid_points_per_gap : options.quadrature_order;
    const std::size_t n = start.size();

    OptimizationResult out{.best_nodes = start, .objective = objective, .interval = interval, .trace = {}};
    out.seed = seed;
    out.initial_value = objective_value(start, interval, objective, resolution);
    out.best_value = out.initial_value;
    out.certificate = n >= 2 ? certificate(n, interval, objective, options.certificate_slack) : 1.0;

    Rng rng(seed);
    std::vector<double> xs(start.xs().begin(), start.xs().end());
    std::vector<std::size_t> order(n);
    double step = options.initial_step;
    for (std::size_t sweep = 0; sweep < iterations && step >= options.min_step; ++sweep) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
        bool improved = false;
        for (std::size_t i : order) {
            const double left = i == 0 ? -1.0 : xs[i - 1];
            const double right = i + 1 == n ? 1.0 : xs[i + 1];
            const double gap = std::min(xs[i] - left, right - xs[i]);
            if (!(gap > 0.0)) continue;  // a node pinned to +-1
            const double candidates[2] = {xs[i] - step * gap, xs[i] + step * gap};
            const auto values = parallel_map(2, [&](std::size_t c) {
                std::vector<double> trial = xs;
                trial[i] = candidates[c];
                try {
                    return objective_value(NodeSet(std::move(trial), start.label()), interval, objective, resolution);
                } catch (const InvalidArgument&) {
                    return std::numeric_limits<double>::infinity();
                }
            });
            const std::size_t pick = values[1] < values[0] ? 1 : 0;
            if (values[pick] < out.best_value) {
                xs[i] = candidates[pick];
                out.best_value = values[pick];
                ++out.accepted;
                improved = true;
            }
        }
        out.trace.push_back(out.best_value);
        ++out.iterations;
        if (!improved) step *= options.step_shrink;
    }
    if (out.accepted > 0) out.best_nodes = NodeSet(xs, start.label().empty() ? "optimized" : start.label() + "+optimized");
    out.fine_value = objective_value(out.best_nodes, interval, objective, 4 * resolution);
    return out;
}

}  // namespace interplab
