#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "interplab/interval.hpp"
#include "interplab/lagrange.hpp"
#include "interplab/nodes.hpp"

namespace interplab {

enum class Objective { Sup, Integral };

std::string_view to_string(Objective objective);
/// "sup" or "integral"; throws InvalidArgument otherwise.
Objective parse_objective(std::string_view name);

/// 0.521251..., (2/pi)(gamma + log(4/pi)).
inline constexpr double kVertesiConstant = 0.521251;
/// 1.417018...
inline constexpr double kIntegralConstant = 1.417018;

/// Lower bound for the objective over n-node systems:
///   sup on [-1, 1]:          (2/pi) log n + 0.521251
///   sup on a subinterval:    (2/pi) log n - slack
///   integral on [-1, 1]:     (8/pi^2) log n - slack
///   integral on I:           (4|I|/pi^2) log n - slack
double certificate(std::size_t n, Interval interval, Objective objective, double slack = 0.0);

struct OptimizeOptions {
    std::size_t grid_points_per_gap = 16;
    std::size_t quadrature_order = kDefaultQuadratureOrder;
    double initial_step = 1e-2;  // fraction of the local gap
    double min_step = 1e-8;
    double step_shrink = 0.1;
    double certificate_slack = 0.2;
};

struct OptimizationResult {
    NodeSet best_nodes;
    Objective objective = Objective::Sup;
    Interval interval;
    double initial_value = 0.0;
    double best_value = 0.0;
    double fine_value = 0.0;  // best_nodes re-evaluated at 4x resolution
    std::size_t iterations = 0;
    std::size_t accepted = 0;
    double certificate = 0.0;
    std::uint64_t seed = 0;
    std::vector<double> trace;  // objective after each sweep, nonincreasing
};

/// Objective value at fixed resolution: grid points per gap for sup,
/// quadrature order for the integral.
double objective_value(const NodeSet& nodes, Interval interval, Objective objective, std::size_t resolution);

/// Coordinate descent: each sweep visits the nodes in a seeded random order
/// and tries x_i +- step * (local gap), accepting strict improvements that keep
/// the NodeSet invariants. After a sweep without improvement the step shrinks;
/// the run stops after `iterations` sweeps or when the step reaches min_step.
OptimizationResult optimize_nodes(const NodeSet& start, Interval interval, Objective objective, std::size_t iterations,
                                  std::uint64_t seed, const OptimizeOptions& options = {});

}  // namespace interplab
