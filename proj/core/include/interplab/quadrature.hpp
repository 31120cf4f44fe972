#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace interplab {

/// Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Rule of the given order (>= 1); nodes via Newton iteration on P_order.
/// Results are cached, the returned reference stays valid.
const GaussLegendreRule& gauss_legendre(std::size_t order);

/// Integral of f over [a, b] with one application of `rule`.
template <typename F>
auto integrate_panel(F&& f, double a, double b, const GaussLegendreRule& rule) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    decltype(f(mid)) acc{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return acc * half;
}

struct Extremum {
    double x;
    double value;
};

/// Golden-section search for a maximum of a unimodal f on [a, b], stopping
/// once the bracket is narrower than `tol`. Endpoint values are considered,
/// so the result is never below max(f(a), f(b)).
Extremum golden_section_max(const std::function<double(double)>& f, double a, double b, double tol);

}  // namespace interplab
