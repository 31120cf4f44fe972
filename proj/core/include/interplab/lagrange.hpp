#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "interplab/interval.hpp"
#include "interplab/nodes.hpp"

namespace interplab {

inline constexpr std::size_t kDefaultGridPointsPerGap = 32;
inline constexpr std::size_t kDefaultQuadratureOrder = 16;
/// Closer than this to a node, x is treated as the node itself.
inline constexpr double kNodeSnap = 1e-13;

/// Lagrange basis in the first barycentric form l_k(x) = P(x) w_k / (x - x_k)
/// with w_k = 1/P'(x_k). The weights are stored divided by max |w_k| and P(x)
/// is formed with explicit exponent tracking, so nothing under- or overflows
/// for large n.
class LagrangeBasis {
public:
    explicit LagrangeBasis(NodeSet nodes);

    [[nodiscard]] const NodeSet& nodes() const { return nodes_; }
    [[nodiscard]] std::size_t size() const { return nodes_.size(); }
    /// Scaled barycentric weights, proportional to 1/P'(x_k), max |w| = 1.
    [[nodiscard]] std::span<const double> weights() const { return weights_; }

    /// l_k(x); exactly 0 or 1 at (and within kNodeSnap of) a node.
    [[nodiscard]] double basis(std::size_t k, double x) const;
    /// sum_k values[k] l_k(x).
    [[nodiscard]] double interpolate(std::span<const double> values, double x) const;
    /// lambda(x) = sum_k |l_k(x)|; 1 at the nodes.
    [[nodiscard]] double lebesgue(double x) const;

private:
    // index of a node within kNodeSnap of x, or size() if none
    [[nodiscard]] std::size_t snapped_node(double x) const;
    // P(x) max_k |w_k|
    [[nodiscard]] double node_factor(double x) const;

    NodeSet nodes_;
    std::vector<double> weights_;
    double log_scale_ = 0.0;  // log max_k |w_k|
};

double basis_eval(const NodeSet& nodes, std::size_t k, double x);
double interpolate(const NodeSet& nodes, std::span<const double> values, double x);
double lebesgue_function(const NodeSet& nodes, double x);

struct LebesgueReport {
    Interval interval;
    double sup_value = 0.0;
    double argmax = 0.0;
    double integral_value = 0.0;
    std::size_t grid_points_per_gap = 0;
    std::size_t quadrature_order = 0;
};

/// sup of lambda over `interval` (a subset of [-1, 1]). The interval is cut at
/// interior nodes; each piece is sampled on a uniform grid and the best cell
/// refined by golden section to 1e-10 in x.
LebesgueReport lebesgue_sup(const LagrangeBasis& basis, Interval interval,
                            std::size_t grid_points_per_gap = kDefaultGridPointsPerGap);

/// Integral of lambda over `interval`: Gauss-Legendre of the given order on
/// every node-to-node panel, summed in panel order.
LebesgueReport lebesgue_integral(const LagrangeBasis& basis, Interval interval,
                                 std::size_t quadrature_order = kDefaultQuadratureOrder);

/// Both of the above in one report.
LebesgueReport lebesgue_report(const LagrangeBasis& basis, Interval interval,
                               std::size_t grid_points_per_gap = kDefaultGridPointsPerGap,
                               std::size_t quadrature_order = kDefaultQuadratureOrder);

struct ConsecCheck {
    bool pass = false;
    double min_value = 0.0;
    double argmin = 0.0;
};

/// Samples l_k + l_{k+1} on [x_k, x_{k+1}] (zero-based k < n-1) and checks
/// that it stays >= 1 - 1e-10.
ConsecCheck consec_lower_check(const LagrangeBasis& basis, std::size_t k, std::size_t samples);

struct StoshCheck {
    bool pass = false;
    std::size_t k = 0;      // bracketing index, x_k <= x <= x_{k+1}
    double log_lhs = 0.0;   // log |P(x+iy)|
    double log_rhs = 0.0;   // log(delta(x+iy)/2 * p_k)
    double ratio = 0.0;     // exp(log_lhs - log_rhs); 1 when both sides vanish
};

/// |P(x+iy)| >= delta(x+iy)/2 * min(|P'(x_k)|, |P'(x_{k+1})|) for x in the
/// node hull, evaluated in the log domain with 1e-10 relative slack.
StoshCheck stosh_check(const NodeSet& nodes, double x, double y);

/// Breakpoints of `interval` at the nodes strictly inside it, endpoints included.
std::vector<double> node_aligned_breakpoints(const NodeSet& nodes, Interval interval);

}  // namespace interplab
