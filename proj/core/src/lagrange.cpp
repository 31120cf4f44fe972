#include "interplab/lagrange.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "interplab/error.hpp"
#include "interplab/parallel.hpp"
#include "interplab/quadrature.hpp"

namespace interplab {

LagrangeBasis::LagrangeBasis(NodeSet nodes) : nodes_(std::move(nodes)), weights_(nodes_.size()) {
    const std::size_t n = nodes_.size();
    std::vector<SignedLog> inv(n);
    double peak = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < n; ++k) {
        const SignedLog d = eval_Pprime_at_node(nodes_, k);
        inv[k] = {d.sign, -d.logmag};
        peak = std::max(peak, inv[k].logmag);
    }
    for (std::size_t k = 0; k < n; ++k) weights_[k] = inv[k].sign * std::exp(inv[k].logmag - peak);
    log_scale_ = peak;
}

std::size_t LagrangeBasis::snapped_node(double x) const {
    const auto xs = nodes_.xs();
    const auto it = std::lower_bound(xs.begin(), xs.end(), x);
    std::size_t best = size();
    double best_d = kNodeSnap;
    if (it != xs.end() && std::abs(*it - x) <= best_d) {
        best = static_cast<std::size_t>(it - xs.begin());
        best_d = std::abs(*it - x);
    }
    if (it != xs.begin() && std::abs(*std::prev(it) - x) < best_d) best = static_cast<std::size_t>(it - xs.begin()) - 1;
    return best;
}

double LagrangeBasis::node_factor(double x) const {
    // running product with the binary exponent split off every few factors
    double m = 1.0;
    long e = 0;
    const auto xs = nodes_.xs();
    for (std::size_t i = 0; i < xs.size(); ++i) {
        m *= x - xs[i];
        if ((i & 7U) == 7U) {
            int ex = 0;
            m = std::frexp(m, &ex);
            e += ex;
        }
    }
    if (m == 0.0) return 0.0;
    const double logmag = std::log(std::abs(m)) + static_cast<double>(e) * std::numbers::ln2 + log_scale_;
    return std::copysign(std::exp(logmag), m);
}

// First barycentric form l_k(x) = P(x) w_k / (x - x_k): backward stable for
// every x, including extrapolation outside the node hull.
double LagrangeBasis::basis(std::size_t k, double x) const {
    if (k >= size()) throw InvalidArgument("basis: index out of range");
    if (const std::size_t j = snapped_node(x); j < size()) return j == k ? 1.0 : 0.0;
    return node_factor(x) * weights_[k] / (x - nodes_[k]);
}

double LagrangeBasis::interpolate(std::span<const double> values, double x) const {
    if (values.size() != size()) throw InvalidArgument("interpolate: values length must equal node count");
    if (const std::size_t j = snapped_node(x); j < size()) return values[j];
    const auto xs = nodes_.xs();
    double acc = 0.0;
    for (std::size_t i = 0; i < size(); ++i) acc += weights_[i] / (x - xs[i]) * values[i];
    return node_factor(x) * acc;
}

double LagrangeBasis::lebesgue(double x) const {
    if (snapped_node(x) < size()) return 1.0;
    const auto xs = nodes_.xs();
    double acc = 0.0;
    for (std::size_t i = 0; i < size(); ++i) acc += std::abs(weights_[i] / (x - xs[i]));
    return std::abs(node_factor(x)) * acc;
}

double basis_eval(const NodeSet& nodes, std::size_t k, double x) { return LagrangeBasis(nodes).basis(k, x); }

double interpolate(const NodeSet& nodes, std::span<const double> values, double x) {
    return LagrangeBasis(nodes).interpolate(values, x);
}

double lebesgue_function(const NodeSet& nodes, double x) { return LagrangeBasis(nodes).lebesgue(x); }

std::vector<double> node_aligned_breakpoints(const NodeSet& nodes, Interval interval) {
    std::vector<double> cuts{interval.lo};
    for (double x : nodes.xs()) {
        if (x > interval.lo && x < interval.hi) cuts.push_back(x);
    }
    cuts.push_back(interval.hi);
    return cuts;
}

namespace {

void check_interval(const Interval& interval, const char* what) {
    require_nondegenerate(interval, what);
    if (!interval.within(Interval{-1.0, 1.0})) throw InvalidArgument(std::string(what) + ": interval must lie in [-1, 1]");
}

}  // namespace

LebesgueReport lebesgue_sup(const LagrangeBasis& basis, Interval interval, std::size_t grid_points_per_gap) {
    check_interval(interval, "lebesgue_sup");
    if (grid_points_per_gap < 4) throw InvalidArgument("lebesgue_sup: grid_points_per_gap must be >= 4");
    const auto cuts = node_aligned_breakpoints(basis.nodes(), interval);
    const auto lambda = [&](double x) { return basis.lebesgue(x); };

    const auto piece_max = parallel_map(cuts.size() - 1, [&](std::size_t p) {
        const double lo = cuts[p];
        const double hi = cuts[p + 1];
        const std::size_t g = grid_points_per_gap;
        const double h = (hi - lo) / static_cast<double>(g - 1);
        Extremum best{lo, lambda(lo)};
        std::size_t best_j = 0;
        for (std::size_t j = 1; j < g; ++j) {
            const double x = (j + 1 == g) ? hi : lo + h * static_cast<double>(j);
            const double v = lambda(x);
            if (v > best.value) {
                best = {x, v};
                best_j = j;
            }
        }
        const double left = best_j == 0 ? lo : lo + h * static_cast<double>(best_j - 1);
        const double right = best_j + 1 >= g ? hi : lo + h * static_cast<double>(best_j + 1);
        const Extremum refined = golden_section_max(lambda, left, right, 1e-10);
        return refined.value > best.value ? refined : best;
    });

    LebesgueReport report;
    report.interval = interval;
    report.grid_points_per_gap = grid_points_per_gap;
    report.sup_value = -std::numeric_limits<double>::infinity();
    for (const Extremum& e : piece_max) {
        if (e.value > report.sup_value) {
            report.sup_value = e.value;
            report.argmax = e.x;
        }
    }
    return report;
}

LebesgueReport lebesgue_integral(const LagrangeBasis& basis, Interval interval, std::size_t quadrature_order) {
    check_interval(interval, "lebesgue_integral");
    if (quadrature_order < 4) throw InvalidArgument("lebesgue_integral: quadrature_order must be >= 4");
    const auto cuts = node_aligned_breakpoints(basis.nodes(), interval);
    const GaussLegendreRule& rule = gauss_legendre(quadrature_order);

    const auto panels = parallel_map(cuts.size() - 1, [&](std::size_t p) {
        return integrate_panel([&](double x) { return basis.lebesgue(x); }, cuts[p], cuts[p + 1], rule);
    });

    LebesgueReport report;
    report.interval = interval;
    report.quadrature_order = quadrature_order;
    double total = 0.0;
    for (double v : panels) total += v;
    report.integral_value = total;
    return report;
}

LebesgueReport lebesgue_report(const LagrangeBasis& basis, Interval interval, std::size_t grid_points_per_gap,
                               std::size_t quadrature_order) {
    LebesgueReport report = lebesgue_sup(basis, interval, grid_points_per_gap);
    report.integral_value = lebesgue_integral(basis, interval, quadrature_order).integral_value;
    report.quadrature_order = quadrature_order;
    return report;
}

ConsecCheck consec_lower_check(const LagrangeBasis& basis, std::size_t k, std::size_t samples) {
    if (k + 1 >= basis.size()) throw InvalidArgument("consec_lower_check: need k < n - 1");
    if (samples < 2) throw InvalidArgument("consec_lower_check: need at least two samples");
    const double lo = basis.nodes()[k];
    const double hi = basis.nodes()[k + 1];
    ConsecCheck out{true, std::numeric_limits<double>::infinity(), lo};
    for (std::size_t j = 0; j < samples; ++j) {
        const double x = (j + 1 == samples) ? hi : lo + (hi - lo) * static_cast<double>(j) / static_cast<double>(samples - 1);
        const double v = basis.basis(k, x) + basis.basis(k + 1, x);
        if (v < out.min_value) {
            out.min_value = v;
            out.argmin = x;
        }
    }
    out.pass = out.min_value >= 1.0 - 1e-10;
    return out;
}

StoshCheck stosh_check(const NodeSet& nodes, double x, double y) {
    StoshCheck out;
    out.k = bracketing_index(nodes, x);
    const std::complex<double> z{x, y};
    out.log_lhs = eval_P(nodes, z).logmag;
    const double delta = nearest_node_distance(nodes, z);
    const double log_pk = std::min(eval_Pprime_at_node(nodes, out.k).logmag, eval_Pprime_at_node(nodes, out.k + 1).logmag);
    out.log_rhs = (delta == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(delta / 2.0)) + log_pk;
    if (std::isinf(out.log_rhs) && out.log_rhs < 0) {
        out.pass = true;
        out.ratio = std::isinf(out.log_lhs) ? 1.0 : std::numeric_limits<double>::infinity();
        return out;
    }
    out.ratio = std::exp(out.log_lhs - out.log_rhs);
    out.pass = out.log_lhs >= out.log_rhs + std::log1p(-1e-10);
    return out;
}

}  // namespace interplab
