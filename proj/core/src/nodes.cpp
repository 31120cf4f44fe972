#include "interplab/nodes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "interplab/error.hpp"
#include "interplab/rng.hpp"

namespace interplab {

NodeSet::NodeSet(std::vector<double> xs, std::string label, double gap_floor)
    : xs_(std::move(xs)), label_(std::move(label)) {
    if (xs_.empty()) throw InvalidArgument("node set must contain at least one node");
    for (double x : xs_) {
        if (!std::isfinite(x) || x < -1.0 || x > 1.0)
            throw InvalidArgument("node outside [-1, 1]: " + std::to_string(x));
    }
    for (std::size_t i = 1; i < xs_.size(); ++i) {
        if (!(xs_[i] > xs_[i - 1])) throw InvalidArgument("nodes must be strictly increasing");
        if (xs_[i] - xs_[i - 1] <= gap_floor)
            throw InvalidArgument("node gap below floor at index " + std::to_string(i));
    }
}

double NodeSet::min_gap() const {
    double g = std::numeric_limits<double>::infinity();
    for (std::size_t i = 1; i < xs_.size(); ++i) g = std::min(g, xs_[i] - xs_[i - 1]);
    return g;
}

double NodeSet::cumulative_mass(double x) const {
    const auto count = std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin();
    return static_cast<double>(count) / static_cast<double>(xs_.size());
}

NodeSet chebyshev_nodes(std::size_t n) {
    if (n == 0) throw InvalidArgument("chebyshev_nodes: n must be >= 1");
    std::vector<double> xs(n);
    const double two_n = 2.0 * static_cast<double>(n);
    // x_{n+1-k} = cos((2k-1) pi / 2n) = -x_k; both are filled from one cosine
    // so the set is symmetric to the last bit.
    for (std::size_t k = 1; 2 * k <= n; ++k) {
        const double c = std::cos(static_cast<double>(2 * k - 1) * std::numbers::pi / two_n);
        xs[n - k] = c;
        xs[k - 1] = -c;
    }
    if (n % 2 == 1) xs[n / 2] = 0.0;
    return NodeSet(std::move(xs), "chebyshev(" + std::to_string(n) + ")");
}

NodeSet equispaced_nodes(std::size_t n) {
    if (n == 0) throw InvalidArgument("equispaced_nodes: n must be >= 1");
    if (n == 1) return NodeSet({0.0}, "equispaced(1)");
    std::vector<double> xs(n);
    const double denom = static_cast<double>(n - 1);
    for (std::size_t k = 0; k < n; ++k) xs[k] = -1.0 + 2.0 * static_cast<double>(k) / denom;
    xs.back() = 1.0;
    return NodeSet(std::move(xs), "equispaced(" + std::to_string(n) + ")");
}

NodeSet perturbed_nodes(const NodeSet& base, double magnitude, std::uint64_t seed) {
    if (!(magnitude >= 0.0)) throw InvalidArgument("perturbed_nodes: magnitude must be nonnegative");
    if (base.size() > 1 && !(magnitude < 0.5 * base.min_gap()))
        throw InvalidArgument("perturbed_nodes: magnitude must be below half the minimum gap");
    Rng rng(seed);
    std::vector<double> xs(base.xs().begin(), base.xs().end());
    for (double& x : xs) x = std::clamp(x + rng.uniform(-magnitude, magnitude), -1.0, 1.0);
    std::sort(xs.begin(), xs.end());
    return NodeSet(std::move(xs), base.label() + "+jitter(" + std::to_string(seed) + ")");
}

NodeSet random_nodes(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw InvalidArgument("random_nodes: n must be >= 1");
    Rng rng(seed);
    for (;;) {
        std::vector<double> xs(n);
        for (double& x : xs) x = rng.uniform(-1.0, 1.0);
        std::sort(xs.begin(), xs.end());
        bool ok = true;
        for (std::size_t i = 1; i < n && ok; ++i) ok = xs[i] - xs[i - 1] > 1e-12;
        if (ok) return NodeSet(std::move(xs), "random(" + std::to_string(n) + "," + std::to_string(seed) + ")");
    }
}

LogComplex eval_P(const NodeSet& nodes, std::complex<double> z) {
    double logmag = 0.0;
    double phase = 0.0;
    for (double x : nodes.xs()) {
        const std::complex<double> d = z - x;
        if (d == 0.0) return {};
        logmag += std::log(std::abs(d));
        phase += std::arg(d);
    }
    return {logmag, wrap_phase(phase)};
}

double log_abs_P(const NodeSet& nodes, double x) {
    double logmag = 0.0;
    for (double xi : nodes.xs()) {
        const double d = x - xi;
        if (d == 0.0) return -std::numeric_limits<double>::infinity();
        logmag += std::log(std::abs(d));
    }
    return logmag;
}

SignedLog eval_Pprime_at_node(const NodeSet& nodes, std::size_t k) {
    const std::size_t n = nodes.size();
    if (k >= n) throw InvalidArgument("eval_Pprime_at_node: index out of range");
    double logmag = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (i != k) logmag += std::log(std::abs(nodes[k] - nodes[i]));
    }
    // one negative factor for every node to the right of x_k
    const int sign = ((n - 1 - k) % 2 == 0) ? 1 : -1;
    return {sign, logmag};
}

std::complex<double> log_derivative(const NodeSet& nodes, std::complex<double> z) {
    std::complex<double> acc{0.0, 0.0};
    for (double x : nodes.xs()) acc += 1.0 / (z - x);
    return acc;
}

double nearest_node_distance(const NodeSet& nodes, std::complex<double> z) {
    const auto xs = nodes.xs();
    // the nearest node in |.| is adjacent to Re z in sorted order
    const auto it = std::lower_bound(xs.begin(), xs.end(), z.real());
    double best = std::numeric_limits<double>::infinity();
    if (it != xs.end()) best = std::abs(z - *it);
    if (it != xs.begin()) best = std::min(best, std::abs(z - *std::prev(it)));
    return best;
}

std::size_t bracketing_index(const NodeSet& nodes, double x) {
    if (nodes.size() < 2) throw InvalidArgument("bracketing_index: need at least two nodes");
    if (x < nodes.front() || x > nodes.back()) throw InvalidArgument("point outside the node hull");
    const auto xs = nodes.xs();
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t k = static_cast<std::size_t>(it - xs.begin());
    k = (k == 0) ? 0 : k - 1;
    return std::min(k, nodes.size() - 2);
}

}  // namespace interplab
