#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "interplab/signed_log.hpp"

namespace interplab {

inline constexpr double kDefaultGapFloor = 1e-14;

/// Interpolation nodes x_0 < ... < x_{n-1} in [-1, 1]: the roots of the monic
/// node polynomial P(z) = prod_i (z - x_i). Immutable once constructed.
///
/// Indices are zero-based throughout the library.
class NodeSet {
public:
    /// Validates: n >= 1, strictly increasing, inside [-1, 1], and every
    /// consecutive gap larger than `gap_floor`. Throws InvalidArgument.
    explicit NodeSet(std::vector<double> xs, std::string label = {}, double gap_floor = kDefaultGapFloor);

    [[nodiscard]] std::size_t size() const { return xs_.size(); }
    [[nodiscard]] double operator[](std::size_t k) const { return xs_[k]; }
    [[nodiscard]] std::span<const double> xs() const { return xs_; }
    [[nodiscard]] const std::string& label() const { return label_; }
    [[nodiscard]] double min_gap() const;
    [[nodiscard]] double front() const { return xs_.front(); }
    [[nodiscard]] double back() const { return xs_.back(); }

    /// Mass of the empirical measure (atoms 1/n at each node) on (-inf, x].
    [[nodiscard]] double cumulative_mass(double x) const;

    friend bool operator==(const NodeSet&, const NodeSet&) = default;

private:
    std::vector<double> xs_;
    std::string label_;
};

/// x_k = cos((2n - 2k + 1) pi / (2n)), k = 1..n, i.e. the roots of 2^(1-n) T_n.
NodeSet chebyshev_nodes(std::size_t n);

/// -1 + 2k/(n-1); {0} for n == 1.
NodeSet equispaced_nodes(std::size_t n);

/// Jitters every node uniformly in [-magnitude, magnitude], re-sorts and clips
/// to [-1, 1]. Requires magnitude < min_gap/2; deterministic per seed.
NodeSet perturbed_nodes(const NodeSet& base, double magnitude, std::uint64_t seed);

/// n nodes drawn uniformly from [-1, 1] (sorted). Rejects draws that violate
/// the gap floor by redrawing.
NodeSet random_nodes(std::size_t n, std::uint64_t seed);

/// P(z) in the log domain; zero sentinel when z coincides with a node.
LogComplex eval_P(const NodeSet& nodes, std::complex<double> z);

/// log|P(x)| for real x (-inf at a node).
double log_abs_P(const NodeSet& nodes, double x);

/// P'(x_k) = prod_{i != k} (x_k - x_i), in the log domain.
SignedLog eval_Pprime_at_node(const NodeSet& nodes, std::size_t k);

/// sum_i 1 / (z - x_i) = P'(z)/P(z).
std::complex<double> log_derivative(const NodeSet& nodes, std::complex<double> z);

/// delta(z) = min_i |z - x_i|.
double nearest_node_distance(const NodeSet& nodes, std::complex<double> z);

/// Index k with x_k <= x <= x_{k+1}; requires x in [x_0, x_{n-1}] and n >= 2.
std::size_t bracketing_index(const NodeSet& nodes, double x);

}  // namespace interplab
