#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "interplab/interval.hpp"
#include "interplab/nodes.hpp"

namespace interplab {

inline constexpr double kDefaultAmplitudeExponent = 0.1;

/// U_mu(z) = (1/n) sum_i log(1/|z - x_i|); +inf at a node.
double log_potential(const NodeSet& nodes, std::complex<double> z);

/// alpha = (1/n) log(sum_k 1/|P'(x_k)|), via log-sum-exp.
double alpha_hat(const NodeSet& nodes);

/// eta / (pi (x^2 + eta^2)); eta > 0.
double poisson_kernel(double eta, double x);

/// Poisson-smoothed node density (1/n) sum_i P_eta(x - x_i), which equals
/// -(1/pi) d/d(eta) U_mu(x + i eta).
double density_estimate(const NodeSet& nodes, double x, double eta);

/// 1 / (pi sqrt(1 - x^2)) for |x| < 1.
double arcsine_density(double x);

/// Default smoothing ordinate 5 log(n) / n (for n == 1 the ordinate is 1).
double default_eta(std::size_t n);

struct DensityProfile {
    std::vector<double> xs;
    std::vector<double> rho;
    double eta = 0.0;
    double alpha_hat = 0.0;

    /// Piecewise-linear value at x inside the grid.
    [[nodiscard]] double at(double x) const;
};

/// density_estimate on an increasing grid.
DensityProfile density_profile(const NodeSet& nodes, std::vector<double> xs, double eta);

struct NodeCount {
    std::size_t count = 0;
    double mass = 0.0;  // count / n
};

/// Number of nodes in the closed interval J.
NodeCount node_count_interval(const NodeSet& nodes, Interval J);

/// |mu(J) - integral_J rho|, the integral taken over the piecewise-linear
/// interpolant of the profile (trapezoid rule on the profile grid). J must
/// lie inside the profile grid.
double compare_to_density(const NodeSet& nodes, const DensityProfile& profile, Interval J);

/// log A(x) with A(x) = sup_{x' in I} |P(x')| exp(-n^beta |x - x'|), sampled on
/// a uniform grid.
struct AmplitudeProfile {
    Interval interval;
    double beta = kDefaultAmplitudeExponent;
    std::size_t n = 0;
    double step = 0.0;
    std::vector<double> xs;
    std::vector<double> log_abs_p;  // log|P| on the grid
    std::vector<double> log_a;      // log A on the grid
    std::vector<std::size_t> source;  // grid index attaining the sup

    /// n^beta, the slope of the exponential cone.
    [[nodiscard]] double slope() const;
    [[nodiscard]] std::size_t nearest_index(double x) const;
    /// Piecewise-linear log A at x inside the interval.
    [[nodiscard]] double log_a_at(double x) const;
};

/// Two running-max sweeps (left-to-right and right-to-left) of log|P| against
/// the cone -n^beta |x - x'|; exact on the grid and O(grid). Requires
/// grid_step <= n^(-beta)/4. The actual step is shrunk so the grid lands on
/// both endpoints.
AmplitudeProfile amplitude_profile(const NodeSet& nodes, Interval interval, double grid_step,
                                   double beta = kDefaultAmplitudeExponent);

/// Grid point x' attaining the sup defining A(x).
double extremizer(const AmplitudeProfile& profile, double x);

struct SandwichCheck {
    bool pass = false;
    std::size_t samples = 0;
    double worst_margin = 0.0;  // max over samples of log(delta e^{-n alpha}) - log|P|
    double worst_x = 0.0;
};

/// delta(x) e^{-n alpha} <= |P(x)| at `samples` uniform points of an interval
/// inside the node hull, with 1e-9 slack in the log domain.
SandwichCheck deltax_sandwich_check(const NodeSet& nodes, Interval interval, std::size_t samples);

struct DerivativeBoundCheck {
    bool pass = false;
    double ratio = 0.0;  // |P'(x)| / (pi n A(x) rho(x))
    double log_abs_pprime = 0.0;
    double log_a = 0.0;
    double rho = 0.0;
};

/// |P'(x)| <= (1 + slack) pi n A(x) rho(x), with A and rho read from the
/// profiles and P' = P * sum_i 1/(x - x_i).
DerivativeBoundCheck pderiv_bound_check(const NodeSet& nodes, const AmplitudeProfile& amplitude,
                                        const DensityProfile& density, double x, double slack);

struct GoodPoint {
    double x = 0.0;
    double score = 0.0;  // (1/pi) integral over |y - x| >= n^-beta of A(x)/(A(y)|x - y|)
};

/// Among grid points of `inner` where |P| = A (self-extremizing), the one
/// maximizing the macroscopic score; the integral is a grid sum.
GoodPoint good_point_search(const AmplitudeProfile& profile, Interval inner);

}  // namespace interplab
