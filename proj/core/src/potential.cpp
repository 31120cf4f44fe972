#include "interplab/potential.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "interplab/error.hpp"

namespace interplab {

double log_potential(const NodeSet& nodes, std::complex<double> z) {
    const LogComplex p = eval_P(nodes, z);
    if (p.is_zero()) return std::numeric_limits<double>::infinity();
    return -p.logmag / static_cast<double>(nodes.size());
}

double alpha_hat(const NodeSet& nodes) {
    std::vector<double> terms(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) terms[k] = -eval_Pprime_at_node(nodes, k).logmag;
    return log_sum_exp(terms) / static_cast<double>(nodes.size());
}

double poisson_kernel(double eta, double x) {
    if (!(eta > 0.0)) throw InvalidArgument("poisson_kernel: eta must be positive");
    return eta / (std::numbers::pi * (x * x + eta * eta));
}

double density_estimate(const NodeSet& nodes, double x, double eta) {
    if (!(eta > 0.0)) throw InvalidArgument("density_estimate: eta must be positive");
    double acc = 0.0;
    for (double xi : nodes.xs()) {
        const double d = x - xi;
        acc += eta / (d * d + eta * eta);
    }
    return acc / (std::numbers::pi * static_cast<double>(nodes.size()));
}

double arcsine_density(double x) {
    if (!(std::abs(x) < 1.0)) throw InvalidArgument("arcsine_density: requires |x| < 1");
    return 1.0 / (std::numbers::pi * std::sqrt((1.0 - x) * (1.0 + x)));
}

double default_eta(std::size_t n) {
    if (n <= 1) return 1.0;
    const double nn = static_cast<double>(n);
    return 5.0 * std::log(nn) / nn;
}

namespace {

double linear_at(const std::vector<double>& xs, const std::vector<double>& ys, double x) {
    if (xs.empty()) throw InvalidArgument("empty profile");
    if (x < xs.front() || x > xs.back()) throw InvalidArgument("point outside the profile grid");
    if (xs.size() == 1) return ys.front();
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t j = static_cast<std::size_t>(it - xs.begin());
    j = std::clamp<std::size_t>(j, 1, xs.size() - 1);
    const double t = (x - xs[j - 1]) / (xs[j] - xs[j - 1]);
    return ys[j - 1] + t * (ys[j] - ys[j - 1]);
}

}  // namespace

double DensityProfile::at(double x) const { return linear_at(xs, rho, x); }

DensityProfile density_profile(const NodeSet& nodes, std::vector<double> xs, double eta) {
    if (!(eta > 0.0)) throw InvalidArgument("density_profile: eta must be positive");
    if (!std::is_sorted(xs.begin(), xs.end())) throw InvalidArgument("density_profile: grid must be increasing");
    DensityProfile out;
    out.rho.reserve(xs.size());
    for (double x : xs) out.rho.push_back(density_estimate(nodes, x, eta));
    out.xs = std::move(xs);
    out.eta = eta;
    out.alpha_hat = alpha_hat(nodes);
    return out;
}

NodeCount node_count_interval(const NodeSet& nodes, Interval J) {
    require_nondegenerate(J, "node_count_interval");
    const auto xs = nodes.xs();
    const auto lo = std::lower_bound(xs.begin(), xs.end(), J.lo);
    const auto hi = std::upper_bound(xs.begin(), xs.end(), J.hi);
    NodeCount out;
    out.count = static_cast<std::size_t>(hi - lo);
    out.mass = static_cast<double>(out.count) / static_cast<double>(nodes.size());
    return out;
}

double compare_to_density(const NodeSet& nodes, const DensityProfile& profile, Interval J) {
    require_nondegenerate(J, "compare_to_density");
    if (profile.xs.size() < 2 || J.lo < profile.xs.front() || J.hi > profile.xs.back())
        throw InvalidArgument("compare_to_density: J must lie inside the profile grid");
    // exact integral of the piecewise-linear interpolant over J
    std::vector<double> pts{J.lo};
    for (double x : profile.xs) {
        if (x > J.lo && x < J.hi) pts.push_back(x);
    }
    pts.push_back(J.hi);
    double integral = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i)
        integral += 0.5 * (pts[i] - pts[i - 1]) * (profile.at(pts[i - 1]) + profile.at(pts[i]));
    return std::abs(node_count_interval(nodes, J).mass - integral);
}

double AmplitudeProfile::slope() const { return std::pow(static_cast<double>(n), beta); }

std::size_t AmplitudeProfile::nearest_index(double x) const {
    if (!interval.contains(x)) throw InvalidArgument("amplitude profile: point outside the interval");
    if (xs.size() == 1) return 0;
    const double t = (x - interval.lo) / step;
    return std::min(xs.size() - 1, static_cast<std::size_t>(std::llround(t)));
}

double AmplitudeProfile::log_a_at(double x) const { return linear_at(xs, log_a, x); }

AmplitudeProfile amplitude_profile(const NodeSet& nodes, Interval interval, double grid_step, double beta) {
    if (!(interval.hi >= interval.lo)) throw InvalidArgument("amplitude_profile: bad interval");
    if (!(grid_step > 0.0)) throw InvalidArgument("amplitude_profile: grid_step must be positive");
    AmplitudeProfile prof;
    prof.interval = interval;
    prof.beta = beta;
    prof.n = nodes.size();
    const double slope = prof.slope();
    if (grid_step > 0.25 / slope) throw InvalidArgument("amplitude_profile: grid too coarse, need step <= n^-beta/4");

    const double len = interval.length();
    const std::size_t cells = len == 0.0 ? 0 : static_cast<std::size_t>(std::ceil(len / grid_step - 1e-12));
    prof.step = cells == 0 ? 0.0 : len / static_cast<double>(cells);
    const std::size_t m = cells + 1;
    prof.xs.resize(m);
    prof.log_abs_p.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        prof.xs[i] = (i + 1 == m && cells > 0) ? interval.hi : interval.lo + prof.step * static_cast<double>(i);
        prof.log_abs_p[i] = log_abs_P(nodes, prof.xs[i]);
    }

    // (max,+) convolution with the cone: forward then backward running maxima
    const double decrement = slope * prof.step;
    std::vector<double> fwd(m);
    std::vector<std::size_t> fwd_src(m);
    for (std::size_t i = 0; i < m; ++i) {
        fwd[i] = prof.log_abs_p[i];
        fwd_src[i] = i;
        if (i > 0) {
            const double carried = fwd[i - 1] - decrement;
            if (carried > fwd[i]) {
                fwd[i] = carried;
                fwd_src[i] = fwd_src[i - 1];
            }
        }
    }
    prof.log_a = fwd;
    prof.source = fwd_src;
    double bwd = -std::numeric_limits<double>::infinity();
    std::size_t bwd_src = m - 1;
    for (std::size_t r = m; r-- > 0;) {
        if (r + 1 < m && bwd - decrement > prof.log_abs_p[r]) {
            bwd -= decrement;
        } else {
            bwd = prof.log_abs_p[r];
            bwd_src = r;
        }
        if (bwd > prof.log_a[r]) {
            prof.log_a[r] = bwd;
            prof.source[r] = bwd_src;
        }
    }
    return prof;
}

double extremizer(const AmplitudeProfile& profile, double x) { return profile.xs[profile.source[profile.nearest_index(x)]]; }

SandwichCheck deltax_sandwich_check(const NodeSet& nodes, Interval interval, std::size_t samples) {
    if (samples == 0) throw InvalidArgument("deltax_sandwich_check: need samples");
    if (interval.lo < nodes.front() || interval.hi > nodes.back())
        throw InvalidArgument("deltax_sandwich_check: interval must lie in the node hull");
    const double n_alpha = static_cast<double>(nodes.size()) * alpha_hat(nodes);
    SandwichCheck out{true, samples, -std::numeric_limits<double>::infinity(), interval.lo};
    for (std::size_t j = 0; j < samples; ++j) {
        const double x = samples == 1 ? interval.lo
                                      : interval.lo + interval.length() * static_cast<double>(j) / static_cast<double>(samples - 1);
        const double delta = nearest_node_distance(nodes, x);
        const double lhs = delta == 0.0 ? -std::numeric_limits<double>::infinity() : std::log(delta) - n_alpha;
        const double rhs = log_abs_P(nodes, x);
        if (std::isinf(lhs)) continue;  // 0 <= |P| holds trivially
        const double margin = lhs - rhs;
        if (margin > out.worst_margin) {
            out.worst_margin = margin;
            out.worst_x = x;
        }
        if (margin > 1e-9) out.pass = false;
    }
    return out;
}

DerivativeBoundCheck pderiv_bound_check(const NodeSet& nodes, const AmplitudeProfile& amplitude,
                                        const DensityProfile& density, double x, double slack) {
    if (nearest_node_distance(nodes, x) == 0.0) throw InvalidArgument("pderiv_bound_check: x is a node");
    DerivativeBoundCheck out;
    const double log_p = log_abs_P(nodes, x);
    out.log_abs_pprime = log_p + std::log(std::abs(log_derivative(nodes, x).real()));
    out.log_a = amplitude.log_a_at(x);
    out.rho = density.at(x);
    const double denom = std::numbers::pi * static_cast<double>(nodes.size()) * out.rho;
    out.ratio = std::exp(out.log_abs_pprime - out.log_a) / denom;
    out.pass = out.ratio <= 1.0 + slack;
    return out;
}

GoodPoint good_point_search(const AmplitudeProfile& profile, Interval inner) {
    if (!inner.within(profile.interval)) throw InvalidArgument("good_point_search: inner interval outside profile");
    const double cutoff = 1.0 / profile.slope();
    GoodPoint best{0.0, -std::numeric_limits<double>::infinity()};
    const std::size_t m = profile.xs.size();
    for (std::size_t i = 0; i < m; ++i) {
        const double x = profile.xs[i];
        if (!inner.contains(x) || profile.source[i] != i) continue;
        double acc = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double y = profile.xs[j];
            const double d = std::abs(x - y);
            if (!inner.contains(y) || d < cutoff) continue;
            acc += std::exp(profile.log_a[i] - profile.log_a[j]) / d;
        }
        const double score = acc * profile.step / std::numbers::pi;
        if (score > best.score) best = {x, score};
    }
    if (std::isinf(best.score)) throw NumericalError("good_point_search: no self-extremizing grid point in the interval");
    return best;
}

}  // namespace interplab
