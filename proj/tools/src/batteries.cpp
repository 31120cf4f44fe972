#include "interplab_tools/batteries.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "interplab/error.hpp"
#include "interplab/lagrange.hpp"
#include "interplab/parallel.hpp"
#include "interplab/potential.hpp"
#include "interplab/quadrature.hpp"
#include "interplab/rng.hpp"

namespace interplab::tools {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBatterySlack = 1e-6;
}  // namespace

std::vector<NodeSet> sup_battery_full(std::size_t n, std::uint64_t seed) {
    const NodeSet cheb = chebyshev_nodes(n);
    std::vector<NodeSet> out{cheb};
    for (std::uint64_t i = 0; i < 10; ++i) out.push_back(perturbed_nodes(cheb, 0.45 * cheb.min_gap(), seed + i));
    for (std::uint64_t i = 0; i < 10; ++i) out.push_back(random_nodes(n, seed + 100 + i));
    return out;
}

std::vector<NodeSet> sup_battery_subinterval(std::size_t n, std::uint64_t seed) {
    const NodeSet cheb = chebyshev_nodes(n);
    std::vector<NodeSet> out;
    for (std::uint64_t i = 0; i < 3; ++i) out.push_back(perturbed_nodes(cheb, 0.45 * cheb.min_gap(), seed + 200 + i));
    for (std::uint64_t i = 0; i < 2; ++i) out.push_back(random_nodes(n, seed + 300 + i));
    return out;
}

TrigRecord trig_record(const TrigPoly& p, std::uint64_t seed) {
    const ToyQuantities q = toy_quantities(p);
    TrigRecord r;
    r.seed = seed;
    r.degree = p.degree();
    r.sup = q.sup_value;
    r.integral = q.integral_value;
    r.l1 = q.l1;
    r.recip = q.recip_sum;
    r.leading = p.leading_magnitude();
    r.pass = r.sup >= 2.0 - kBatterySlack && r.integral >= 8.0 - kBatterySlack && r.l1 >= 4.0 * r.leading - kBatterySlack &&
             r.recip >= 2.0 / r.leading - kBatterySlack;
    return r;
}

std::vector<TrigRecord> trig_battery(std::size_t trials, std::size_t max_degree, std::uint64_t seed) {
    if (max_degree == 0) throw InvalidArgument("trig_battery: max_degree must be >= 1");
    return parallel_map(trials, [&](std::size_t i) {
        const std::uint64_t s = seed + i;
        return trig_record(random_real_rooted(1 + i % max_degree, s), s);
    });
}

std::vector<TrigRecord> sinusoid_battery(std::size_t max_degree, std::uint64_t seed) {
    Rng rng(seed ^ 0x5eed5eedULL);
    std::vector<TrigRecord> out;
    for (std::size_t n = 1; n <= max_degree; ++n) {
        const double amplitude = rng.uniform(0.5, 2.0);
        const double x0 = rng.uniform(0.0, kTwoPi);
        out.push_back(trig_record(sinusoid(amplitude, n, x0), seed));
    }
    return out;
}

std::vector<DsMember> ds_battery(std::size_t trials, std::uint64_t seed) {
    Rng rng(seed ^ 0xd5d5d5d5ULL);
    std::vector<DsMember> out;
    for (std::size_t i = 0; i < trials; ++i) {
        const std::size_t degree = 1 + i % 10;
        if (i % 10 == 9) {
            const double amplitude = rng.uniform(0.5, 2.0);
            out.push_back({sinusoid(amplitude, degree, rng.uniform(0.0, kTwoPi)), true});
        } else {
            out.push_back({random_real_rooted(degree, seed + 1000 + i), false});
        }
    }
    return out;
}

double local_argmax_abs_P(const NodeSet& nodes, double x) {
    if (nodes.size() < 2) throw InvalidArgument("local_argmax_abs_P: need two nodes");
    const std::size_t k = bracketing_index(nodes, x);
    return golden_section_max([&](double t) { return log_abs_P(nodes, t); }, nodes[k], nodes[k + 1], 1e-14).x;
}

QProbe rescaled_q_probe(std::size_t n, double c1, double c2) {
    const NodeSet nodes = chebyshev_nodes(n);
    QProbe out;
    out.n = n;
    out.xstar = local_argmax_abs_P(nodes, 0.0);
    out.rho = density_estimate(nodes, out.xstar, default_eta(n));
    const Rect rect{Interval{-20.0, 20.0}, 2.0};
    const HoloSampler q = rescale_Q(nodes, out.xstar, out.rho, rect);
    LocalOptions opt;
    opt.c1 = c1;
    opt.c2 = c2;
    out.report = local_bernstein_report(q, rect, 0.0, opt);
    out.lambda = out.report.lambda;
    out.r1 = out.report.check("local_bernstein").ratio;
    for (int j = -200; j <= 200; ++j) {
        const double x = j / 200.0;
        out.r1_sup = std::max(out.r1_sup, std::abs(q.derivative({x, 0.0})) / kPi);
    }
    return out;
}

std::vector<ResidueCase> residue_battery() {
    using C = std::complex<double>;
    const Box box{{-1.0, -1.0}, {1.0, 1.0}};
    const std::vector<std::pair<std::string, RationalFn>> fs{
        {"1/z", RationalFn({0.0}, {1.0})},
        {"1/z+2/(z-0.5)", RationalFn({0.0, 0.5}, {1.0, 2.0})},
        {"1/z-1/(z-0.5)+i/(z+0.5-0.5i)", RationalFn({0.0, 0.5, C(-0.5, 0.5)}, {1.0, -1.0, C(0.0, 1.0)})},
    };
    const std::vector<std::pair<std::string, ComplexFn>> ws{
        {"1", [](C) { return C(1.0, 0.0); }},
        {"z^2", [](C z) { return z * z; }},
        {"conj(z)", [](C z) { return std::conj(z); }},
        {"|z|^2", [](C z) { return C(std::norm(z), 0.0); }},
        {"conj(z)^2", [](C z) { return std::conj(z) * std::conj(z); }},
    };
    std::vector<ResidueCase> out;
    for (const auto& [fname, f] : fs) {
        for (const auto& [wname, w] : ws) out.push_back({"f=" + fname + ", w=" + wname, f, w, box});
    }
    return out;
}

std::vector<HarmonicParams> harmonic_sweep() {
    std::vector<HarmonicParams> out;
    for (double y0 : {0.5, 1.0, 2.0}) {
        for (double t : {2.0, 5.0, 10.0}) {
            for (double xr : {0.0, 0.5, -0.8}) {
                for (double er : {0.1, 0.5, 0.9}) out.push_back({t * y0, y0, xr * t * y0, er * y0});
            }
        }
    }
    return out;
}

double barycentric_direct_gap(std::uint64_t seed) {
    Rng rng(seed ^ 0xba4ce47ULL);
    double worst = 0.0;
    for (std::size_t n = 2; n <= 20; ++n) {
        for (const NodeSet& nodes : {chebyshev_nodes(n), random_nodes(n, seed + n)}) {
            const LagrangeBasis basis(nodes);
            for (int s = 0; s < 50; ++s) {
                const double x = rng.uniform(-1.0, 1.0);
                for (std::size_t k = 0; k < n; ++k) {
                    double direct = 1.0;
                    for (std::size_t i = 0; i < n; ++i) {
                        if (i != k) direct *= (x - nodes[i]) / (nodes[k] - nodes[i]);
                    }
                    worst = std::max(worst, std::abs(basis.basis(k, x) - direct) / std::max(1.0, std::abs(direct)));
                }
            }
        }
    }
    return worst;
}

double trig_round_trip_error(std::uint64_t seed) {
    Rng rng(seed ^ 0x7419ULL);
    double worst = 0.0;
    for (std::size_t degree = 1; degree <= 10; ++degree) {
        const std::size_t count = 2 * degree;
        const double spacing = kPi / static_cast<double>(degree);
        std::vector<double> roots(count);
        const double phase = rng.uniform(0.0, spacing);
        for (std::size_t k = 0; k < count; ++k) roots[k] = phase + spacing * (static_cast<double>(k) + rng.uniform(-0.3, 0.3));
        for (double& r : roots) r = std::fmod(r + kTwoPi, kTwoPi);
        std::sort(roots.begin(), roots.end());
        const TrigRoots found = trig_roots(trig_from_roots(roots), true);
        for (std::size_t k = 0; k < count; ++k) worst = std::max(worst, std::abs(found.roots[k] - roots[k]));
    }
    return worst;
}

double density_derivative_gap() {
    const NodeSet nodes = chebyshev_nodes(100);
    const double eta = default_eta(100);
    const double h = 1e-6;
    double worst = 0.0;
    for (double x : {-0.7, -0.3, 0.0, 0.2, 0.55, 0.9}) {
        const double fd = -(log_potential(nodes, {x, eta + h}) - log_potential(nodes, {x, eta - h})) / (2.0 * h) / kPi;
        worst = std::max(worst, std::abs(fd - density_estimate(nodes, x, eta)));
    }
    return worst;
}

}  // namespace interplab::tools
