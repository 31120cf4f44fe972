#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "interplab/error.hpp"
#include "interplab/nodes.hpp"
#include "interplab/potential.hpp"
#include "interplab/quadrature.hpp"
#include "interplab/rng.hpp"

using namespace interplab;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> uniform_grid(double a, double b, std::size_t points) {
    std::vector<double> xs(points);
    for (std::size_t i = 0; i < points; ++i) xs[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1);
    return xs;
}

}  // namespace

TEST_CASE("log potential") {
    const NodeSet s({-0.5, 0.5});
    CHECK(log_potential(s, {0.0, 0.0}) == doctest::Approx(std::numbers::ln2).epsilon(1e-15));
    CHECK(std::isinf(log_potential(s, {0.5, 0.0})));
    CHECK(log_potential(s, {0.5, 0.0}) > 0.0);

    const NodeSet c = chebyshev_nodes(200);
    const double expect = std::numbers::ln2 - kPi * 0.05 * arcsine_density(0.2);
    CHECK(std::abs(log_potential(c, {0.2, 0.05}) - expect) <= 0.05);
}

TEST_CASE("alpha hat") {
    CHECK(alpha_hat(NodeSet({-0.5, 0.5})) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-15));
    CHECK(alpha_hat(chebyshev_nodes(1)) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(std::abs(alpha_hat(chebyshev_nodes(200)) - std::numbers::ln2) <= 0.05);
    // huge n: the sum of 1/|P'| is far outside the double range
    CHECK(std::isfinite(alpha_hat(chebyshev_nodes(5000))));
}

TEST_CASE("poisson kernel") {
    CHECK(poisson_kernel(1.0, 0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-15));
    CHECK(poisson_kernel(1.0, 1.0) == doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-15));
    CHECK_THROWS_AS(poisson_kernel(0.0, 1.0), InvalidArgument);

    // unit mass on [-1e6, 1e6], Gauss-Legendre on geometric panels
    const GaussLegendreRule& rule = gauss_legendre(16);
    double mass = 0.0;
    double a = 0.0;
    for (double b = 1e-3; a < 1e6; b *= 2.0) {
        const double hi = std::min(b, 1e6);
        mass += 2.0 * integrate_panel([](double x) { return poisson_kernel(1.0, x); }, a, hi, rule);
        a = hi;
    }
    CHECK(std::abs(mass - 1.0) <= 1e-5);
}

TEST_CASE("density estimate") {
    CHECK(density_estimate(NodeSet({0.0}), 0.0, 1.0) == doctest::Approx(1.0 / kPi).epsilon(1e-15));
    const NodeSet c = chebyshev_nodes(400);
    CHECK(std::abs(density_estimate(c, 0.0, 5.0 * std::log(400.0) / 400.0) - 1.0 / kPi) <= 0.02);
    CHECK(default_eta(400) == doctest::Approx(5.0 * std::log(400.0) / 400.0));
    CHECK(default_eta(1) == 1.0);

    // -(1/pi) d/d eta of the log potential, by a central difference
    const NodeSet c100 = chebyshev_nodes(100);
    const double h = 1e-6;
    for (double x : {-0.7, 0.0, 0.33}) {
        for (double eta : {0.05, 0.2}) {
            const double fd = -(log_potential(c100, {x, eta + h}) - log_potential(c100, {x, eta - h})) / (2.0 * h) / kPi;
            CHECK(std::abs(density_estimate(c100, x, eta) - fd) <= 1e-6);
        }
    }

    const DensityProfile prof = density_profile(c, uniform_grid(-0.9, 0.9, 181), 0.05);
    CHECK(prof.rho.size() == prof.xs.size());
    for (double r : prof.rho) CHECK(r >= 0.0);
    CHECK(prof.at(0.0) == doctest::Approx(density_estimate(c, 0.0, 0.05)).epsilon(1e-12));
    CHECK_THROWS_AS(density_profile(c, uniform_grid(-0.9, 0.9, 10), 0.0), InvalidArgument);
}

TEST_CASE("arcsine density") {
    CHECK(arcsine_density(0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-15));
    CHECK(arcsine_density(0.6) == doctest::Approx(1.0 / (kPi * 0.8)).epsilon(1e-15));
    CHECK(arcsine_density(-0.37) == arcsine_density(0.37));
    CHECK_THROWS_AS(arcsine_density(1.0), InvalidArgument);
}

TEST_CASE("node counting") {
    const NodeSet c = chebyshev_nodes(64);
    CHECK(node_count_interval(c, {-1.0, 1.0}).mass == 1.0);
    const NodeCount half = node_count_interval(c, {-std::sin(kPi / 4.0), std::sin(kPi / 4.0)});
    CHECK(std::abs(static_cast<double>(half.count) - 32.0) <= 1.0);
    CHECK(node_count_interval(c, {c[10] + 1e-9, c[11] - 1e-9}).count == 0);

    const DensityProfile prof = density_profile(c, uniform_grid(-0.95, 0.95, 801), default_eta(64));
    CHECK(compare_to_density(c, prof, {-0.5, 0.5}) <= 0.05);
}

TEST_CASE("amplitude profile") {
    const NodeSet c = chebyshev_nodes(50);
    const AmplitudeProfile amp = amplitude_profile(c, {-0.8, 0.8}, 1e-4);
    const double slope = std::pow(50.0, kDefaultAmplitudeExponent);
    CHECK(amp.slope() == doctest::Approx(slope));
    REQUIRE(amp.xs.size() == amp.log_a.size());
    CHECK(amp.xs.front() == -0.8);
    CHECK(amp.xs.back() == doctest::Approx(0.8).epsilon(1e-15));

    // A(0) is close to the constant 2^{1-n}
    const double ratio = std::exp(amp.log_a_at(0.0) - (1.0 - 50.0) * std::numbers::ln2);
    CHECK(ratio <= 1.1);
    CHECK(ratio >= 1.0 / 1.1);

    // domination, and log-Lipschitz against a brute-force O(N^2) sup on a coarser profile
    const AmplitudeProfile coarse = amplitude_profile(c, {-0.8, 0.8}, 2e-3);
    for (std::size_t i = 0; i < coarse.xs.size(); ++i) {
        CHECK(coarse.log_a[i] >= coarse.log_abs_p[i]);
        double brute = -std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < coarse.xs.size(); ++j)
            brute = std::max(brute, coarse.log_abs_p[j] - coarse.slope() * std::abs(coarse.xs[i] - coarse.xs[j]));
        CHECK(coarse.log_a[i] == doctest::Approx(brute).epsilon(1e-13));
    }
    for (std::size_t i = 0; i + 1 < coarse.xs.size(); i += 7) {
        for (std::size_t j = i + 1; j < coarse.xs.size(); j += 13)
            CHECK(std::abs(coarse.log_a[i] - coarse.log_a[j]) <= coarse.slope() * std::abs(coarse.xs[i] - coarse.xs[j]) + 1e-9);
    }
    CHECK_THROWS_AS(amplitude_profile(c, {-0.8, 0.8}, 0.5), InvalidArgument);
}

TEST_CASE("extremizer") {
    const NodeSet c = chebyshev_nodes(100);
    const AmplitudeProfile amp = amplitude_profile(c, {-0.9, 0.9}, 1e-4);
    const double bound = 10.0 * std::log(100.0) / std::pow(100.0, 0.1);
    for (double x : {-0.5, 0.0, 0.123, 0.7}) {
        const double xp = extremizer(amp, x);
        CHECK(std::abs(x - xp) <= bound);
        const std::size_t j = amp.nearest_index(xp);
        CHECK(amp.log_abs_p[j] >= std::log1p(-1e-6) + amp.log_a[j]);
    }
    // a strict local max of |P| that dominates its neighbourhood extremizes itself
    std::size_t top = 0;
    for (std::size_t i = 0; i < amp.xs.size(); ++i) {
        if (amp.log_abs_p[i] > amp.log_abs_p[top]) top = i;
    }
    CHECK(extremizer(amp, amp.xs[top]) == amp.xs[top]);
}

TEST_CASE("delta sandwich and the P' bound") {
    const NodeSet s({-0.5, 0.5});
    const SandwichCheck two = deltax_sandwich_check(s, {-0.5, 0.5}, 3);
    CHECK(two.pass);
    CHECK(two.worst_margin == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));

    CHECK(deltax_sandwich_check(chebyshev_nodes(300), {-0.9, 0.9}, 10000).pass);
    CHECK(deltax_sandwich_check(random_nodes(60, 4), {-0.5, 0.5}, 5000).pass);

    const NodeSet c = chebyshev_nodes(500);
    const AmplitudeProfile amp = amplitude_profile(c, {-0.9, 0.9}, 1e-3);
    const DensityProfile dens = density_profile(c, uniform_grid(-0.9, 0.9, 361), default_eta(500));
    const DerivativeBoundCheck b = pderiv_bound_check(c, amp, dens, 0.0, 0.2);
    CHECK(b.pass);

    // independent recomputation: P' = P sum 1/(x - x_i), summed in reverse
    const double x = 0.0123;
    const DerivativeBoundCheck bx = pderiv_bound_check(c, amp, dens, x, 0.2);
    double s_rev = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) s_rev += 1.0 / (x - c[i]);
    const double log_pp = log_abs_P(c, x) + std::log(std::abs(s_rev));
    const double oracle = std::exp(log_pp - amp.log_a_at(x)) / (kPi * 500.0 * dens.at(x));
    CHECK(std::abs(bx.ratio - oracle) <= 1e-12 * oracle + 1e-12);
}

TEST_CASE("good point search") {
    const NodeSet c = chebyshev_nodes(200);
    const AmplitudeProfile amp = amplitude_profile(c, {-0.9, 0.9}, 1e-4);
    const GoodPoint g = good_point_search(amp, {-0.5, 0.5});
    CHECK(g.x >= -0.5);
    CHECK(g.x <= 0.5);
    CHECK(g.score > 0.0);
    const std::size_t j = amp.nearest_index(g.x);
    CHECK(amp.log_abs_p[j] == doctest::Approx(amp.log_a[j]));
}
