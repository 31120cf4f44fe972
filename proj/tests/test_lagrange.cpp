#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "interplab/error.hpp"
#include "interplab/lagrange.hpp"
#include "interplab/nodes.hpp"
#include "interplab/rng.hpp"

using namespace interplab;

namespace {

// l_k(x) as the textbook product, for moderate n
double direct_basis(const NodeSet& nodes, std::size_t k, double x) {
    double v = 1.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        if (j != k) v *= (x - nodes[j]) / (nodes[k] - nodes[j]);
    }
    return v;
}

double direct_lebesgue(const NodeSet& nodes, double x) {
    double s = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) s += std::abs(direct_basis(nodes, k, x));
    return s;
}

// composite Simpson on each node-to-node panel of [a, b]
double dense_integral(const NodeSet& nodes, double a, double b, int per_panel) {
    std::vector<double> cuts{a};
    for (double x : nodes.xs()) {
        if (x > a && x < b) cuts.push_back(x);
    }
    cuts.push_back(b);
    double total = 0.0;
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
        const double h = (cuts[p + 1] - cuts[p]) / per_panel;
        double s = direct_lebesgue(nodes, cuts[p]) + direct_lebesgue(nodes, cuts[p + 1]);
        for (int i = 1; i < per_panel; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * direct_lebesgue(nodes, cuts[p] + i * h);
        total += s * h / 3.0;
    }
    return total;
}

}  // namespace

TEST_CASE("basis on two nodes") {
    const NodeSet s({-0.5, 0.5});
    CHECK(basis_eval(s, 0, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(basis_eval(s, 1, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(basis_eval(s, 0, 1.0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(lebesgue_function(s, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(lebesgue_function(s, 1.0) == doctest::Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(basis_eval(s, 2, 0.0), InvalidArgument);
}

TEST_CASE("kronecker property at the nodes") {
    const NodeSet c = chebyshev_nodes(17);
    const LagrangeBasis basis(c);
    for (std::size_t k = 0; k < c.size(); ++k) {
        for (std::size_t j = 0; j < c.size(); ++j) CHECK(basis.basis(k, c[j]) == (j == k ? 1.0 : 0.0));
        CHECK(basis.lebesgue(c[k]) == 1.0);
    }
}

TEST_CASE("barycentric basis matches the direct product") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const NodeSet r = random_nodes(12, seed);
        const LagrangeBasis basis(r);
        Rng rng(seed + 100);
        for (int t = 0; t < 50; ++t) {
            // inside and outside the node hull
            const double x = t < 2 ? (t == 0 ? -1.0 : 1.0) : rng.uniform(-1.0, 1.0);
            for (std::size_t k = 0; k < r.size(); ++k) {
                const double d = direct_basis(r, k, x);
                CHECK(std::abs(basis.basis(k, x) - d) <= 1e-10 * std::max(1.0, std::abs(d)));
            }
        }
    }
}

TEST_CASE("interpolation reproduces polynomials") {
    const NodeSet c = chebyshev_nodes(6);
    std::vector<double> fifth;
    for (double x : c.xs()) fifth.push_back(std::pow(x, 5));
    CHECK(interpolate(c, fifth, 0.3) == doctest::Approx(std::pow(0.3, 5)).epsilon(1e-12));

    for (std::size_t n : {2U, 5U, 12U, 20U, 30U}) {
        const NodeSet nodes = chebyshev_nodes(n);
        const LagrangeBasis basis(nodes);
        for (std::size_t m = 0; m < n; ++m) {
            std::vector<double> v;
            for (double x : nodes.xs()) v.push_back(std::pow(x, static_cast<double>(m)));
            for (double x : {-0.97, -0.41, 0.0, 0.123, 0.88}) {
                const double exact = std::pow(x, static_cast<double>(m));
                CHECK(std::abs(basis.interpolate(v, x) - exact) <= 1e-10 * std::max(1.0, std::abs(exact)));
            }
        }
        // partition of unity and degree-one reproduction
        const std::vector<double> ones(n, 1.0);
        const std::vector<double> ident(nodes.xs().begin(), nodes.xs().end());
        for (double x : {-1.0, -0.3, 0.77, 1.0}) {
            CHECK(basis.interpolate(ones, x) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(basis.interpolate(ident, x) == doctest::Approx(x).epsilon(1e-12).scale(1.0));
        }
    }
    CHECK_THROWS_AS(interpolate(c, std::vector<double>(3, 0.0), 0.0), InvalidArgument);
}

TEST_CASE("large n stays finite") {
    const NodeSet c = chebyshev_nodes(4000);
    const LagrangeBasis basis(c);
    const double v = basis.lebesgue(0.123456);
    CHECK(std::isfinite(v));
    CHECK(v >= 1.0);
    CHECK(v <= (2.0 / std::numbers::pi) * std::log(4000.0) + 1.0);
}

TEST_CASE("lebesgue sup") {
    const NodeSet s({-0.5, 0.5});
    const LebesgueReport r = lebesgue_sup(LagrangeBasis(s), {-1.0, 1.0});
    CHECK(r.sup_value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(std::abs(r.argmax) - 1.0) < 1e-12);

    const LebesgueReport one = lebesgue_report(LagrangeBasis(chebyshev_nodes(1)), {-1.0, 1.0});
    CHECK(one.sup_value == doctest::Approx(1.0));
    CHECK(one.integral_value == doctest::Approx(2.0));

    const LebesgueReport big = lebesgue_sup(LagrangeBasis(chebyshev_nodes(500)), {-1.0, 1.0});
    CHECK(big.sup_value >= (2.0 / std::numbers::pi) * std::log(500.0) + 0.52 - 0.1);

    // dense-grid oracle: the refined sup is never below the samples and at most
    // a hair above them
    const NodeSet r12 = random_nodes(12, 3);
    const LebesgueReport rr = lebesgue_sup(LagrangeBasis(r12), {-0.6, 0.7});
    double dense = 0.0;
    for (int i = 0; i <= 200000; ++i) dense = std::max(dense, direct_lebesgue(r12, -0.6 + 1.3 * i / 200000.0));
    CHECK(rr.sup_value >= dense * (1.0 - 1e-12));
    CHECK(rr.sup_value <= dense * (1.0 + 1e-6));
    CHECK(rr.argmax >= -0.6);
    CHECK(rr.argmax <= 0.7);
    CHECK_THROWS_AS(lebesgue_sup(LagrangeBasis(r12), {0.5, 0.5}), InvalidArgument);
    CHECK_THROWS_AS(lebesgue_sup(LagrangeBasis(r12), {-2.0, 0.5}), InvalidArgument);
}

TEST_CASE("lebesgue integral") {
    const NodeSet s({-0.5, 0.5});
    CHECK(lebesgue_integral(LagrangeBasis(s), {-1.0, 1.0}).integral_value == doctest::Approx(2.5).epsilon(1e-13));

    const NodeSet c = chebyshev_nodes(9);
    const double got = lebesgue_integral(LagrangeBasis(c), {-1.0, 1.0}).integral_value;
    CHECK(got == doctest::Approx(dense_integral(c, -1.0, 1.0, 2000)).epsilon(1e-10));

    const NodeSet r = random_nodes(10, 5);
    const double sub = lebesgue_integral(LagrangeBasis(r), {-0.3, 0.8}).integral_value;
    CHECK(sub == doctest::Approx(dense_integral(r, -0.3, 0.8, 2000)).epsilon(1e-9));
    CHECK(sub >= 1.1);

    const double n = 800.0;
    const double c800 = lebesgue_integral(LagrangeBasis(chebyshev_nodes(800)), {-1.0, 1.0}).integral_value;
    CHECK(std::abs(c800 - 8.0 / (std::numbers::pi * std::numbers::pi) * std::log(n) - 1.417018) <= 0.1);
}

TEST_CASE("consecutive basis sum and the stosh bound") {
    const NodeSet s({-0.5, 0.5});
    const ConsecCheck two = consec_lower_check(LagrangeBasis(s), 0, 101);
    CHECK(two.pass);
    CHECK(two.min_value == doctest::Approx(1.0).epsilon(1e-14));

    const LagrangeBasis c20(chebyshev_nodes(20));
    for (std::size_t k = 0; k + 1 < 20; ++k) CHECK(consec_lower_check(c20, k, 200).pass);
    const LagrangeBasis r15(random_nodes(15, 9));
    for (std::size_t k = 0; k + 1 < 15; ++k) CHECK(consec_lower_check(r15, k, 200).pass);
    CHECK_THROWS_AS(consec_lower_check(c20, 19, 10), InvalidArgument);

    const StoshCheck at_node = stosh_check(s, 0.5, 0.0);
    CHECK(at_node.pass);
    const StoshCheck eq = stosh_check(s, 0.0, 0.0);
    CHECK(eq.pass);
    CHECK(eq.ratio == doctest::Approx(1.0).epsilon(1e-12));

    const NodeSet c50 = chebyshev_nodes(50);
    Rng rng(2024);
    int failures = 0;
    for (int i = 0; i < 1000; ++i) {
        const double x = rng.uniform(c50.front(), c50.back());
        const double y = rng.uniform(-1.0, 1.0);
        if (!stosh_check(c50, x, y).pass) ++failures;
    }
    CHECK(failures == 0);
}

TEST_CASE("node aligned breakpoints") {
    const NodeSet s({-0.5, 0.0, 0.5});
    const std::vector<double> b = node_aligned_breakpoints(s, {-0.5, 0.7});
    REQUIRE(b.size() == 4);
    CHECK(b[0] == -0.5);
    CHECK(b[1] == 0.0);
    CHECK(b[2] == 0.5);
    CHECK(b[3] == 0.7);
}
