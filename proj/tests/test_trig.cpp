#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "interplab/error.hpp"
#include "interplab/rng.hpp"
#include "interplab/trig.hpp"

using namespace interplab;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// prod_k sin((x - r_k)/2) straight from the roots
double root_product(const std::vector<double>& roots, double x) {
    double v = 1.0;
    for (double r : roots) v *= std::sin((x - r) / 2.0);
    return v;
}

// P'(r_k) = (1/2) prod_{j != k} sin((r_k - r_j)/2)
double root_product_derivative(const std::vector<double>& roots, std::size_t k) {
    double v = 0.5;
    for (std::size_t j = 0; j < roots.size(); ++j) {
        if (j != k) v *= std::sin((roots[k] - roots[j]) / 2.0);
    }
    return v;
}

std::vector<double> jittered_cos3_roots(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> roots;
    for (int k = 0; k < 6; ++k) roots.push_back(kPi / 6.0 + k * kPi / 3.0 + rng.uniform(-0.1, 0.1));
    return roots;
}

}  // namespace

TEST_CASE("evaluation") {
    const TrigPoly c3({0.0, 0.0, 0.0, 1.0}, {0.0, 0.0, 0.0});
    CHECK(c3(0.0) == doctest::Approx(1.0));
    CHECK(trig_deriv(c3)(0.0) == doctest::Approx(0.0).scale(1.0));
    CHECK(std::abs(c3(std::complex<double>{0.0, 1.5}) - std::cosh(4.5)) <= 1e-12 * std::cosh(4.5));
    const TrigPoly p({0.0, 2.0, 0.0}, {0.0, 1.0});
    CHECK(p(kPi / 2.0) == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(p.degree() == 2);
    CHECK(p.leading_magnitude() == doctest::Approx(1.0));
    CHECK(p.coefficient_l1() == doctest::Approx(3.0));
    CHECK_THROWS_AS(TrigPoly({1.0}, {1.0}), InvalidArgument);

    // derivative against a central difference
    const TrigPoly q = random_real_rooted(4, 17);
    const TrigPoly dq = trig_deriv(q);
    for (double x : {0.1, 1.7, 4.4}) {
        const double h = 1e-5;
        CHECK(dq(x) == doctest::Approx((q(x + h) - q(x - h)) / (2.0 * h)).epsilon(1e-7).scale(q.coefficient_l1()));
    }
}

TEST_CASE("sinusoid") {
    const TrigPoly s = sinusoid(1.0, 3, 0.0);
    CHECK(s.a()[3] == doctest::Approx(1.0));
    CHECK(s.b()[2] == doctest::Approx(0.0).scale(1.0));
    const TrigPoly t = sinusoid(2.0, 1, kPi / 2.0);
    CHECK(t.a()[1] == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
    CHECK(t.b()[0] == doctest::Approx(2.0));
    CHECK(sinusoid(0.37, 7, 1.1).leading_magnitude() == doctest::Approx(0.37));
}

TEST_CASE("trig_from_roots") {
    const TrigPoly p = trig_from_roots(std::vector<double>{0.0, kPi});
    for (double x : {0.3, 1.0, 2.5, 5.0}) CHECK(p(x) == doctest::Approx(-0.5 * std::sin(x)).scale(1.0).epsilon(1e-15));

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Rng rng(seed);
        const std::size_t n = 1 + seed % 6;
        std::vector<double> roots;
        for (std::size_t k = 0; k < 2 * n; ++k) roots.push_back(kTwoPi * (static_cast<double>(k) + rng.uniform(0.1, 0.9)) / (2.0 * static_cast<double>(n)));
        const TrigPoly q = trig_from_roots(roots);
        CHECK(q.degree() == n);
        CHECK(std::abs(q.leading_magnitude() / (2.0 * std::pow(4.0, -static_cast<double>(n))) - 1.0) <= 1e-12);
        for (double x : {0.2, 2.9, 6.0}) CHECK(q(x) == doctest::Approx(root_product(roots, x)).scale(1e-3).epsilon(1e-12));
        const TrigRoots back = trig_roots(q, true);
        REQUIRE(back.roots.size() == roots.size());
        for (std::size_t k = 0; k < roots.size(); ++k) CHECK(std::abs(back.roots[k] - roots[k]) <= 1e-9);
    }
    CHECK_THROWS_AS(trig_from_roots(std::vector<double>{1.0}), InvalidArgument);
    CHECK_THROWS_AS(trig_from_roots(std::vector<double>{1.0, 1.0}), InvalidArgument);
}

TEST_CASE("trig_roots") {
    const TrigRoots r = trig_roots(sinusoid(1.0, 3, 0.0), true);
    REQUIRE(r.roots.size() == 6);
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(r.roots[k] == doctest::Approx(kPi / 6.0 + static_cast<double>(k) * kPi / 3.0).epsilon(1e-11));
        CHECK(std::abs(r.derivatives[k]) == doctest::Approx(3.0).epsilon(1e-10));
        if (k > 0) CHECK(r.derivatives[k] * r.derivatives[k - 1] < 0.0);
    }
    const TrigRoots h = trig_roots(trig_from_roots(std::vector<double>{0.0, kPi}), true);
    REQUIRE(h.roots.size() == 2);
    CHECK(std::abs(h.roots[0]) <= 1e-12);
    CHECK(h.roots[1] == doctest::Approx(kPi).epsilon(1e-12));
    CHECK(std::abs(h.derivatives[0]) == doctest::Approx(0.5));

    const TrigPoly double_root({1.0, 1.0}, {0.0});
    CHECK_THROWS_AS(trig_roots(double_root, true), NumericalError);
    CHECK_THROWS_AS(trig_roots(TrigPoly({2.0, 1.0}, {0.0}), true), NumericalError);
    CHECK(trig_roots(TrigPoly({2.0, 1.0}, {0.0}), false).roots.empty());
}

TEST_CASE("toy model quantities") {
    for (std::size_t n : {1U, 3U, 8U}) {
        const ToyQuantities q = toy_quantities(sinusoid(1.3, n, 0.4));
        CHECK(q.sup_value == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(q.integral_value == doctest::Approx(8.0).epsilon(1e-9));
    }
    const ToyQuantities h = toy_quantities(trig_from_roots(std::vector<double>{0.0, kPi}));
    CHECK(h.sup_value == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(h.integral_value == doctest::Approx(8.0).epsilon(1e-9));
    CHECK(h.recip_sum == doctest::Approx(4.0).epsilon(1e-12));

    // jittered roots: dense-grid oracle from the product form
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const std::vector<double> roots = jittered_cos3_roots(seed);
        const ToyQuantities q = toy_quantities(trig_from_roots(roots));
        double recip = 0.0;
        for (std::size_t k = 0; k < roots.size(); ++k) recip += 1.0 / std::abs(root_product_derivative(roots, k));
        const int N = 200000;
        double sup = 0.0;
        double integral = 0.0;
        for (int i = 0; i < N; ++i) {
            const double v = recip * std::abs(root_product(roots, kTwoPi * i / N));
            sup = std::max(sup, v);
            integral += v;
        }
        integral *= kTwoPi / N;
        CHECK(q.recip_sum == doctest::Approx(recip).epsilon(1e-10));
        CHECK(q.sup_value == doctest::Approx(sup).epsilon(1e-8));
        CHECK(q.integral_value == doctest::Approx(integral).epsilon(1e-8));
        CHECK(q.sup_value > 2.0);
        CHECK(q.integral_value > 8.0);
    }
}

TEST_CASE("l1 norm and reciprocal derivative sum") {
    const TrigPoly c3 = sinusoid(1.0, 3, 0.0);
    CHECK(l1_norm(c3) == doctest::Approx(4.0).epsilon(1e-12));
    CHECK(recip_deriv_sum(c3) == doctest::Approx(2.0).epsilon(1e-12));
    const TrigPoly h = trig_from_roots(std::vector<double>{0.0, kPi});
    CHECK(l1_norm(h) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(recip_deriv_sum(h) == doctest::Approx(4.0).epsilon(1e-12));

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const TrigPoly p = random_real_rooted(5, seed);
        const double lead = p.leading_magnitude();
        // the periodic trapezoid rule is second order at the kinks of |P|, so
        // 4e5 points pin the integral to ~1e-10
        const int N = 400000;
        double dense = 0.0;
        for (int i = 0; i < N; ++i) dense += std::abs(p(kTwoPi * i / N));
        dense *= kTwoPi / N;
        const double l1 = l1_norm(p);
        CHECK(l1 == doctest::Approx(dense).epsilon(1e-8));
        CHECK(l1 >= 4.0 * lead - 1e-9);
        CHECK(recip_deriv_sum(p) >= 2.0 / lead - 1e-9);
    }
}

TEST_CASE("sup of |P|") {
    const auto [x, v] = trig_sup_abs(sinusoid(0.8, 5, 0.3), 64);
    CHECK(v == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(std::abs(std::cos(5.0 * (x - 0.3))) == doctest::Approx(1.0).epsilon(1e-14));
    const TrigPoly p = random_real_rooted(6, 3);
    double dense = 0.0;
    for (int i = 0; i < 100000; ++i) dense = std::max(dense, std::abs(p(kTwoPi * i / 100000.0)));
    const double sup = trig_sup_abs(p, 96).second;
    CHECK(sup >= dense);
    CHECK(sup <= dense * (1.0 + 1e-6));
}

TEST_CASE("fejer square wave") {
    CHECK(fejer_square_wave(0.7, 1, SquareWave::Sin) == 0.0);
    CHECK(fejer_square_wave(0.7, 1, SquareWave::Cos) == 0.0);
    CHECK(fejer_square_wave(0.0, 2, SquareWave::Cos) == doctest::Approx(2.0 / kPi).epsilon(1e-15));
    double worst = 0.0;
    for (std::size_t M : {2U, 3U, 8U, 17U, 64U}) {
        for (int i = 0; i < 10000; ++i) {
            const double x = kTwoPi * i / 10000.0;
            worst = std::max({worst, std::abs(fejer_square_wave(x, M, SquareWave::Sin)), std::abs(fejer_square_wave(x, M, SquareWave::Cos))});
        }
    }
    CHECK(worst <= 1.0 + 1e-12);
    // converges to the square wave away from the jumps
    CHECK(fejer_square_wave(kPi / 2.0, 4096, SquareWave::Sin) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("leading-term asymptotics") {
    const AsymptoticCheck s = leading_asymptotic_check(sinusoid(1.0, 4, 0.0), 5.0);
    CHECK(s.residual <= 1e-4);
    CHECK(s.pass);
    const TrigPoly p({0.0, 0.0, 0.5, 1.0}, {0.0, 0.0, 0.0});
    const AsymptoticCheck a = leading_asymptotic_check(p, 5.0);
    CHECK(a.residual <= 2.0 * 0.5 * std::exp(-5.0));
    CHECK(a.pass);
    const AsymptoticCheck b = leading_asymptotic_check(p, 6.0);
    CHECK(a.residual / b.residual == doctest::Approx(std::exp(1.0)).epsilon(1e-3));
}

TEST_CASE("random real-rooted polynomials") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const std::size_t n = 1 + seed % 10;
        const TrigPoly p = random_real_rooted(n, seed);
        CHECK(p.degree() == n);
        const TrigRoots r = trig_roots(p, true);
        CHECK(r.roots.size() == 2 * n);
        for (std::size_t k = 0; k + 1 < r.roots.size(); ++k) CHECK(r.roots[k + 1] - r.roots[k] >= 0.2 * kPi / static_cast<double>(n) - 1e-12);
    }
    // the largest accepted degree still round-trips its root count
    for (std::uint64_t seed = 0; seed < 5; ++seed) CHECK(trig_roots(random_real_rooted(kMaxRootExpansionDegree, seed), true).roots.size() == 48);
    CHECK_THROWS_AS(random_real_rooted(kMaxRootExpansionDegree + 1, 1), InvalidArgument);
    CHECK_THROWS_AS(random_real_rooted(0, 1), InvalidArgument);
}
