#include <doctest.h>

#include <cmath>
#include <numbers>

#include "interplab/complexint.hpp"
#include "interplab/error.hpp"
#include "interplab/quadrature.hpp"

using namespace interplab;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
const Box kSquare{{-1.0, -1.0}, {1.0, 1.0}};

// integral of 1/z over [0, a] x [0, b] in polar coordinates: the integrand is
// e^{-i theta} dr dtheta, r running to the far edge
cplx corner_integral(double a, double b) {
    const GaussLegendreRule& rule = gauss_legendre(32);
    const double split = std::atan2(b, a);
    const auto through_right = [&](double t) { return std::exp(cplx{0.0, -t}) * (a / std::cos(t)); };
    const auto through_top = [&](double t) { return std::exp(cplx{0.0, -t}) * (b / std::sin(t)); };
    cplx acc{};
    for (int k = 0; k < 16; ++k) {
        acc += integrate_panel(through_right, split * k / 16.0, split * (k + 1) / 16.0, rule);
        acc += integrate_panel(through_top, split + (kPi / 2 - split) * k / 16.0, split + (kPi / 2 - split) * (k + 1) / 16.0, rule);
    }
    return acc;
}

// the four quadrants of the box around p, each rotated so p is the lower-left corner
cplx polar_cauchy_oracle(const Box& box, cplx p) {
    const double l = p.real() - box.lo.real();
    const double r = box.hi.real() - p.real();
    const double d = p.imag() - box.lo.imag();
    const double u = box.hi.imag() - p.imag();
    const cplx i{0.0, 1.0};
    // a rotation z -> i^k z maps 1/z dA to i^{-k}/z dA
    return corner_integral(r, u) + corner_integral(u, l) / i + corner_integral(l, d) / (i * i) + corner_integral(d, r) / (i * i * i);
}

}  // namespace

TEST_CASE("Box and RationalFn validation") {
    CHECK_THROWS_AS((Box{{1.0, 0.0}, {0.0, 1.0}}.validate()), InvalidArgument);
    CHECK(kSquare.interior({0.0, 0.0}));
    CHECK_FALSE(kSquare.interior({1.0, 0.0}));
    CHECK(kSquare.boundary_distance({0.5, 0.0}) == doctest::Approx(0.5));
    CHECK(kSquare.area() == 4.0);
    CHECK_THROWS_AS(RationalFn({0.0, 0.0}, {1.0, 1.0}), InvalidArgument);
    CHECK_THROWS_AS(RationalFn({0.0}, {0.0}), InvalidArgument);
    CHECK_THROWS_AS(RationalFn({0.0, 1.0}, {1.0}), InvalidArgument);
}

TEST_CASE("contour integrals") {
    CHECK(std::abs(contour_integral_rect([](cplx) { return cplx{1.0, 0.0}; }, Box{{-0.3, 0.2}, {1.7, 0.9}})) <= 1e-14);
    CHECK(std::abs(contour_integral_rect([](cplx z) { return 1.0 / z; }, kSquare) - cplx{0.0, 2.0 * kPi}) <= 1e-10);
    CHECK(std::abs(contour_integral_rect([](cplx z) { return z; }, Box{{-0.3, 0.2}, {1.7, 0.9}})) <= 1e-12);
    // the integral of conj(z) around a closed curve is 2i times the area
    const Box b{{-0.3, 0.2}, {1.7, 0.9}};
    CHECK(std::abs(contour_integral_rect([](cplx z) { return std::conj(z); }, b) - cplx{0.0, 2.0 * b.area()}) <= 1e-12);
    CHECK_THROWS_AS(contour_integral_rect([](cplx z) { return z.imag() > 0.5 ? cplx{std::nan(""), 0.0} : z; }, kSquare),
                    NumericalError);
}

TEST_CASE("residue theorem") {
    const ResidueCheckResult one = residue_check(RationalFn({0.0}, {1.0}), kSquare);
    CHECK(std::abs(one.residue_sum - 1.0) <= 1e-15);
    CHECK(one.residual <= 1e-10);

    const RationalFn two({0.0, 0.3}, {-10.0 / 3.0, 10.0 / 3.0});
    const ResidueCheckResult r2 = residue_check(two, kSquare);
    CHECK(std::abs(r2.residue_sum) <= 1e-14);
    CHECK(std::abs(r2.contour_value) <= 1e-10);
    // the partial fractions are 1/(z (z - 0.3))
    CHECK(std::abs(two(cplx{0.7, 0.2}) - 1.0 / (cplx{0.7, 0.2} * cplx{0.4, 0.2})) <= 1e-14);

    const ResidueCheckResult outside = residue_check(RationalFn({5.0}, {1.0}), kSquare);
    CHECK(std::abs(outside.contour_value) <= 1e-10);
    CHECK(outside.residue_sum == cplx{0.0, 0.0});

    CHECK_THROWS_AS(residue_check(RationalFn({cplx{1.0 - 1e-8, 0.0}}, {1.0}), kSquare), InvalidArgument);
}

TEST_CASE("wirtinger derivative") {
    const cplx z{0.3, -0.8};
    CHECK(std::abs(wirtinger([](cplx w) { return w; }, z)) <= 1e-8);
    CHECK(std::abs(wirtinger([](cplx w) { return std::conj(w); }, z) - 1.0) <= 1e-8);
    CHECK(std::abs(wirtinger([](cplx w) { return std::norm(w); }, {1.0, 1.0}) - cplx{1.0, 1.0}) <= 1e-7);
}

TEST_CASE("closed-form Cauchy area integral") {
    // pole outside: smooth integrand, tensor Gauss-Legendre oracle
    const Box b{{-0.4, -0.7}, {0.9, 0.5}};
    const cplx p{1.3, 0.2};
    const GaussLegendreRule& rule = gauss_legendre(32);
    cplx oracle{};
    for (int i = 0; i < 8; ++i) {
        const double x0 = -0.4 + 1.3 * i / 8.0;
        const double x1 = -0.4 + 1.3 * (i + 1) / 8.0;
        oracle += integrate_panel(
            [&](double x) { return integrate_panel([&](double y) { return 1.0 / (cplx{x, y} - p); }, -0.7, 0.5, rule); }, x0, x1, rule);
    }
    CHECK(std::abs(rect_cauchy_integral(b, p) - oracle) <= 1e-12);

    for (cplx q : {cplx{0.0, 0.0}, cplx{0.5, 0.5}, cplx{-0.2, 0.33}, cplx{0.8, -0.6}}) {
        CHECK(std::abs(rect_cauchy_integral(b, q) - polar_cauchy_oracle(b, q)) <= 1e-12);
    }
    // symmetric box about the pole
    CHECK(std::abs(rect_cauchy_integral(kSquare, 0.0)) <= 1e-14);
}

TEST_CASE("weighted residue identity") {
    const RationalFn inv({0.0}, {1.0});
    const auto square = [](cplx z) { return z * z; };
    const ResidueCheckResult hol = weighted_residue_check(inv, square, kSquare);
    CHECK(std::abs(hol.area_term) <= 1e-8);
    CHECK(std::abs(hol.contour_value) <= 1e-8);

    const auto one = [](cplx) { return cplx{1.0, 0.0}; };
    const RationalFn f({0.0, cplx{0.5, 0.0}}, {1.0, 2.0});
    const ResidueCheckResult w1 = weighted_residue_check(f, one, kSquare);
    const ResidueCheckResult plain = residue_check(f, kSquare);
    CHECK(w1.contour_value == plain.contour_value);
    CHECK(w1.residue_sum == plain.residue_sum);
    CHECK(std::abs(w1.area_term) <= 1e-9);

    const auto bar = [](cplx z) { return std::conj(z); };
    const ResidueCheckResult c = weighted_residue_check(inv, bar, kSquare);
    CHECK(c.residual <= 1e-6);
    CHECK(c.residual >= 0.0);
    // independent area quadrature: for w = conj z the area term is (1/pi) int 1/z dA
    CHECK(std::abs(c.area_term - polar_cauchy_oracle(kSquare, 0.0) / kPi) <= 1e-9);

    const auto mod2 = [](cplx z) { return std::norm(z); };
    const RationalFn g({cplx{-0.5, 0.5}, cplx{0.5, 0.0}}, {cplx{1.0, 1.0}, -0.5});
    const ConvergenceCheck conv = weighted_residue_convergence(g, mod2, kSquare);
    CHECK(conv.pass);
    CHECK(conv.coarse.residual <= 1e-6);
    CHECK(conv.fine.points_per_edge == 2 * conv.coarse.points_per_edge);
    CHECK(conv.fine.area_grid == 2 * conv.coarse.area_grid);
}

TEST_CASE("fejer side series") {
    CHECK(fejer_side_series(0.0, 0.5, 5.0, 1) == 0.0);
    const double two = fejer_side_series(0.0, 0.5, 5.0, 2);
    CHECK(two == doctest::Approx(0.5 * 4.0 / kPi / std::cosh(5.0 * kPi)).epsilon(1e-12));
}

TEST_CASE("harmonic measure of a rectangle") {
    const HarmonicMassReport r = harmonic_side_mass(5.0, 1.0, 0.0, 0.5, 64);
    CHECK(r.side_mass <= 1e-6);
    CHECK(r.side_mass == doctest::Approx(4.0 / kPi * std::sin(kPi * 0.5) / std::cosh(5.0 * kPi)).epsilon(1e-3));
    CHECK(r.upper_mass <= 0.5);
    CHECK(r.upper_bound_ok);
    CHECK(r.side_bound_ok);
    CHECK(r.poisson_bound_ok);
    CHECK(r.sum_residual <= 1e-6);
    for (double m : {r.lower_mass, r.upper_mass, r.side_mass}) {
        CHECK(m >= 0.0);
        CHECK(m <= 1.0);
    }

    // scale invariance
    const HarmonicMassReport s = harmonic_side_mass(15.0, 3.0, 0.0, 1.5, 64);
    CHECK(s.lower_mass == doctest::Approx(r.lower_mass).epsilon(1e-12));

    // start next to the bottom: everything exits below
    const HarmonicMassReport low = harmonic_side_mass(2.0, 1.0, 0.0, 1e-4);
    CHECK(low.lower_mass >= 1.0 - 1e-3);
    CHECK(low.side_mass <= 1e-3);

    // the center of a square sees each side with mass 1/4
    const HarmonicMassReport sq = harmonic_side_mass(0.5, 1.0, 0.0, 0.5);
    CHECK(sq.lower_mass == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(sq.upper_mass == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(sq.side_mass == doctest::Approx(0.5).epsilon(1e-9));

    CHECK_THROWS_AS(harmonic_side_mass(5.0, 1.0, 0.0, 1.5), InvalidArgument);
}

TEST_CASE("lower edge mass against the Poisson kernel") {
    const auto poisson_mass = [](double x0, double eta, double c, double d) {
        return (std::atan((d - x0) / eta) - std::atan((c - x0) / eta)) / kPi;
    };
    // a piece far from the start point: both tiny, series below Poisson
    const double far_s = lower_edge_mass(5.0, 1.0, 0.0, 0.01, 2.0, 3.0);
    const double far_p = poisson_mass(0.0, 0.01, 2.0, 3.0);
    CHECK(far_s <= 1e-3);
    CHECK(far_p <= 1e-3);
    CHECK(far_s <= far_p);

    // the whole edge is the lower mass
    const HarmonicMassReport r = harmonic_side_mass(3.0, 1.0, 0.4, 0.3);
    CHECK(lower_edge_mass(3.0, 1.0, 0.4, 0.3, -3.0, 3.0) == doctest::Approx(r.lower_mass).epsilon(1e-9));
    CHECK(lower_edge_mass(3.0, 1.0, 0.4, 0.3, -3.0, 3.0) <= 1.0);

    // far walls: the series approaches the half-plane Poisson mass
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
        const double c = -1.0 + 0.1 * k;
        worst = std::max(worst, std::abs(lower_edge_mass(10.0, 20.0, 0.0, 1e-3, c, c + 0.1) - poisson_mass(0.0, 1e-3, c, c + 0.1)));
    }
    CHECK(worst <= 1e-4);

    const PoissonDominance dom = poisson_dominance_check(2.0, 1.0, 0.1, 0.2, 16);
    CHECK(dom.pass);
    CHECK(dom.series_mass.size() == 16);
    for (std::size_t i = 0; i < 16; ++i) CHECK(dom.series_mass[i] <= dom.poisson_mass[i] + 1e-6);
}
