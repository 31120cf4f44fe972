#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "interplab/bernstein.hpp"
#include "interplab/interval.hpp"

namespace interplab {

/// Closed axis-parallel rectangle [lo.real, hi.real] x [lo.imag, hi.imag].
struct Box {
    std::complex<double> lo;
    std::complex<double> hi;

    void validate() const;
    [[nodiscard]] bool interior(std::complex<double> z) const;
    [[nodiscard]] double boundary_distance(std::complex<double> z) const;
    [[nodiscard]] double area() const { return (hi.real() - lo.real()) * (hi.imag() - lo.imag()); }
};

/// sum_j residues[j] / (z - poles[j]) + regular(z), simple poles only.
class RationalFn {
public:
    RationalFn(std::vector<std::complex<double>> poles, std::vector<std::complex<double>> residues, ComplexFn regular = {});

    [[nodiscard]] const std::vector<std::complex<double>>& poles() const { return poles_; }
    [[nodiscard]] const std::vector<std::complex<double>>& residues() const { return residues_; }
    [[nodiscard]] const ComplexFn& regular() const { return regular_; }
    [[nodiscard]] std::complex<double> operator()(std::complex<double> z) const;

private:
    std::vector<std::complex<double>> poles_;
    std::vector<std::complex<double>> residues_;
    ComplexFn regular_;
};

/// Anticlockwise boundary integral of g, Gauss-Legendre panels of order 16
/// with about points_per_edge nodes per edge. Throws NumericalError on a
/// non-finite sample.
std::complex<double> contour_integral_rect(const ComplexFn& g, const Box& box, std::size_t points_per_edge = 64);

struct ResidueCheckResult {
    std::complex<double> contour_value;  // (1/2 pi i) * contour integral of f w
    std::complex<double> residue_sum;    // sum Res(f, p) w(p) over interior poles
    std::complex<double> area_term;      // (1/pi) * area integral of f dw/dzbar
    double residual = 0.0;
    std::size_t points_per_edge = 0;
    std::size_t area_grid = 0;
};

/// Residue theorem with w = 1. Throws InvalidArgument if a pole lies within
/// 1e-6 of the boundary.
ResidueCheckResult residue_check(const RationalFn& f, const Box& box, std::size_t points_per_edge = 64);

/// (d/dx + i d/dy) w / 2 by central differences.
std::complex<double> wirtinger(const ComplexFn& w, std::complex<double> z, double h = 1e-5);

/// Area integral of 1/(z - p) over the box, in closed form.
std::complex<double> rect_cauchy_integral(const Box& box, std::complex<double> p);

inline constexpr std::size_t kDefaultAreaGrid = 512;
inline constexpr double kResidueNoiseFloor = 1e-9;

/// Weighted residue identity
///   (1/2 pi i) int_boundary f w dz = sum Res(f, p) w(p) + (1/pi) int_box f dw/dzbar dA.
/// The area integrand has 1/(z - p) singularities; the part Res dw(p)/(z - p)
/// is integrated exactly and the bounded remainder by a 2x2 Gauss-Legendre
/// rule on each of area_grid x area_grid cells. dw/dzbar is the numerical Wirtinger
/// derivative.
ResidueCheckResult weighted_residue_check(const RationalFn& f, const ComplexFn& w, const Box& box,
                                          std::size_t points_per_edge = 64, std::size_t area_grid = kDefaultAreaGrid);

struct ConvergenceCheck {
    ResidueCheckResult coarse;
    ResidueCheckResult fine;  // both resolutions doubled
    bool pass = false;        // coarse residual <= tol and (4x decrease or both below the noise floor)
};

ConvergenceCheck weighted_residue_convergence(const RationalFn& f, const ComplexFn& w, const Box& box, double tol = 1e-6,
                                              std::size_t points_per_edge = 64, std::size_t area_grid = kDefaultAreaGrid);

struct HarmonicMassReport {
    Interval I;
    double y0 = 1.0;
    double x0 = 0.0;
    double eta = 0.0;
    std::size_t M = 0;
    double lower_mass = 0.0;
    double upper_mass = 0.0;
    double side_mass = 0.0;       // limit of the series
    double side_fejer = 0.0;      // Fejer partial sum u_M
    double side_fejer_half = 0.0; // u_{M/2}
    double side_bound = 0.0;      // C e^{-pi dist/y0}
    double sum_residual = 0.0;    // |lower + upper + side - 1|
    bool poisson_bound_ok = false;
    bool upper_bound_ok = false;
    bool side_bound_ok = false;
};

/// Fejer-damped side-mass series in coordinates rescaled to height 1:
/// sum_{m odd} (1 - m/M)_+ 4 sin(m pi y)/(m pi) cosh(m pi x)/cosh(m pi T).
double fejer_side_series(double x, double y, double T, std::size_t M);

/// Harmonic measure of the lower, upper and vertical edges of the rectangle
/// [-T, T] x [0, y0] seen from x0 + i eta. The three masses come from
/// independent separated series.
HarmonicMassReport harmonic_side_mass(double T, double y0, double x0, double eta, std::size_t M = 64, double C = 10.0,
                                      std::size_t poisson_grid = 20);

struct PoissonDominance {
    bool pass = false;
    std::vector<double> series_mass;
    std::vector<double> poisson_mass;
    double worst_excess = 0.0;  // max(series - poisson)
};

/// Harmonic measure of each of `grid` equal pieces of the lower edge against
/// the half-plane Poisson mass of the same piece.
PoissonDominance poisson_dominance_check(double T, double y0, double x0, double eta, std::size_t grid);

/// Harmonic measure of [c, d] (a piece of the lower edge) at x0 + i eta.
double lower_edge_mass(double T, double y0, double x0, double eta, double c, double d);

}  // namespace interplab
