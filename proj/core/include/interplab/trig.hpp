#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace interplab {

/// Real trigonometric polynomial a_0 + sum_{j=1}^n a_j cos(jz) + b_j sin(jz).
class TrigPoly {
public:
    TrigPoly() : a_{0.0} {}
    /// a has n+1 entries (a_0..a_n), b has n entries (b_1..b_n).
    TrigPoly(std::vector<double> a, std::vector<double> b);

    [[nodiscard]] std::size_t degree() const { return b_.size(); }
    [[nodiscard]] std::span<const double> a() const { return a_; }
    /// b()[j-1] is b_j.
    [[nodiscard]] std::span<const double> b() const { return b_; }
    /// |a_n + i b_n|.
    [[nodiscard]] double leading_magnitude() const;
    /// |a_0| + sum_j (|a_j| + |b_j|).
    [[nodiscard]] double coefficient_l1() const;

    [[nodiscard]] std::complex<double> operator()(std::complex<double> z) const;
    [[nodiscard]] double operator()(double x) const;

private:
    std::vector<double> a_;
    std::vector<double> b_;
};

/// Derivative, as a polynomial of the same degree.
TrigPoly trig_deriv(const TrigPoly& p);

inline std::complex<double> trig_eval(const TrigPoly& p, std::complex<double> z) { return p(z); }

/// amplitude * cos(n (x - x0)).
TrigPoly sinusoid(double amplitude, std::size_t n, double x0);

/// prod_{k} sin((x - r_k)/2) over an even number 2n of roots, expanded in the
/// exponential basis; degree n with leading magnitude 2 * 4^{-n}.
///
/// The expansion cancels: its terms are of size binom(2n, n) 4^{-n} while the
/// values are of size 4^{-n}, so the relative error grows like binom(2n, n)
/// times the unit roundoff. Degrees above kMaxRootExpansionDegree are refused.
TrigPoly trig_from_roots(std::span<const double> roots);

inline constexpr std::size_t kMaxRootExpansionDegree = 24;

struct TrigRoots {
    std::vector<double> roots;        // increasing, in [0, 2 pi)
    std::vector<double> derivatives;  // P'(root)
};

/// Real roots in [0, 2 pi): sign changes on a 16n-point grid, bisected to
/// 1e-12. With `assume_all_real`, anything other than exactly 2n roots is an
/// error, and so is a near-double root (|P| dipping below 1e-10 of its scale
/// without a sign change).
TrigRoots trig_roots(const TrigPoly& p, bool assume_all_real);

struct ToyQuantities {
    double sup_value = 0.0;       // sup_x sum_k |P(x)| / |P'(x_k)|
    double integral_value = 0.0;  // integral over [0, 2 pi) of the same sum
    double recip_sum = 0.0;       // sum_k 1/|P'(x_k)|
    double sup_abs = 0.0;         // sup |P|
    double l1 = 0.0;              // integral |P|
};

/// Toy-model quantities for a P with 2n distinct real roots.
ToyQuantities toy_quantities(const TrigPoly& p);

/// integral_0^{2pi} |P|, Gauss-Legendre panels split at the real roots.
double l1_norm(const TrigPoly& p);

/// sum_k 1/|P'(x_k)| over the 2n roots (throws unless P is real-rooted).
double recip_deriv_sum(const TrigPoly& p);

/// sup over [0, 2pi) of |P|, with the sample grid refined by golden section
/// around every local maximum. Returns {argmax, value}.
std::pair<double, double> trig_sup_abs(const TrigPoly& p, std::size_t grid);

enum class SquareWave { Sin, Cos };

/// Fejer-weighted partial sum of the square-wave Fourier series,
/// (4/pi) sum_{m odd} (1 - m/M)_+ c_m trig(m x)/m.
double fejer_square_wave(double x, std::size_t M, SquareWave variant);

struct AsymptoticCheck {
    double residual = 0.0;  // max_x |2 e^{-nT} P(x+iT) - (a_n - i b_n) e^{-inx}|
    double bound = 0.0;     // 2 e^{-T} ||coeffs||_1
    bool pass = false;
};

/// Compares P(x + iT) with its leading-term asymptotic on a uniform x grid.
AsymptoticCheck leading_asymptotic_check(const TrigPoly& p, double T);

/// Random TrigPoly of the given degree with 2n simple real roots: a jittered
/// equispaced root pattern with a random phase, expanded via trig_from_roots
/// and rescaled by a random amplitude in [0.5, 2]. Consecutive roots stay at
/// least 0.2 pi/n apart, well above the root finder's grid spacing. Degree at
/// most kMaxRootExpansionDegree.
TrigPoly random_real_rooted(std::size_t degree, std::uint64_t seed);

}  // namespace interplab
