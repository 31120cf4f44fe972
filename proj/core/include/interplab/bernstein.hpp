#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "interplab/interval.hpp"
#include "interplab/nodes.hpp"
#include "interplab/trig.hpp"

namespace interplab {

/// Upper half-rectangle {x + iy : x in I, 0 <= y <= y0}.
struct Rect {
    Interval I;
    double y0 = 1.0;

    void validate() const;
    /// dist(x, boundary of I).
    [[nodiscard]] double edge_distance(double x) const { return std::min(x - I.lo, I.hi - x); }
};

using ComplexFn = std::function<std::complex<double>(std::complex<double>)>;

/// Black-box holomorphic function on a rectangle. Without an exact
/// derivative, f' is a central difference with step 1e-6 * diff_scale.
struct HoloSampler {
    ComplexFn f;
    ComplexFn df;  // optional
    Rect domain;
    bool real_symmetric = true;
    double diff_scale = 1.0;

    std::complex<double> operator()(std::complex<double> z) const { return f(z); }
    [[nodiscard]] std::complex<double> derivative(std::complex<double> z) const;
};

struct CheckRecord {
    std::string name;
    double ratio = 0.0;
    double limit = 0.0;  // pass iff ratio <= limit
    bool pass = false;
};

struct BernsteinReport {
    double A = 0.0;
    double lambda = 0.0;
    double L = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
    double exp_error = 0.0;    // c1 e^{-pi L/(4 y0)}
    double type_error = 0.0;   // c2 / (lambda min(y0, L))
    double error_budget = 0.0; // sum of the two
    double argmax = 0.0;
    std::vector<CheckRecord> checks;

    [[nodiscard]] bool all_pass() const;
    [[nodiscard]] const CheckRecord& check(const std::string& name) const;
};

inline constexpr double kGlobalSlack = 1e-9;

/// Checks the global Bernstein-class inequalities for a trig polynomial with
/// lambda = degree and A = sup|P|:
///   bernstein   |P'| <= A lambda
///   boas        P'^2 + lambda^2 P^2 <= lambda^2 A^2   (boas_min: min of the same ratio)
///   duffin      |P(x+iy)| <= A cosh(lambda y), y in {0.1, 0.5, 1}
///   hormander   +-P(x) >= A cos(lambda (x - x0)) near the maximizer x0
///   zero_gap    no root within pi/(2 lambda) of x0
/// All at `grid` points with slack 1e-9.
BernsteinReport global_ds_report(const TrigPoly& p, std::size_t grid);

struct LocalOptions {
    double c1 = 10.0;
    double c2 = 10.0;
    std::size_t edge_points = 2001;
    std::size_t heights = 33;
};

/// Local Bernstein, Boas and Duffin-Schaeffer ratios at x for f on `rect`:
/// A = max |f| on the lower edge, lambda = log(max upper-edge |f| / A)/y0,
/// L = dist(x, boundary of I). Each inequality is checked with its error terms
/// in the positions where the local theory places them:
///   r1 = |f'(x)|/(A lambda) <= 1 + exp_error + type_error
///   r2 = |f(x) + i f'(x)/lambda|/A <= 1 + exp_error + type_error
///   r3 = max_y |f(x+iy)| / (A cosh((1 + type_error) lambda y)) <= 1 + exp_error
/// Throws InvalidArgument when f is not real on the lower edge or lambda <= 0.
BernsteinReport local_bernstein_report(const HoloSampler& f, const Rect& rect, double x, const LocalOptions& options = {});

/// Q(z) = P(x* + z/(n rho)) / P(x*), evaluated in the log domain, with exact
/// derivative. Throws if x* is a node.
HoloSampler rescale_Q(const NodeSet& nodes, double xstar, double rho_at_xstar, Rect domain = Rect{Interval{-20.0, 20.0}, 2.0});

/// #{k : |n rho (x_k - x*)| <= t}, the real zeros of Q in [-t, t].
std::size_t rescaled_zero_count(const NodeSet& nodes, double xstar, double rho_at_xstar, double t);

/// P(z) = prod (z - x_i) as a sampler with exact derivative (moderate n only;
/// the value is exponentiated).
HoloSampler node_polynomial_sampler(const NodeSet& nodes);

/// Number of zeros in the disk D(center, r) by the argument principle with
/// the trapezoid rule on `quad_points` circle points. Throws NumericalError if
/// a zero lies within ~1e-6 of the circle or the winding number is not within
/// 0.1 of an integer.
long zero_count_disk(const HoloSampler& f, std::complex<double> center, double r, std::size_t quad_points = 256);

struct PhragmenLindelofCheck {
    bool pass = false;
    double A = 0.0;  // max |f| on upper and lower edges
    double M = 1.0;  // max side |f| / A, at least 1
    double value = 0.0;
    double bound = 0.0;
};

/// A exp(C e^{-pi dist(x, boundary I)/y0} log M).
double phragmen_lindelof_bound(double A, double M, double dist, double y0, double C);

/// |f(x+iy)| <= phragmen_lindelof_bound(...) with A and M measured on the edges.
PhragmenLindelofCheck local_pl_check(const HoloSampler& f, const Rect& rect, double x, double y, double C = 10.0,
                                     std::size_t edge_points = 1001);

}  // namespace interplab
