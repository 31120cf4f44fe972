#include "interplab/bernstein.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "interplab/error.hpp"

namespace interplab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double linspace(double lo, double hi, std::size_t i, std::size_t count) {
    if (count == 1) return lo;
    if (i + 1 == count) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
}

CheckRecord record(std::string name, double ratio, double limit) {
    return {std::move(name), ratio, limit, ratio <= limit};
}
}  // namespace

void Rect::validate() const {
    if (!(I.hi > I.lo)) throw InvalidArgument("Rect: need b > a");
    if (!(y0 > 0.0)) throw InvalidArgument("Rect: need y0 > 0");
}

std::complex<double> HoloSampler::derivative(std::complex<double> z) const {
    if (df) return df(z);
    const double h = 1e-6 * diff_scale;
    return (f(z + h) - f(z - h)) / (2.0 * h);
}

bool BernsteinReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

const CheckRecord& BernsteinReport::check(const std::string& name) const {
    for (const auto& c : checks) {
        if (c.name == name) return c;
    }
    throw InvalidArgument("no check named " + name);
}

BernsteinReport global_ds_report(const TrigPoly& p, std::size_t grid) {
    const std::size_t n = p.degree();
    if (n == 0) throw InvalidArgument("global_ds_report: degree must be >= 1");
    if (grid < 16) throw InvalidArgument("global_ds_report: grid too small");
    const TrigPoly dp = trig_deriv(p);
    const auto [x0, A] = trig_sup_abs(p, grid);
    const double lambda = static_cast<double>(n);

    BernsteinReport rep;
    rep.A = A;
    rep.lambda = lambda;
    rep.argmax = x0;

    double bern = 0.0;
    double boas_max = 0.0;
    double boas_min = std::numeric_limits<double>::infinity();
    double duffin = 0.0;
    for (std::size_t j = 0; j < grid; ++j) {
        const double x = kTwoPi * static_cast<double>(j) / static_cast<double>(grid);
        const double f = p(x);
        const double d = dp(x);
        bern = std::max(bern, std::abs(d) / (A * lambda));
        const double boas = (d * d + lambda * lambda * f * f) / (lambda * lambda * A * A);
        boas_max = std::max(boas_max, boas);
        boas_min = std::min(boas_min, boas);
        for (double y : {0.1, 0.5, 1.0}) duffin = std::max(duffin, std::abs(p({x, y})) / (A * std::cosh(lambda * y)));
    }
    rep.checks.push_back(record("bernstein", bern, 1.0 + kGlobalSlack));
    rep.checks.push_back(record("boas", boas_max, 1.0 + kGlobalSlack));
    // informational: equals 1 identically only for sinusoids
    rep.checks.push_back({"boas_min", boas_min, 1.0 + kGlobalSlack, true});
    rep.checks.push_back(record("duffin", duffin, 1.0 + kGlobalSlack));

    // Hormander: +-P(x) >= A cos(lambda (x - x0)) on (x0 - pi/lambda, x0 + pi/lambda)
    const double s = p(x0) >= 0.0 ? 1.0 : -1.0;
    double deficit = 0.0;
    const double half_width = kPi / lambda;
    for (std::size_t j = 1; j < grid; ++j) {
        const double x = x0 - half_width + 2.0 * half_width * static_cast<double>(j) / static_cast<double>(grid);
        deficit = std::max(deficit, (A * std::cos(lambda * (x - x0)) - s * p(x)) / A);
    }
    rep.checks.push_back(record("hormander", 1.0 + deficit, 1.0 + kGlobalSlack));

    // no zero strictly inside [x0 - pi/(2 lambda), x0 + pi/(2 lambda)]
    const TrigRoots roots = trig_roots(p, false);
    double nearest = std::numeric_limits<double>::infinity();
    for (double r : roots.roots) {
        double d = std::abs(r - x0);
        d = std::min(d, kTwoPi - d);
        nearest = std::min(nearest, d);
    }
    const double gap_ratio = std::isinf(nearest) ? 0.0 : (kPi / (2.0 * lambda)) / nearest;
    rep.checks.push_back(record("zero_gap", gap_ratio, 1.0 + kGlobalSlack));
    return rep;
}

BernsteinReport local_bernstein_report(const HoloSampler& f, const Rect& rect, double x, const LocalOptions& options) {
    rect.validate();
    const double L = rect.edge_distance(x);
    if (!(L > 0.0)) throw InvalidArgument("local_bernstein_report: x must be interior to I");
    if (options.edge_points < 2 || options.heights < 2) throw InvalidArgument("local_bernstein_report: grids too small");

    double A = 0.0;
    double max_imag = 0.0;
    double upper = 0.0;
    for (std::size_t i = 0; i < options.edge_points; ++i) {
        const double xi = linspace(rect.I.lo, rect.I.hi, i, options.edge_points);
        const std::complex<double> lo = f({xi, 0.0});
        A = std::max(A, std::abs(lo));
        max_imag = std::max(max_imag, std::abs(lo.imag()));
        upper = std::max(upper, std::abs(f({xi, rect.y0})));
    }
    if (!(A > 0.0)) throw InvalidArgument("local_bernstein_report: f vanishes on the lower edge");
    if (max_imag > 1e-9 * A) throw InvalidArgument("local_bernstein_report: f is not real on the lower edge");
    const double lambda = std::log(upper / A) / rect.y0;
    if (!(lambda > 0.0)) throw InvalidArgument("local_bernstein_report: measured exponential type is not positive");

    BernsteinReport rep;
    rep.A = A;
    rep.lambda = lambda;
    rep.L = L;
    rep.c1 = options.c1;
    rep.c2 = options.c2;
    rep.exp_error = options.c1 * std::exp(-kPi * L / (4.0 * rect.y0));
    rep.type_error = options.c2 / (lambda * std::min(rect.y0, L));
    rep.error_budget = rep.exp_error + rep.type_error;

    const std::complex<double> fx = f({x, 0.0});
    const std::complex<double> dfx = f.derivative({x, 0.0});
    const double r1 = std::abs(dfx) / (A * lambda);
    const double r2 = std::abs(fx + std::complex<double>(0.0, 1.0) * dfx / lambda) / A;
    double r3 = 0.0;
    for (std::size_t j = 0; j < options.heights; ++j) {
        const double y = linspace(0.0, rect.y0, j, options.heights);
        r3 = std::max(r3, std::abs(f({x, y})) / (A * std::cosh((1.0 + rep.type_error) * lambda * y)));
    }
    rep.checks.push_back(record("local_bernstein", r1, 1.0 + rep.error_budget));
    rep.checks.push_back(record("local_boas", r2, 1.0 + rep.error_budget));
    rep.checks.push_back(record("local_duffin", r3, 1.0 + rep.exp_error));
    return rep;
}

HoloSampler rescale_Q(const NodeSet& nodes, double xstar, double rho_at_xstar, Rect domain) {
    if (!(rho_at_xstar > 0.0)) throw InvalidArgument("rescale_Q: density must be positive");
    const LogComplex p0 = eval_P(nodes, xstar);
    if (p0.is_zero()) throw InvalidArgument("rescale_Q: x* is a node");
    const double scale = 1.0 / (static_cast<double>(nodes.size()) * rho_at_xstar);
    HoloSampler q;
    q.domain = domain;
    q.real_symmetric = true;
    q.f = [nodes, xstar, scale, p0](std::complex<double> z) {
        return (eval_P(nodes, xstar + scale * z) / p0).to_complex();
    };
    q.df = [nodes, xstar, scale, p0](std::complex<double> z) {
        const std::complex<double> w = xstar + scale * z;
        const LogComplex pw = eval_P(nodes, w);
        if (pw.is_zero()) {
            // Q'(v_k) = s P'(x_k)/P(x*)
            double logmag = 0.0;
            double phase = 0.0;
            for (double xi : nodes.xs()) {
                const std::complex<double> d = w - xi;
                if (d == 0.0) continue;
                logmag += std::log(std::abs(d));
                phase += std::arg(d);
            }
            return scale * (LogComplex{logmag, wrap_phase(phase)} / p0).to_complex();
        }
        return (pw / p0).to_complex() * scale * log_derivative(nodes, w);
    };
    return q;
}

std::size_t rescaled_zero_count(const NodeSet& nodes, double xstar, double rho_at_xstar, double t) {
    const double n_rho = static_cast<double>(nodes.size()) * rho_at_xstar;
    return static_cast<std::size_t>(std::count_if(nodes.xs().begin(), nodes.xs().end(),
                                                  [&](double xk) { return std::abs(n_rho * (xk - xstar)) <= t; }));
}

HoloSampler node_polynomial_sampler(const NodeSet& nodes) {
    HoloSampler s;
    s.domain = Rect{Interval{-1.0, 1.0}, 1.0};
    s.f = [nodes](std::complex<double> z) { return eval_P(nodes, z).to_complex(); };
    s.df = [nodes](std::complex<double> z) {
        const LogComplex p = eval_P(nodes, z);
        if (p.is_zero()) {
            std::complex<double> prod{1.0, 0.0};
            for (double xi : nodes.xs()) {
                if (z - xi != 0.0) prod *= (z - xi);
            }
            return prod;
        }
        return p.to_complex() * log_derivative(nodes, z);
    };
    return s;
}

long zero_count_disk(const HoloSampler& f, std::complex<double> center, double r, std::size_t quad_points) {
    if (!(r > 0.0)) throw InvalidArgument("zero_count_disk: radius must be positive");
    if (quad_points < 8) throw InvalidArgument("zero_count_disk: too few quadrature points");
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t j = 0; j < quad_points; ++j) {
        const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(quad_points);
        const std::complex<double> e = std::polar(1.0, theta);
        const std::complex<double> z = center + r * e;
        const std::complex<double> fz = f(z);
        const std::complex<double> dfz = f.derivative(z);
        // |f|/|f'| approximates the distance to the nearest zero
        if (std::abs(fz) <= 1e-6 * std::abs(dfz) || fz == 0.0)
            throw NumericalError("zero_count_disk: zero on or near the contour");
        acc += r * e * dfz / fz;
    }
    const std::complex<double> winding = acc / static_cast<double>(quad_points);
    const double rounded = std::round(winding.real());
    if (std::abs(winding.real() - rounded) > 0.1 || std::abs(winding.imag()) > 0.1)
        throw NumericalError("zero_count_disk: winding number not near an integer");
    return static_cast<long>(rounded);
}

double phragmen_lindelof_bound(double A, double M, double dist, double y0, double C) {
    return A * std::exp(C * std::exp(-kPi * dist / y0) * std::log(std::max(M, 1.0)));
}

PhragmenLindelofCheck local_pl_check(const HoloSampler& f, const Rect& rect, double x, double y, double C,
                                     std::size_t edge_points) {
    rect.validate();
    if (!rect.I.contains(x) || y < 0.0 || y > rect.y0) throw InvalidArgument("local_pl_check: point outside the rectangle");
    PhragmenLindelofCheck out;
    double side = 0.0;
    for (std::size_t i = 0; i < edge_points; ++i) {
        const double xi = linspace(rect.I.lo, rect.I.hi, i, edge_points);
        out.A = std::max({out.A, std::abs(f({xi, 0.0})), std::abs(f({xi, rect.y0}))});
        const double yi = linspace(0.0, rect.y0, i, edge_points);
        side = std::max({side, std::abs(f({rect.I.lo, yi})), std::abs(f({rect.I.hi, yi}))});
    }
    if (!(out.A > 0.0)) throw InvalidArgument("local_pl_check: f vanishes on the horizontal edges");
    out.M = std::max(1.0, side / out.A);
    out.value = std::abs(f({x, y}));
    out.bound = phragmen_lindelof_bound(out.A, out.M, rect.edge_distance(x), rect.y0, C);
    out.pass = out.value <= out.bound * (1.0 + 1e-12);
    return out;
}

}  // namespace interplab
