#include "interplab/complexint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "interplab/error.hpp"
#include "interplab/parallel.hpp"
#include "interplab/quadrature.hpp"

namespace interplab {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr std::size_t kPanelOrder = 16;
constexpr std::size_t kMaxSeriesTerms = 20'000'000;
const std::complex<double> kI{0.0, 1.0};

// cosh(a)/cosh(b) for 0 <= a <= b
double cosh_ratio(double a, double b) {
    return std::exp(a - b) * (1.0 + std::exp(-2.0 * a)) / (1.0 + std::exp(-2.0 * b));
}

// sinh(a)/sinh(b) for 0 <= a <= b, b > 0
double sinh_ratio(double a, double b) {
    return std::exp(a - b) * (-std::expm1(-2.0 * a)) / (-std::expm1(-2.0 * b));
}

// Antiderivative of u/(u^2 + v^2) in u then v.
double cauchy_primitive(double u, double v) {
    const double r2 = u * u + v * v;
    const double log_part = (v == 0.0 || r2 == 0.0) ? 0.0 : 0.5 * v * std::log(r2);
    const double atan_part = (u == 0.0) ? 0.0 : u * std::atan(v / u);
    return log_part - v + atan_part;
}

struct Scaled {
    double T;
    double x;
    double y;
};

Scaled rescale(double T, double y0, double x0, double eta) {
    if (!(T > 0.0) || !(y0 > 0.0)) throw InvalidArgument("harmonic: need T > 0 and y0 > 0");
    if (!(std::abs(x0) < T)) throw InvalidArgument("harmonic: need |x0| < T");
    if (!(eta > 0.0 && eta < y0)) throw InvalidArgument("harmonic: need 0 < eta < y0");
    return {T / y0, x0 / y0, eta / y0};
}

// sum over m >= 1 of coef(m) sin(m pi y) cosh(m pi x)/cosh(m pi T), with
// |coef(m)| <= 4/(m pi), until the geometric tail is negligible
template <typename Coef>
double side_series(const Scaled& s, Coef coef) {
    const double ax = std::abs(s.x);
    const double decay = std::exp(-kPi * (s.T - ax));
    double acc = 0.0;
    for (std::size_t m = 1; m < kMaxSeriesTerms; ++m) {
        const double md = static_cast<double>(m);
        const double ratio = cosh_ratio(md * kPi * ax, md * kPi * s.T);
        acc += coef(m) * std::sin(md * kPi * s.y) * ratio;
        if (4.0 / (md * kPi) * ratio / (1.0 - decay) < 1e-17) return acc;
    }
    throw NumericalError("harmonic: side series did not converge");
}
}  // namespace

void Box::validate() const {
    if (!(hi.real() > lo.real() && hi.imag() > lo.imag())) throw InvalidArgument("Box: degenerate rectangle");
}

bool Box::interior(std::complex<double> z) const {
    return z.real() > lo.real() && z.real() < hi.real() && z.imag() > lo.imag() && z.imag() < hi.imag();
}

double Box::boundary_distance(std::complex<double> z) const {
    const double dx = std::min(std::abs(z.real() - lo.real()), std::abs(z.real() - hi.real()));
    const double dy = std::min(std::abs(z.imag() - lo.imag()), std::abs(z.imag() - hi.imag()));
    const bool inside_x = z.real() >= lo.real() && z.real() <= hi.real();
    const bool inside_y = z.imag() >= lo.imag() && z.imag() <= hi.imag();
    if (inside_x && inside_y) return std::min(dx, dy);
    if (inside_x) return dy;
    if (inside_y) return dx;
    return std::hypot(dx, dy);
}

RationalFn::RationalFn(std::vector<std::complex<double>> poles, std::vector<std::complex<double>> residues, ComplexFn regular)
    : poles_(std::move(poles)), residues_(std::move(residues)), regular_(std::move(regular)) {
    if (poles_.size() != residues_.size()) throw InvalidArgument("RationalFn: poles and residues differ in length");
    for (std::size_t i = 0; i < poles_.size(); ++i) {
        if (!std::isfinite(std::abs(residues_[i])) || residues_[i] == 0.0)
            throw InvalidArgument("RationalFn: residues must be finite and nonzero");
        for (std::size_t j = 0; j < i; ++j) {
            if (poles_[i] == poles_[j]) throw InvalidArgument("RationalFn: poles must be distinct");
        }
    }
}

std::complex<double> RationalFn::operator()(std::complex<double> z) const {
    std::complex<double> acc = regular_ ? regular_(z) : std::complex<double>{};
    for (std::size_t i = 0; i < poles_.size(); ++i) acc += residues_[i] / (z - poles_[i]);
    return acc;
}

std::complex<double> contour_integral_rect(const ComplexFn& g, const Box& box, std::size_t points_per_edge) {
    box.validate();
    const GaussLegendreRule& rule = gauss_legendre(kPanelOrder);
    const std::size_t panels = std::max<std::size_t>(1, (points_per_edge + kPanelOrder - 1) / kPanelOrder);
    const std::complex<double> corners[5] = {box.lo, {box.hi.real(), box.lo.imag()}, box.hi, {box.lo.real(), box.hi.imag()}, box.lo};
    std::complex<double> total{};
    for (int e = 0; e < 4; ++e) {
        const std::complex<double> a = corners[e];
        const std::complex<double> dz = corners[e + 1] - a;
        for (std::size_t p = 0; p < panels; ++p) {
            const double t0 = static_cast<double>(p) / static_cast<double>(panels);
            const double t1 = static_cast<double>(p + 1) / static_cast<double>(panels);
            total += integrate_panel(
                         [&](double t) {
                             const std::complex<double> v = g(a + t * dz);
                             if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                                 throw NumericalError("contour_integral_rect: non-finite sample");
                             return v;
                         },
                         t0, t1, rule) *
                     dz;
        }
    }
    return total;
}

ResidueCheckResult residue_check(const RationalFn& f, const Box& box, std::size_t points_per_edge) {
    return weighted_residue_check(f, [](std::complex<double>) { return std::complex<double>{1.0, 0.0}; }, box, points_per_edge, 0);
}

std::complex<double> wirtinger(const ComplexFn& w, std::complex<double> z, double h) {
    if (!(h > 0.0)) throw InvalidArgument("wirtinger: step must be positive");
    const std::complex<double> dx = (w(z + h) - w(z - h)) / (2.0 * h);
    const std::complex<double> dy = (w(z + kI * h) - w(z - kI * h)) / (2.0 * h);
    return 0.5 * (dx + kI * dy);
}

std::complex<double> rect_cauchy_integral(const Box& box, std::complex<double> p) {
    box.validate();
    const double a = box.lo.real() - p.real();
    const double b = box.hi.real() - p.real();
    const double c = box.lo.imag() - p.imag();
    const double d = box.hi.imag() - p.imag();
    // 1/zeta = (u - i v)/(u^2 + v^2)
    const double re = cauchy_primitive(b, d) - cauchy_primitive(a, d) - cauchy_primitive(b, c) + cauchy_primitive(a, c);
    const double im = cauchy_primitive(d, b) - cauchy_primitive(c, b) - cauchy_primitive(d, a) + cauchy_primitive(c, a);
    return {re, -im};
}

ResidueCheckResult weighted_residue_check(const RationalFn& f, const ComplexFn& w, const Box& box, std::size_t points_per_edge,
                                          std::size_t area_grid) {
    box.validate();
    for (const auto& p : f.poles()) {
        if (box.boundary_distance(p) < 1e-6) throw InvalidArgument("weighted_residue_check: pole on or near the contour");
    }
    ResidueCheckResult out;
    out.points_per_edge = points_per_edge;
    out.area_grid = area_grid;
    out.contour_value = contour_integral_rect([&](std::complex<double> z) { return f(z) * w(z); }, box, points_per_edge) / (2.0 * kPi * kI);

    std::vector<std::complex<double>> inner_poles;
    std::vector<std::complex<double>> inner_res;
    std::vector<std::complex<double>> dw_at_pole;
    for (std::size_t j = 0; j < f.poles().size(); ++j) {
        const auto p = f.poles()[j];
        if (!box.interior(p)) continue;
        out.residue_sum += f.residues()[j] * w(p);
        inner_poles.push_back(p);
        inner_res.push_back(f.residues()[j]);
    }

    if (area_grid > 0) {
        // singular parts Res dw(p)/(z - p), exactly
        std::complex<double> area{};
        for (std::size_t j = 0; j < inner_poles.size(); ++j) {
            dw_at_pole.push_back(wirtinger(w, inner_poles[j]));
            area += inner_res[j] * dw_at_pole[j] * rect_cauchy_integral(box, inner_poles[j]);
        }
        const double hx = (box.hi.real() - box.lo.real()) / static_cast<double>(area_grid);
        const double hy = (box.hi.imag() - box.lo.imag()) / static_cast<double>(area_grid);
        // 2x2 Gauss-Legendre per cell; symmetric about the grid vertices, so
        // poles placed on vertices are never sampled
        const double g = 0.5 / std::sqrt(3.0);
        const auto remainder_at = [&](std::complex<double> z) {
            // bounded remainder: regular part plus the outer poles, and
            // Res (dw(z) - dw(p))/(z - p) for the inner ones
            std::complex<double> v = f(z) * wirtinger(w, z);
            for (std::size_t j = 0; j < inner_poles.size(); ++j) v -= inner_res[j] * dw_at_pole[j] / (z - inner_poles[j]);
            return v;
        };
        const auto rows = parallel_map(area_grid, [&](std::size_t r) {
            std::complex<double> acc{};
            const double yc = box.lo.imag() + (static_cast<double>(r) + 0.5) * hy;
            for (std::size_t c = 0; c < area_grid; ++c) {
                const double xc = box.lo.real() + (static_cast<double>(c) + 0.5) * hx;
                for (double sy : {-g, g}) {
                    for (double sx : {-g, g}) acc += remainder_at({xc + sx * hx, yc + sy * hy});
                }
            }
            return 0.25 * acc;
        });
        std::complex<double> remainder{};
        for (const auto& r : rows) remainder += r;
        area += remainder * hx * hy;
        out.area_term = area / kPi;
    }
    out.residual = std::abs(out.contour_value - out.residue_sum - out.area_term);
    return out;
}

ConvergenceCheck weighted_residue_convergence(const RationalFn& f, const ComplexFn& w, const Box& box, double tol,
                                              std::size_t points_per_edge, std::size_t area_grid) {
    ConvergenceCheck out;
    out.coarse = weighted_residue_check(f, w, box, points_per_edge, area_grid);
    out.fine = weighted_residue_check(f, w, box, 2 * points_per_edge, 2 * area_grid);
    const bool small = out.coarse.residual <= tol;
    const bool converging = out.fine.residual * 4.0 <= out.coarse.residual;
    const bool at_floor = out.coarse.residual <= kResidueNoiseFloor && out.fine.residual <= kResidueNoiseFloor;
    out.pass = small && (converging || at_floor);
    return out;
}

double fejer_side_series(double x, double y, double T, std::size_t M) {
    if (!(T > 0.0) || !(std::abs(x) <= T)) throw InvalidArgument("fejer_side_series: need |x| <= T");
    double acc = 0.0;
    for (std::size_t m = 1; m < M; m += 2) {
        const double md = static_cast<double>(m);
        const double damp = 1.0 - md / static_cast<double>(M);
        acc += damp * 4.0 * std::sin(md * kPi * y) / (md * kPi) * cosh_ratio(md * kPi * std::abs(x), md * kPi * T);
    }
    return acc;
}

HarmonicMassReport harmonic_side_mass(double T, double y0, double x0, double eta, std::size_t M, double C, std::size_t poisson_grid) {
    if (M < 2) throw InvalidArgument("harmonic_side_mass: need M >= 2");
    const Scaled s = rescale(T, y0, x0, eta);
    HarmonicMassReport rep;
    rep.I = Interval{-T, T};
    rep.y0 = y0;
    rep.x0 = x0;
    rep.eta = eta;
    rep.M = M;

    // side data 1, y and 1 - y expanded in sin(m pi y)
    rep.side_mass = side_series(s, [](std::size_t m) { return m % 2 == 1 ? 4.0 / (static_cast<double>(m) * kPi) : 0.0; });
    rep.side_fejer = fejer_side_series(s.x, s.y, s.T, M);
    rep.side_fejer_half = fejer_side_series(s.x, s.y, s.T, M / 2);
    rep.upper_mass = s.y - side_series(s, [](std::size_t m) {
                         return (m % 2 == 1 ? 2.0 : -2.0) / (static_cast<double>(m) * kPi);
                     });
    rep.lower_mass = (1.0 - s.y) - side_series(s, [](std::size_t m) { return 2.0 / (static_cast<double>(m) * kPi); });
    rep.sum_residual = std::abs(rep.lower_mass + rep.upper_mass + rep.side_mass - 1.0);

    const double dist = T - std::abs(x0);
    rep.side_bound = C * std::exp(-kPi * dist / y0);
    rep.side_bound_ok = rep.side_mass <= rep.side_bound;
    rep.upper_bound_ok = rep.upper_mass <= eta / y0 + 1e-12;
    rep.poisson_bound_ok = poisson_dominance_check(T, y0, x0, eta, poisson_grid).pass;
    return rep;
}

double lower_edge_mass(double T, double y0, double x0, double eta, double c, double d) {
    rescale(T, y0, x0, eta);
    if (!(c < d) || c < -T || d > T) throw InvalidArgument("lower_edge_mass: need -T <= c < d <= T");
    // sine series in x on [-T, T]; phi_k = sin(k pi (x + T)/(2T))
    const double w = kPi / (2.0 * T);
    const double r = std::exp(-w * eta);  // per-k decay of the sinh ratio
    double acc = 0.0;
    for (std::size_t k = 1; k < kMaxSeriesTerms; ++k) {
        const double kd = static_cast<double>(k);
        const double b = 2.0 / (kd * kPi) * (std::cos(kd * w * (c + T)) - std::cos(kd * w * (d + T)));
        const double ratio = sinh_ratio(kd * w * (y0 - eta), kd * w * y0);
        acc += b * std::sin(kd * w * (x0 + T)) * ratio;
        if (4.0 / (kd * kPi) * ratio / (1.0 - r) < 1e-14) return acc;
    }
    throw NumericalError("lower_edge_mass: series did not converge");
}

PoissonDominance poisson_dominance_check(double T, double y0, double x0, double eta, std::size_t grid) {
    rescale(T, y0, x0, eta);
    if (grid < 1) throw InvalidArgument("poisson_dominance_check: grid must be >= 1");
    PoissonDominance out;
    const double h = 2.0 * T / static_cast<double>(grid);
    out.series_mass = parallel_map(grid, [&](std::size_t j) {
        const double c = -T + h * static_cast<double>(j);
        const double d = (j + 1 == grid) ? T : c + h;
        return lower_edge_mass(T, y0, x0, eta, c, d);
    });
    out.worst_excess = -std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < grid; ++j) {
        const double c = -T + h * static_cast<double>(j);
        const double d = (j + 1 == grid) ? T : c + h;
        const double pm = (std::atan((d - x0) / eta) - std::atan((c - x0) / eta)) / kPi;
        out.poisson_mass.push_back(pm);
        out.worst_excess = std::max(out.worst_excess, out.series_mass[j] - pm);
    }
    out.pass = out.worst_excess <= 1e-6;
    return out;
}

}  // namespace interplab
