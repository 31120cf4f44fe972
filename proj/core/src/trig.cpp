#include "interplab/trig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "interplab/error.hpp"
#include "interplab/quadrature.hpp"
#include "interplab/rng.hpp"

namespace interplab {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::size_t kDefaultPanelOrder = 16;
}  // namespace

TrigPoly::TrigPoly(std::vector<double> a, std::vector<double> b) : a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != b_.size() + 1) throw InvalidArgument("TrigPoly: need n+1 cosine and n sine coefficients");
}

double TrigPoly::leading_magnitude() const {
    if (b_.empty()) return std::abs(a_[0]);
    return std::hypot(a_.back(), b_.back());
}

double TrigPoly::coefficient_l1() const {
    double s = 0.0;
    for (double v : a_) s += std::abs(v);
    for (double v : b_) s += std::abs(v);
    return s;
}

std::complex<double> TrigPoly::operator()(std::complex<double> z) const {
    std::complex<double> acc{a_[0], 0.0};
    for (std::size_t j = 1; j <= degree(); ++j) {
        const std::complex<double> jz = static_cast<double>(j) * z;
        acc += a_[j] * std::cos(jz) + b_[j - 1] * std::sin(jz);
    }
    return acc;
}

double TrigPoly::operator()(double x) const {
    double acc = a_[0];
    for (std::size_t j = 1; j <= degree(); ++j) {
        const double jx = static_cast<double>(j) * x;
        acc += a_[j] * std::cos(jx) + b_[j - 1] * std::sin(jx);
    }
    return acc;
}

TrigPoly trig_deriv(const TrigPoly& p) {
    const std::size_t n = p.degree();
    std::vector<double> a(n + 1, 0.0);
    std::vector<double> b(n, 0.0);
    for (std::size_t j = 1; j <= n; ++j) {
        const double jj = static_cast<double>(j);
        // d/dx (a cos jx + b sin jx) = j b cos jx - j a sin jx
        a[j] = jj * p.b()[j - 1];
        b[j - 1] = -jj * p.a()[j];
    }
    return TrigPoly(std::move(a), std::move(b));
}

TrigPoly sinusoid(double amplitude, std::size_t n, double x0) {
    std::vector<double> a(n + 1, 0.0);
    std::vector<double> b(n, 0.0);
    const double phase = static_cast<double>(n) * x0;
    if (n == 0) {
        a[0] = amplitude;
        return TrigPoly(std::move(a), std::move(b));
    }
    a[n] = amplitude * std::cos(phase);
    b[n - 1] = amplitude * std::sin(phase);
    return TrigPoly(std::move(a), std::move(b));
}

TrigPoly trig_from_roots(std::span<const double> roots) {
    if (roots.empty() || roots.size() % 2 != 0) throw InvalidArgument("trig_from_roots: need an even, nonzero number of roots");
    if (roots.size() > 2 * kMaxRootExpansionDegree) throw InvalidArgument("trig_from_roots: degree too large for an accurate expansion");
    std::vector<double> sorted(roots.begin(), roots.end());
    for (double& r : sorted) r = std::fmod(std::fmod(r, kTwoPi) + kTwoPi, kTwoPi);
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double gap = (i + 1 < sorted.size()) ? sorted[i + 1] - sorted[i] : sorted.front() + kTwoPi - sorted.back();
        if (sorted.size() > 1 && gap <= 1e-12) throw InvalidArgument("trig_from_roots: duplicate roots");
    }

    // sin((x - r)/2) = (u c - conj(c)/u) / (2i) with u = e^{ix/2}, c = e^{-ir/2}.
    // coeff[m] multiplies u^{2m - N} where N = number of factors so far.
    const std::size_t N = roots.size();
    const std::size_t n = N / 2;
    std::vector<std::complex<double>> coeff{1.0};
    for (double r : roots) {
        const std::complex<double> c = std::polar(1.0, -0.5 * r);
        std::vector<std::complex<double>> next(coeff.size() + 1, 0.0);
        for (std::size_t m = 0; m < coeff.size(); ++m) {
            next[m + 1] += coeff[m] * c;
            next[m] -= coeff[m] * std::conj(c);
        }
        coeff = std::move(next);
    }
    // (2i)^{-2n} = (-4)^{-n}; u^{2m - 2n} = e^{i (m - n) x}
    const double scale = (n % 2 == 0 ? 1.0 : -1.0) * std::pow(0.25, static_cast<double>(n));
    std::vector<double> a(n + 1, 0.0);
    std::vector<double> b(n, 0.0);
    a[0] = scale * coeff[n].real();
    for (std::size_t j = 1; j <= n; ++j) {
        const std::complex<double> d = scale * coeff[n + j];
        a[j] = 2.0 * d.real();
        b[j - 1] = -2.0 * d.imag();
    }
    return TrigPoly(std::move(a), std::move(b));
}

namespace {

double bisect_root(const TrigPoly& p, double lo, double hi, double flo) {
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        const double fm = p(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TrigRoots trig_roots(const TrigPoly& p, bool assume_all_real) {
    const std::size_t n = p.degree();
    if (p.coefficient_l1() == 0.0) throw InvalidArgument("trig_roots: zero polynomial");
    TrigRoots out;
    if (n == 0) return out;
    const std::size_t m = 16 * n;
    const double h = kTwoPi / static_cast<double>(m);
    std::vector<double> xs(m + 1);
    std::vector<double> fs(m + 1);
    double scale = 0.0;
    for (std::size_t j = 0; j <= m; ++j) {
        xs[j] = (j == m) ? kTwoPi : h * static_cast<double>(j);
        fs[j] = (j == m) ? fs[0] : p(xs[j]);
        scale = std::max(scale, std::abs(fs[j]));
    }
    for (std::size_t j = 0; j < m; ++j) {
        if (fs[j] == 0.0) {
            out.roots.push_back(xs[j]);
        } else if (fs[j + 1] != 0.0 && (fs[j] < 0.0) != (fs[j + 1] < 0.0)) {
            out.roots.push_back(bisect_root(p, xs[j], xs[j + 1], fs[j]));
        }
    }
    // near-double roots: a local minimum of |P| that nearly touches zero
    const auto absf = [&](double x) { return -std::abs(p(x)); };
    for (std::size_t j = 0; j < m && assume_all_real; ++j) {
        const double prev = std::abs(fs[(j + m - 1) % m]);
        const double cur = std::abs(fs[j]);
        const double next = std::abs(fs[j + 1]);
        if (cur == 0.0 || !(cur <= prev && cur <= next)) continue;
        if ((fs[(j + m - 1) % m] < 0.0) != (fs[j] < 0.0) || (fs[j] < 0.0) != (fs[j + 1] < 0.0)) continue;
        const double lo = xs[j] - h;
        const Extremum dip = golden_section_max(absf, lo, xs[j] + h, 1e-10);
        if (-dip.value <= 1e-10 * scale) throw NumericalError("trig_roots: near-double root detected");
    }
    for (double& r : out.roots) {
        if (r >= kTwoPi) r -= kTwoPi;
    }
    std::sort(out.roots.begin(), out.roots.end());
    if (assume_all_real && out.roots.size() != 2 * n)
        throw NumericalError("trig_roots: found " + std::to_string(out.roots.size()) + " real roots, expected " +
                             std::to_string(2 * n));
    const TrigPoly dp = trig_deriv(p);
    out.derivatives.reserve(out.roots.size());
    for (double r : out.roots) out.derivatives.push_back(dp(r));
    return out;
}

namespace {

// Integral of |P| over [0, 2pi) with panels split at the given sorted roots.
double abs_integral(const TrigPoly& p, const std::vector<double>& roots) {
    const GaussLegendreRule& rule = gauss_legendre(kDefaultPanelOrder);
    std::vector<double> cuts;
    if (roots.empty()) {
        const std::size_t panels = 2 * p.degree() + 2;
        for (std::size_t i = 0; i <= panels; ++i) cuts.push_back(kTwoPi * static_cast<double>(i) / static_cast<double>(panels));
    } else {
        cuts = roots;
        cuts.push_back(roots.front() + kTwoPi);
    }
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        // two sub-panels per arc
        const double mid = 0.5 * (cuts[i] + cuts[i + 1]);
        total += integrate_panel([&](double x) { return std::abs(p(x)); }, cuts[i], mid, rule);
        total += integrate_panel([&](double x) { return std::abs(p(x)); }, mid, cuts[i + 1], rule);
    }
    return total;
}

}  // namespace

std::pair<double, double> trig_sup_abs(const TrigPoly& p, std::size_t grid) {
    if (grid < 3) throw InvalidArgument("trig_sup_abs: grid too small");
    const double h = kTwoPi / static_cast<double>(grid);
    std::vector<double> v(grid);
    for (std::size_t j = 0; j < grid; ++j) v[j] = std::abs(p(h * static_cast<double>(j)));
    const auto absf = [&](double x) { return std::abs(p(x)); };
    const TrigPoly d1 = trig_deriv(p);
    const TrigPoly d2 = trig_deriv(d1);
    std::pair<double, double> best{0.0, -1.0};
    for (std::size_t j = 0; j < grid; ++j) {
        const double prev = v[(j + grid - 1) % grid];
        const double next = v[(j + 1) % grid];
        if (v[j] < prev || v[j] < next) continue;
        const double x = h * static_cast<double>(j);
        Extremum e = golden_section_max(absf, x - h, x + h, 1e-12);
        // |P| is flat at its max, so golden section only pins x to ~1e-8;
        // polish on P' = 0
        double xn = e.x;
        for (int it = 0; it < 8; ++it) {
            const double c = d2(xn);
            if (c == 0.0) break;
            const double step = d1(xn) / c;
            if (!(std::abs(step) < h)) break;
            xn -= step;
            if (std::abs(step) < 1e-15) break;
        }
        // the polished point wins unless it lost more than roundoff
        if (std::abs(xn - e.x) < h && absf(xn) >= e.value * (1.0 - 1e-14)) e = {xn, absf(xn)};
        if (e.value > best.second) best = {std::fmod(e.x + kTwoPi, kTwoPi), e.value};
    }
    return best;
}

ToyQuantities toy_quantities(const TrigPoly& p) {
    const TrigRoots r = trig_roots(p, true);
    ToyQuantities q;
    for (double d : r.derivatives) q.recip_sum += 1.0 / std::abs(d);
    // |P| is unimodal on each arc between consecutive roots
    const std::size_t m = r.roots.size();
    const auto absf = [&](double x) { return std::abs(p(x)); };
    for (std::size_t i = 0; i < m; ++i) {
        const double lo = r.roots[i];
        const double hi = (i + 1 < m) ? r.roots[i + 1] : r.roots.front() + kTwoPi;
        q.sup_abs = std::max(q.sup_abs, golden_section_max(absf, lo, hi, 1e-12).value);
    }
    q.l1 = abs_integral(p, r.roots);
    q.sup_value = q.sup_abs * q.recip_sum;
    q.integral_value = q.l1 * q.recip_sum;
    return q;
}

double l1_norm(const TrigPoly& p) {
    if (p.degree() == 0) return std::abs(p.a()[0]) * kTwoPi;
    return abs_integral(p, trig_roots(p, false).roots);
}

double recip_deriv_sum(const TrigPoly& p) {
    const TrigRoots r = trig_roots(p, true);
    double s = 0.0;
    for (double d : r.derivatives) s += 1.0 / std::abs(d);
    return s;
}

double fejer_square_wave(double x, std::size_t M, SquareWave variant) {
    if (M == 0) throw InvalidArgument("fejer_square_wave: M must be >= 1");
    double acc = 0.0;
    const double MM = static_cast<double>(M);
    for (std::size_t m = 1; m < M; m += 2) {
        const double mm = static_cast<double>(m);
        const double weight = 1.0 - mm / MM;
        if (variant == SquareWave::Sin) {
            acc += weight * std::sin(mm * x) / mm;
        } else {
            const double sign = ((m - 1) / 2) % 2 == 0 ? 1.0 : -1.0;
            acc += weight * sign * std::cos(mm * x) / mm;
        }
    }
    return 4.0 / std::numbers::pi * acc;
}

AsymptoticCheck leading_asymptotic_check(const TrigPoly& p, double T) {
    if (!(T >= 1.0)) throw InvalidArgument("leading_asymptotic_check: T must be >= 1");
    const std::size_t n = p.degree();
    if (n == 0) throw InvalidArgument("leading_asymptotic_check: degree must be >= 1");
    const double an = p.a()[n];
    const double bn = p.b()[n - 1];
    const std::complex<double> lead{an, -bn};
    const std::size_t grid = 16 * n + 16;
    const double scale = 2.0 * std::exp(-static_cast<double>(n) * T);
    AsymptoticCheck out;
    for (std::size_t j = 0; j < grid; ++j) {
        const double x = kTwoPi * static_cast<double>(j) / static_cast<double>(grid);
        const std::complex<double> approx = lead * std::polar(1.0, -static_cast<double>(n) * x);
        out.residual = std::max(out.residual, std::abs(scale * p({x, T}) - approx));
    }
    out.bound = 2.0 * std::exp(-T) * p.coefficient_l1();
    out.pass = out.residual <= out.bound;
    return out;
}

TrigPoly random_real_rooted(std::size_t degree, std::uint64_t seed) {
    if (degree == 0 || degree > kMaxRootExpansionDegree) throw InvalidArgument("random_real_rooted: degree must be in 1..24");
    Rng rng(seed);
    const std::size_t count = 2 * degree;
    const double spacing = std::numbers::pi / static_cast<double>(degree);
    const double phase = rng.uniform(0.0, kTwoPi);
    std::vector<double> roots(count);
    for (std::size_t k = 0; k < count; ++k) {
        const double jitter = rng.uniform(-0.4, 0.4);
        roots[k] = std::fmod(phase + spacing * (static_cast<double>(k) + 0.5 + jitter), kTwoPi);
    }
    TrigPoly base = trig_from_roots(roots);
    const double amp = rng.uniform(0.5, 2.0) / base.leading_magnitude();
    std::vector<double> a(base.a().begin(), base.a().end());
    std::vector<double> b(base.b().begin(), base.b().end());
    for (double& v : a) v *= amp;
    for (double& v : b) v *= amp;
    return TrigPoly(std::move(a), std::move(b));
}

}  // namespace interplab
