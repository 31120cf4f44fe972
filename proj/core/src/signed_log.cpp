#include "interplab/signed_log.hpp"

#include <numbers>

namespace interplab {

SignedLog SignedLog::from_double(double v) {
    if (v == 0.0) return zero();
    return {v > 0 ? 1 : -1, std::log(std::abs(v))};
}

SignedLog operator*(SignedLog x, SignedLog y) {
    if (x.sign == 0 || y.sign == 0) return SignedLog::zero();
    return {x.sign * y.sign, x.logmag + y.logmag};
}

SignedLog operator/(SignedLog x, SignedLog y) {
    if (y.sign == 0) return {x.sign, std::numeric_limits<double>::infinity()};
    if (x.sign == 0) return SignedLog::zero();
    return {x.sign * y.sign, x.logmag - y.logmag};
}

SignedLog operator+(SignedLog x, SignedLog y) {
    if (x.sign == 0) return y;
    if (y.sign == 0) return x;
    // pivot on the larger magnitude
    if (y.logmag > x.logmag) std::swap(x, y);
    const double ratio = std::exp(y.logmag - x.logmag);
    const double scaled = 1.0 + (x.sign == y.sign ? ratio : -ratio);
    if (scaled == 0.0) return SignedLog::zero();
    return {x.sign, x.logmag + std::log(scaled)};
}

double wrap_phase(double phase) {
    constexpr double pi = std::numbers::pi;
    double r = std::remainder(phase, 2.0 * pi);  // in [-pi, pi]
    if (r <= -pi) r += 2.0 * pi;
    return r;
}

std::complex<double> LogComplex::to_complex() const {
    if (is_zero()) return {0.0, 0.0};
    return std::polar(std::exp(logmag), phase);
}

SignedLog LogComplex::real_signed() const {
    if (is_zero()) return SignedLog::zero();
    return {std::cos(phase) >= 0.0 ? 1 : -1, logmag};
}

LogComplex operator*(LogComplex x, LogComplex y) {
    if (x.is_zero() || y.is_zero()) return {};
    return {x.logmag + y.logmag, wrap_phase(x.phase + y.phase)};
}

LogComplex operator/(LogComplex x, LogComplex y) {
    if (x.is_zero()) return {};
    return {x.logmag - y.logmag, wrap_phase(x.phase - y.phase)};
}

}  // namespace interplab
