#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace interplab {

/// Real number stored as sign * exp(logmag). Survives magnitudes such as
/// 2^(1-n) for n in the thousands, where plain doubles underflow.
struct SignedLog {
    int sign = 0;  // -1, 0 or +1
    double logmag = -std::numeric_limits<double>::infinity();

    static SignedLog zero() { return {}; }
    static SignedLog from_double(double v);

    [[nodiscard]] bool is_zero() const { return sign == 0; }
    [[nodiscard]] double to_double() const { return sign == 0 ? 0.0 : sign * std::exp(logmag); }
    [[nodiscard]] SignedLog abs() const { return {sign == 0 ? 0 : 1, logmag}; }

    friend SignedLog operator*(SignedLog x, SignedLog y);
    friend SignedLog operator/(SignedLog x, SignedLog y);
    friend SignedLog operator+(SignedLog x, SignedLog y);
    friend SignedLog operator-(SignedLog x) { return {-x.sign, x.logmag}; }
};

/// Complex number stored as exp(logmag) * exp(i * phase), phase in (-pi, pi].
/// logmag == -inf encodes zero.
struct LogComplex {
    double logmag = -std::numeric_limits<double>::infinity();
    double phase = 0.0;

    [[nodiscard]] bool is_zero() const { return std::isinf(logmag) && logmag < 0; }
    [[nodiscard]] std::complex<double> to_complex() const;
    /// Real part as a SignedLog; only meaningful when the phase is 0 or pi.
    [[nodiscard]] SignedLog real_signed() const;

    friend LogComplex operator*(LogComplex x, LogComplex y);
    friend LogComplex operator/(LogComplex x, LogComplex y);
};

/// Wraps an angle into (-pi, pi].
double wrap_phase(double phase);

/// log(sum_k exp(v_k)) without overflow; -inf for an empty or all -inf range.
template <typename Range>
double log_sum_exp(const Range& values) {
    double peak = -std::numeric_limits<double>::infinity();
    for (double v : values) peak = std::max(peak, v);
    if (std::isinf(peak)) return peak;
    double acc = 0.0;
    for (double v : values) acc += std::exp(v - peak);
    return peak + std::log(acc);
}

}  // namespace interplab
