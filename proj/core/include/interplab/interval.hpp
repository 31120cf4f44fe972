#pragma once

#include <string>

#include "interplab/error.hpp"

namespace interplab {

/// Closed real interval [lo, hi].
struct Interval {
    double lo = -1.0;
    double hi = 1.0;

    [[nodiscard]] double length() const { return hi - lo; }
    [[nodiscard]] bool contains(double x) const { return x >= lo && x <= hi; }
    [[nodiscard]] bool within(const Interval& outer) const { return lo >= outer.lo && hi <= outer.hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

inline void require_nondegenerate(const Interval& iv, const char* what) {
    if (!(iv.hi > iv.lo)) throw InvalidArgument(std::string(what) + ": degenerate interval");
}

}  // namespace interplab
