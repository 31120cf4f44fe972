#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "interplab/bernstein.hpp"
#include "interplab/complexint.hpp"
#include "interplab/nodes.hpp"
#include "interplab/trig.hpp"

// Seeded test populations shared by verify-all, the subcommands and the
// acceptance tests.
namespace interplab::tools {

/// chebyshev(n), 10 jittered copies of it and 10 uniform random sets.
std::vector<NodeSet> sup_battery_full(std::size_t n, std::uint64_t seed);
/// 3 jittered Chebyshev sets and 2 uniform random sets.
std::vector<NodeSet> sup_battery_subinterval(std::size_t n, std::uint64_t seed);

struct TrigRecord {
    std::uint64_t seed = 0;
    std::size_t degree = 0;
    double sup = 0.0;
    double integral = 0.0;
    double l1 = 0.0;
    double recip = 0.0;
    double leading = 0.0;  // |a_n + i b_n|
    bool pass = false;

    [[nodiscard]] double l1_ratio() const { return l1 / (4.0 * leading); }
    [[nodiscard]] double recip_ratio() const { return recip * leading / 2.0; }
};

TrigRecord trig_record(const TrigPoly& p, std::uint64_t seed);

/// Trial i uses seed + i and degree 1 + i % max_degree.
std::vector<TrigRecord> trig_battery(std::size_t trials, std::size_t max_degree, std::uint64_t seed);

/// One sinusoid per degree 1..max_degree with seeded amplitude and phase.
std::vector<TrigRecord> sinusoid_battery(std::size_t max_degree, std::uint64_t seed);

struct DsMember {
    TrigPoly p;
    bool sinusoid = false;
};

/// Every tenth member is a sinusoid, the rest are random real-rooted.
std::vector<DsMember> ds_battery(std::size_t trials, std::uint64_t seed);

struct QProbe {
    std::size_t n = 0;
    double xstar = 0.0;
    double rho = 0.0;
    double lambda = 0.0;  // measured from the upper edge
    double r1 = 0.0;      // |Q'(0)| / (A lambda)
    double r1_sup = 0.0;  // max_{|x| <= 1} |Q'(x)| / pi
    BernsteinReport report;
};

/// Local maximizer of |P| for chebyshev(n) in the node gap around x.
double local_argmax_abs_P(const NodeSet& nodes, double x);

/// Q from chebyshev(n) at the maximizer of |P| nearest 0, on R+([-20, 20], 2).
QProbe rescaled_q_probe(std::size_t n, double c1 = 10.0, double c2 = 10.0);

struct ResidueCase {
    std::string name;
    RationalFn f;
    ComplexFn w;
    Box box;
};

/// w in {1, z^2, conj z, |z|^2, conj(z)^2} times f with 1, 2 and 3 simple
/// poles on [-1, 1]^2. Poles sit on vertices of every even area grid.
std::vector<ResidueCase> residue_battery();

struct HarmonicParams {
    double T;
    double y0;
    double x0;
    double eta;
};

std::vector<HarmonicParams> harmonic_sweep();

/// max over n <= 20, k and sample x of |barycentric - direct product| / max(1, |direct|).
double barycentric_direct_gap(std::uint64_t seed);
/// max root error of trig_roots(trig_from_roots(R)) over degrees 1..10.
double trig_round_trip_error(std::uint64_t seed);
/// max |density_estimate - (-dU/deta)/pi| with a central difference, chebyshev(100).
double density_derivative_gap();

}  // namespace interplab::tools
