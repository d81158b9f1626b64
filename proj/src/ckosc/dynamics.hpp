#pragma once

#include "ckosc/geometry.hpp"

namespace ckosc {

// The curved harmonic oscillator, centred at the chart origin. omega0_sq may
// be negative (inverted oscillator); classification in orbits.hpp is the only
// layer that insists on omega0_sq > 0.
struct Oscillator {
    double omega0_sq;

    explicit Oscillator(double w2) : omega0_sq(w2) {
        if (!std::isfinite(w2))
            throw_error(ErrorKind::Domain, "omega0^2 must be finite");
    }

    double omega0() const { return std::sqrt(omega0_sq); }
};

enum class Chart { Polar, ParallelUY };

// Position + velocity in a named chart: (r, phi, vr, vphi) or (u, y, vu, vy).
struct PhaseState {
    Chart chart;
    double q1, q2, v1, v2;
};

// CK Noether momenta. Finite for every (kappa1, kappa2), including the
// degenerate kappa2 = 0 spaces where the unscaled P2 = k2*P2', J = k2*J'
// vanish identically.
struct NoetherMomenta {
    double p1;
    double p2;
    double j;
};

// Unscaled momenta (P1, P2, J) = (P1', k2 P2', k2 J'); zero when kappa2 = 0.
inline NoetherMomenta unscaled_momenta(const CKParams& p, const NoetherMomenta& m) {
    return {m.p1, p.kappa2 * m.p2, p.kappa2 * m.j};
}

// Quadratic constants of the motion: f11 = P1^2 + W11, f12 = P1 P2 + W12,
// f22 = P2^2 + W22, plus j_sq = J^2. Satisfies f11 f22 - f12^2 = w0^2 j_sq.
struct FradkinTensor {
    double f11;
    double f12;
    double f22;
    double j_sq;

    double det() const { return f11 * f22 - f12 * f12; }
};

// V = 1/2 w0^2 T^2_k1(r). InfiniteWall at the pole of T (kappa1 > 0 equator).
double ho_potential(const CKParams& p, const Oscillator& osc, const PolarPoint& at);

// Separated form V = 1/2 w0^2 [T^2_k1(u)/C^2_k1k2(y) + k2 T^2_k1k2(y)];
// equals ho_potential at the converted point.
double ho_potential_parallel(const CKParams& p, const Oscillator& osc, const ParallelPointUY& at);

struct Accel2 {
    double a1;
    double a2;
};

// Euler-Lagrange accelerations in the state's own chart.
// Polar:    r''   = k2 S(r) C(r) phi'^2 - w0^2 T(r)/C^2(r)
//           phi'' = -2 (C(r)/S(r)) r' phi'
// Parallel: u''   = 2 k1 k2 T(y) u' y' - w0^2 T(u) / (C^2(u) C^4(y))
//           y''   = -k1 S(y) C(y) u'^2 - w0^2 [k1 T^2(u) S(y)/C^3(y) + T(y)/C^2(y)]
// (y-functions carry the k1 k2 label). States with vphi = 0 are accepted at
// any r; S(r) = 0 with vphi != 0 is chart-singular.
Accel2 accelerations(const CKParams& p, const Oscillator& osc, const PhaseState& s);

NoetherMomenta noether_momenta(const CKParams& p, const PhaseState& s);

// I_E = 1/2 (P1^2 + k2 P2^2 + k1 k2 J^2) + V.
double energy(const CKParams& p, const Oscillator& osc, const PhaseState& s);

FradkinTensor fradkin(const CKParams& p, const Oscillator& osc, const PhaseState& s);

// Kinetic energy via the metric, 1/2 (g11 v1^2 + g22 v2^2); used by the
// kinetic-identity checks.
double kinetic_energy_metric(const CKParams& p, const PhaseState& s);

// Chart change for full states; positions via the trigonometric relations,
// velocities via the closed-form Jacobian.
PhaseState convert_state(const CKParams& p, const PhaseState& s, Chart target);

// Sign of dr/dt times a positive factor, valid in either chart; the
// integrator's radial turning events locate its zero crossings.
double radial_expansion_rate(const CKParams& p, const PhaseState& s);

// Polar position of a state in either chart.
PolarPoint polar_position(const CKParams& p, const PhaseState& s);

} // namespace ckosc
