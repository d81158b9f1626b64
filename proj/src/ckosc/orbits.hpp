#pragma once

#include <functional>
#include <optional>

#include "ckosc/dynamics.hpp"

namespace ckosc {

// Closed-form orbit in the Binet variable v = 1/T_k1(r):
//
//   v^2 = 1/T^2_k1(r) = D - G C_k2(2(phi - phi0))
//       = C^2_k2(phi - phi0)/A^2 + S^2_k2(phi - phi0)/B^2
//
// with 1/A^2 = D - G and 1/B^2 = k2 (D + G). In Riemannian spaces G >= 0
// with 0 <= G <= D. In a Lorentzian space C_k2 is a cosh and the two signs
// of G describe the two real branches; orbit_from_ej/orbit_from_state pick
// the branch that actually contains motion, so g may come out negative
// there (|g| is still the nonnegative root of D^2 - w0^2/(k2 J^2)).
struct OrbitSolution {
    double d;
    double g;
    double phi0;
    // Derived constants.
    double a_sq; // A^2 = 1/(D - G)
    double b_sq; // B^2 = 1/(k2 (D + G))
    double e_p;  // E_P = E - 1/2 k1 k2 J^2 = k2 J^2 D
    double e1;   // 2 E1 = w0^2 A^2
    double e2;   // 2 E2 = w0^2 B^2
};

enum class OrbitTag {
    Circle,
    Ellipse,
    Equidistant,
    Ultraellipse,
    StraightLine,
    UnboundedLowJ,   // reserved threshold tag, see classify()
    UnboundedHighJ,  // E = E_inf with J >= J_inf (kappa1 < 0)
    Forbidden,
    LorentzianUnclassified,
};

const char* orbit_tag_name(OrbitTag tag);

struct OrbitClass {
    OrbitTag tag;
    double e_min;                  // E(J), minimum energy at this J (NaN if none)
    double e_inf;                  // plateau energy w0^2/(-2 k1) (kappa1 < 0 only)
    double j_inf;                  // angular momentum scale w0/(sqrt(k2) (-k1))
    std::optional<double> r_m;     // circular radius, when E = E(J)
    std::optional<double> r_min;   // inner turning point
    std::optional<double> r_max;   // outer turning point (absent if unbounded)
};

// V_eff(r) = 1/2 w0^2 T^2(r) + k2 J^2/(2 S^2(r))
//          = 1/2 w0^2 T^2(r) + k2 J^2/(2 T^2(r)) + 1/2 k1 k2 J^2.
double effective_potential(const CKParams& p, const Oscillator& osc, double j, double r);

// Orbit regime for kappa2 > 0, omega0^2 > 0. Threshold comparisons use a
// relative tolerance of 1e-12. kappa2 < 0 returns LorentzianUnclassified
// with the solution machinery still available.
OrbitClass classify(const CKParams& p, const Oscillator& osc, double e, double j);

// Build the orbit constants from (E, J). Requires J != 0, kappa2 != 0 and a
// nonnegative discriminant E_P^2 - k2 w0^2 J^2 (NoRealOrbit otherwise).
OrbitSolution orbit_from_ej(const CKParams& p, const Oscillator& osc, double e, double j,
                            double phi0);

// Fit the orbit through a phase-space state: (E, J) from the conserved
// quantities, phi0 (and the Lorentzian branch) from the state itself.
OrbitSolution orbit_from_state(const CKParams& p, const Oscillator& osc, const PhaseState& s);

// r(phi), or the point-at-infinity marker when a kappa1 < 0 orbit leaves the
// space at this angle (ultraellipse branch).
struct OrbitRadius {
    double r;
    bool at_infinity;
};

OrbitRadius orbit_radius(const CKParams& p, const OrbitSolution& sol, double phi);

// |d^2 v/dphi^2 + k2 v - (w0^2/J^2) v^-3| at phi, with v = 1/T(r(phi)) and
// the second derivative taken by central differences (h = 1e-4).
double binet_residual(const CKParams& p, const Oscillator& osc, double j,
                      const std::function<double(double)>& radius_fn, double phi);

// Residual of the quadratic-form orbit relation built from the Fradkin
// tensor, f22 T^2(u) - 2 f12 T(u) q + f11 q^2 - J^2 with q = T(y)/C(u);
// identically zero along a motion.
double fradkin_orbit_residual(const CKParams& p, const FradkinTensor& f,
                              const ParallelPointUY& at);

// Exact period of the bounded orbits, T = (2 pi/w0) / sqrt(1 + 2 k1 E/w0^2).
// OpenOrbit when the radicand is <= 0 (the E >= E_inf regime).
double period(const CKParams& p, const Oscillator& osc, double e);

// E = E1 + k2 E2 + 1/2 k1 k2 J^2 recovered from the solution's constants.
double orbit_energy(const CKParams& p, const Oscillator& osc, const OrbitSolution& sol,
                    double j);

} // namespace ckosc
