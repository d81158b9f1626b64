#pragma once

#include <optional>

#include "ckosc/dynamics.hpp"

namespace ckosc {

enum class ConicKind { Circle, Ellipse, Ultraellipse, Equidistant, Line };
enum class MajorKind { Semiaxis, UltraSemiaxis, Infinite };

const char* conic_kind_name(ConicKind k);

// Orbit conic in intrinsic terms. `major` holds the geodesic semiaxis a, or
// the ultraellipse 'semiaxis' a~ (major_kind UltraSemiaxis), or +inf for the
// equidistant limit. b is the minor semiaxis, a kappa1*kappa2-labelled
// length. Focal separation is attached for Riemannian ellipses only, as
// descriptive output.
struct ConicGeometry {
    ConicKind kind;
    MajorKind major_kind;
    double major;
    double b;
    std::optional<double> focal_half_separation;
};

ConicGeometry equidistant_at(double b);
ConicGeometry circle_at(double r_m);

// Identify the conic with orbit constants (A^2, B^2), using T_k1(a) = A,
// T_k1k2(b) = B, and for kappa1 < 0 the branch rules at the tangent bound:
// ellipse below it, equidistant on it, ultraellipse above it with
// 1/(-k1 T_k1(a~)) = A. Requires kappa2 > 0 and the a >= b axis convention
// (equivalent to A >= B when kappa2 = 1). Boundary comparisons use a
// relative tolerance of 1e-12.
ConicGeometry conic_from_AB(const CKParams& p, double a_sq, double b_sq);

struct PhysicalConstants {
    double e1; // 1/2 w0^2 A^2
    double e2; // 1/2 w0^2 B^2
    double j;  // w0 A B  (nonnegative representative)
    double e;  // E1 + k2 E2 + 1/2 k1 k2 J^2
};

// Energy/momentum content of a conic orbit; inverse of the orbit_from_ej ->
// conic_from_AB chain. Equidistants return E = E_inf exactly; lines return
// J = 0 with all the energy in the a-branch.
PhysicalConstants physical_from_conic(const CKParams& p, const Oscillator& osc,
                                      const ConicGeometry& c);

} // namespace ckosc
