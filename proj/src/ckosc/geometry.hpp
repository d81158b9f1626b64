#pragma once

#include <array>
#include <string>

#include "ckosc/cktrig.hpp"

namespace ckosc {

// The two-parameter family of constant-curvature spaces: kappa1 is the
// curvature, kappa2 the signature parameter (positive Riemannian, zero
// degenerate, negative Lorentzian). Coordinate labels used throughout:
// r, u, x carry kappa1; phi carries kappa2; y, v carry kappa1*kappa2.
struct CKParams {
    double kappa1;
    double kappa2;

    CKParams(double k1, double k2) : kappa1(k1), kappa2(k2) {
        if (!std::isfinite(k1) || !std::isfinite(k2))
            throw_error(ErrorKind::Domain, "CK parameters must be finite");
    }

    Label radial() const { return Label(kappa1); }   // r, u, x
    Label angular() const { return Label(kappa2); }  // phi
    Label ortho() const { return Label(kappa1 * kappa2); } // y, v
};

// The nine standard spaces, keyed purely by the signs of (kappa1, kappa2).
enum class SpaceKind {
    Sphere,         // (+,+)
    Euclidean,      // (0,+)
    Hyperbolic,     // (-,+)
    CoEuclidean,    // (+,0)  oscillating Newton-Hooke
    Galilean,       // (0,0)
    CoMinkowskian,  // (-,0)  expanding Newton-Hooke
    AntiDeSitter,   // (+,-)
    Minkowskian,    // (0,-)
    DeSitter,       // (-,-)
};

SpaceKind classify_space(const CKParams& p);
const char* space_kind_name(SpaceKind kind);

// Canonical CLI name (S2, E2, H2, ANH11, G11, NH11, AdS11, M11, dS11) and
// its inverse; lookup throws Unsupported listing the valid names.
const char* space_short_name(SpaceKind kind);
CKParams standard_space(const std::string& name);

// Geodesic polar coordinates. phi is stored unwrapped (winding matters for
// period detection); modular identification is applied only in points_equal.
struct PolarPoint {
    double r;
    double phi;
};

// Geodesic parallel coordinates relative to (O, l1): u along the base
// geodesic l1, y along the orthogonal geodesic through the foot point.
struct ParallelPointUY {
    double u;
    double y;
};

// The complementary parallel system relative to (O, l2).
struct ParallelPointXV {
    double x;
    double v;
};

struct Metric2 {
    double g11;
    double g22;
};

// ds^2 = dr^2 + kappa2 S^2_k1(r) dphi^2
Metric2 metric_polar(const CKParams& p, const PolarPoint& at);
// ds^2 = C^2_k1k2(y) du^2 + kappa2 dy^2
Metric2 metric_parallel_uy(const CKParams& p, const ParallelPointUY& at);
// ds^2 = dx^2 + kappa2 C^2_k1(x) dv^2
Metric2 metric_parallel_xv(const CKParams& p, const ParallelPointXV& at);

// Chart conversions, from the trigonometric relations
//   T_k1(u) = T_k1(r) C_k2(phi)
//   S_k1k2(y) = S_k1(r) S_k2(phi)
//   C_k1(u) C_k1k2(y) = C_k1(r)
// and their (x,v) mirror images
//   S_k1(x) = S_k1(r) C_k2(phi)
//   T_k1k2(v) = T_k1(r) S_k2(phi)
//   C_k1(x) C_k1k2(v) = C_k1(r).
ParallelPointUY polar_to_parallel_uy(const CKParams& p, const PolarPoint& pt);
PolarPoint parallel_uy_to_polar(const CKParams& p, const ParallelPointUY& pt);
ParallelPointXV polar_to_parallel_xv(const CKParams& p, const PolarPoint& pt);
PolarPoint parallel_xv_to_polar(const CKParams& p, const ParallelPointXV& pt);

// Equality of configurations: for kappa2 > 0 physical points identify
// phi mod 2 pi/sqrt(kappa2).
bool points_equal(const CKParams& p, const PolarPoint& a, const PolarPoint& b, double tol);

// Tangent vector in chart components.
struct Tangent2 {
    double c1;
    double c2;
};

struct KillingFields {
    Tangent2 p1; // translation along l1
    Tangent2 p2; // translation along l2
    Tangent2 j;  // rotation about O
};

// Polar components:
//   X_P1 = (C_k2(phi), -S_k2(phi)/T_k1(r))
//   X_P2 = (k2 S_k2(phi), C_k2(phi)/T_k1(r))
//   X_J  = (0, 1)
// Singular at r = 0.
KillingFields killing_fields_polar(const CKParams& p, const PolarPoint& at);

// Parallel components:
//   X_P1 = (1, 0)
//   X_P2 = (k1 k2 S_k1(u) T_k1k2(y), C_k1(u))
//   X_J  = (-k2 C_k1(u) T_k1k2(y), S_k1(u))
// Regular at the origin; pole where C_k1k2(y) = 0.
KillingFields killing_fields_parallel(const CKParams& p, const ParallelPointUY& at);

// Chart-domain guard for polar coordinates: kappa1 > 0 restricts r to
// (0, pi/sqrt(kappa1)); conversions additionally need r below the first
// tangent pole. Throws OutOfChart on violation.
void check_polar_domain(const CKParams& p, const PolarPoint& pt);

} // namespace ckosc
