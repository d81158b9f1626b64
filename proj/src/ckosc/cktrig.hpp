#pragma once

#include <cmath>
#include <limits>

#include "ckosc/errors.hpp"

namespace ckosc {

// Labelled trigonometry. For a real label kappa:
//
//   C_k(x) = cos(sqrt(k) x)            S_k(x) = sin(sqrt(k) x)/sqrt(k)    k > 0
//   C_0(x) = 1                         S_0(x) = x                         k = 0
//   C_k(x) = cosh(sqrt(-k) x)          S_k(x) = sinh(sqrt(-k) x)/sqrt(-k) k < 0
//
// together with T_k = S_k/C_k and the inverses. They satisfy
// C_k^2 + k S_k^2 = 1, d/dx C_k = -k S_k, d/dx S_k = C_k, d/dx T_k = 1/C_k^2.
//
// Near k x^2 = 0 the sqrt(k) branches cancel catastrophically, so all
// evaluations switch to a 4-term series in w = k x^2 below kSeriesThreshold.
// This keeps every function continuous across the k = 0 seam.

inline constexpr double kSeriesThreshold = 1e-8;

// Tolerance below which |C_k(x)| counts as a pole of T_k. The cosine of a
// floating-point approximation of pi/2 is ~6e-17, never exactly zero, so an
// exact-zero test would let T blow up silently instead of reporting the wall.
inline constexpr double kPoleEps = 1e-12;

// A validated curvature/signature label (kappa1, kappa2, or kappa1*kappa2).
struct Label {
    double kappa;

    explicit Label(double k) : kappa(k) {
        if (!std::isfinite(k))
            throw_error(ErrorKind::Domain, "trig label must be finite");
    }
};

namespace detail {

inline void require_finite(double x, const char* what) {
    if (!std::isfinite(x))
        throw_error(ErrorKind::Domain, std::string(what) + " must be finite", x);
}

} // namespace detail

double ck_cos(Label label, double x);
double ck_sin(Label label, double x);

// S_k/C_k; throws Pole (detail = pole location) when |C_k(x)| < kPoleEps.
double ck_tan(Label label, double x);

// Principal (odd) inverse of T_k: the unique x with T_k(x) = t and
// |x| < pi/(2 sqrt(k)) for k > 0. For k < 0 requires |t| < 1/sqrt(-k)
// (OutOfRange otherwise; that failure is meaningful to conic callers).
// Callers that need another branch add multiples of pi/sqrt(k) themselves.
double ck_atan(Label label, double t);

// Principal (odd) inverse of S_k; OutOfRange when k > 0 and |s| > 1/sqrt(k).
double ck_asin(Label label, double s);

// Location of the first positive pole of T_k (pi/(2 sqrt(k)) for k > 0,
// +infinity otherwise).
double ck_tan_pole(double kappa);

// Full angular period 2 pi/sqrt(k) for k > 0, +infinity otherwise.
double ck_period(double kappa);

// Derivatives, via the closed identities.
inline double ck_cos_deriv(Label label, double x) { return -label.kappa * ck_sin(label, x); }
inline double ck_sin_deriv(Label label, double x) { return ck_cos(label, x); }

inline double ck_tan_deriv(Label label, double x) {
    const double c = ck_cos(label, x);
    if (std::abs(c) < kPoleEps)
        throw_error(ErrorKind::Pole, "T' undefined at a pole of T", ck_tan_pole(label.kappa));
    return 1.0 / (c * c);
}

} // namespace ckosc
