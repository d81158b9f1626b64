#include "ckosc/cktrig.hpp"

#include <cmath>

namespace ckosc {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::Domain: return "domain";
        case ErrorKind::Pole: return "pole";
        case ErrorKind::OutOfRange: return "out-of-range";
        case ErrorKind::OutOfChart: return "out-of-chart";
        case ErrorKind::SingularChart: return "singular-chart";
        case ErrorKind::UndefinedAngle: return "undefined-angle";
        case ErrorKind::InfiniteWall: return "infinite-wall";
        case ErrorKind::Degenerate: return "degenerate";
        case ErrorKind::NoRealOrbit: return "no-real-orbit";
        case ErrorKind::OutsideBranch: return "outside-branch";
        case ErrorKind::OpenOrbit: return "open-orbit";
        case ErrorKind::EmptyCurve: return "empty-curve";
        case ErrorKind::Unsupported: return "unsupported";
        case ErrorKind::NotPeriodic: return "not-periodic";
        case ErrorKind::Stiffness: return "stiffness";
        case ErrorKind::InvalidArgument: return "invalid-argument";
    }
    return "unknown";
}

double ck_cos(Label label, double x) {
    detail::require_finite(x, "ck_cos argument");
    const double k = label.kappa;
    const double w = k * x * x;
    if (std::abs(w) < kSeriesThreshold) {
        // 1 - w/2 + w^2/24 - w^3/720
        return 1.0 + w * (-0.5 + w * (1.0 / 24.0 + w * (-1.0 / 720.0)));
    }
    if (k > 0.0) return std::cos(std::sqrt(k) * x);
    return std::cosh(std::sqrt(-k) * x);
}

double ck_sin(Label label, double x) {
    detail::require_finite(x, "ck_sin argument");
    const double k = label.kappa;
    const double w = k * x * x;
    if (std::abs(w) < kSeriesThreshold) {
        // x (1 - w/6 + w^2/120 - w^3/5040)
        return x * (1.0 + w * (-1.0 / 6.0 + w * (1.0 / 120.0 + w * (-1.0 / 5040.0))));
    }
    if (k > 0.0) {
        const double rk = std::sqrt(k);
        return std::sin(rk * x) / rk;
    }
    const double rk = std::sqrt(-k);
    return std::sinh(rk * x) / rk;
}

double ck_tan(Label label, double x) {
    const double c = ck_cos(label, x);
    if (std::abs(c) < kPoleEps)
        throw_error(ErrorKind::Pole, "T evaluated at a pole", ck_tan_pole(label.kappa));
    return ck_sin(label, x) / c;
}

double ck_atan(Label label, double t) {
    detail::require_finite(t, "ck_atan argument");
    const double k = label.kappa;
    const double w = k * t * t;
    if (std::abs(w) < kSeriesThreshold) {
        // t (1 - w/3 + w^2/5 - w^3/7)
        return t * (1.0 + w * (-1.0 / 3.0 + w * (0.2 + w * (-1.0 / 7.0))));
    }
    if (k > 0.0) {
        const double rk = std::sqrt(k);
        return std::atan(rk * t) / rk;
    }
    const double rk = std::sqrt(-k);
    if (std::abs(t) * rk >= 1.0)
        throw_error(ErrorKind::OutOfRange,
                    "ck_atan: |t| >= 1/sqrt(-kappa), no real preimage", 1.0 / rk);
    return std::atanh(rk * t) / rk;
}

double ck_asin(Label label, double s) {
    detail::require_finite(s, "ck_asin argument");
    const double k = label.kappa;
    const double w = k * s * s;
    if (std::abs(w) < kSeriesThreshold) {
        // s (1 + w/6 + 3 w^2/40 + 5 w^3/112)
        return s * (1.0 + w * (1.0 / 6.0 + w * (3.0 / 40.0 + w * (5.0 / 112.0))));
    }
    if (k > 0.0) {
        const double rk = std::sqrt(k);
        const double z = rk * s;
        if (std::abs(z) > 1.0) {
            // Tolerate roundoff just past the endpoint; reject anything real.
            if (std::abs(z) > 1.0 + 1e-12)
                throw_error(ErrorKind::OutOfRange,
                            "ck_asin: |s| > 1/sqrt(kappa), no real preimage", 1.0 / rk);
            return std::copysign(M_PI / 2.0 / rk, s);
        }
        return std::asin(z) / rk;
    }
    const double rk = std::sqrt(-k);
    return std::asinh(rk * s) / rk;
}

double ck_tan_pole(double kappa) {
    if (kappa > 0.0) return M_PI / (2.0 * std::sqrt(kappa));
    return std::numeric_limits<double>::infinity();
}

double ck_period(double kappa) {
    if (kappa > 0.0) return 2.0 * M_PI / std::sqrt(kappa);
    return std::numeric_limits<double>::infinity();
}

} // namespace ckosc
