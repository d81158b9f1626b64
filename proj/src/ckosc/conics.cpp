#include "ckosc/conics.hpp"

#include <cmath>

namespace ckosc {

namespace {

constexpr double kRelTol = 1e-12;

bool nearly(double a, double b) {
    return std::abs(a - b) <= kRelTol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Focal half-separation of a Riemannian ellipse from C(f) = C(a)/C(b),
// the right-triangle relation at the minor vertex.
double focal_half_separation(const CKParams& p, double a, double b) {
    if (std::abs(p.kappa1) < 1e-12)
        return std::sqrt(std::max(0.0, a * a - p.kappa2 * b * b));
    const double ca = ck_cos(p.radial(), a);
    const double cb = ck_cos(p.ortho(), b);
    const double t2 = (cb * cb / (ca * ca) - 1.0) / p.kappa1;
    return ck_atan(p.radial(), std::sqrt(std::max(0.0, t2)));
}

} // namespace

const char* conic_kind_name(ConicKind k) {
    switch (k) {
        case ConicKind::Circle: return "Circle";
        case ConicKind::Ellipse: return "Ellipse";
        case ConicKind::Ultraellipse: return "Ultraellipse";
        case ConicKind::Equidistant: return "Equidistant";
        case ConicKind::Line: return "Line";
    }
    return "unknown";
}

ConicGeometry equidistant_at(double b) {
    return {ConicKind::Equidistant, MajorKind::Infinite,
            std::numeric_limits<double>::infinity(), b, std::nullopt};
}

ConicGeometry circle_at(double r_m) {
    return {ConicKind::Circle, MajorKind::Semiaxis, r_m, r_m, std::nullopt};
}

ConicGeometry conic_from_AB(const CKParams& p, double a_sq, double b_sq) {
    if (!(p.kappa2 > 0.0))
        throw_error(ErrorKind::Unsupported, "conic identification requires kappa2 > 0");
    if (!(b_sq > 0.0))
        throw_error(ErrorKind::Domain, "B^2 must be positive", b_sq);
    if (!(a_sq > 0.0))
        throw_error(ErrorKind::Domain, "A^2 must be positive", a_sq);

    const double A = std::sqrt(a_sq);
    const double B = std::sqrt(b_sq);

    if (p.kappa1 >= 0.0) {
        const double a = ck_atan(p.radial(), A);
        const double b = ck_atan(p.ortho(), B);
        if (a < b && !nearly(a, b))
            throw_error(ErrorKind::InvalidArgument,
                        "axis convention violated: major semiaxis below minor");
        ConicGeometry c;
        c.kind = nearly(a, b) ? ConicKind::Circle : ConicKind::Ellipse;
        c.major_kind = MajorKind::Semiaxis;
        c.major = a;
        c.b = b;
        c.focal_half_separation = focal_half_separation(p, a, b);
        return c;
    }

    const double bound_a = 1.0 / std::sqrt(-p.kappa1);
    const double bound_b = 1.0 / std::sqrt(-p.kappa1 * p.kappa2);
    if (B > bound_b || nearly(B, bound_b))
        throw_error(ErrorKind::EmptyCurve,
                    "both tangent values at or beyond the bound: the curve is empty",
                    bound_b);
    const double b = ck_atan(p.ortho(), B);

    if (nearly(A, bound_a)) {
        ConicGeometry c = equidistant_at(b);
        return c;
    }
    if (A < bound_a) {
        const double a = ck_atan(p.radial(), A);
        if (a < b && !nearly(a, b))
            throw_error(ErrorKind::InvalidArgument,
                        "axis convention violated: major semiaxis below minor");
        ConicGeometry c;
        c.kind = nearly(a, b) ? ConicKind::Circle : ConicKind::Ellipse;
        c.major_kind = MajorKind::Semiaxis;
        c.major = a;
        c.b = b;
        c.focal_half_separation = focal_half_separation(p, a, b);
        return c;
    }
    // Ultraellipse: 1/(-k1 T(a~)) = A.
    const double a_tilde = ck_atan(p.radial(), 1.0 / (-p.kappa1 * A));
    ConicGeometry c;
    c.kind = ConicKind::Ultraellipse;
    c.major_kind = MajorKind::UltraSemiaxis;
    c.major = a_tilde;
    c.b = b;
    c.focal_half_separation = std::nullopt;
    return c;
}

PhysicalConstants physical_from_conic(const CKParams& p, const Oscillator& osc,
                                      const ConicGeometry& c) {
    if (!(p.kappa2 > 0.0))
        throw_error(ErrorKind::Unsupported, "conic constants require kappa2 > 0");
    if (!(osc.omega0_sq > 0.0))
        throw_error(ErrorKind::Unsupported, "conic constants require omega0^2 > 0");
    const double w0 = osc.omega0();
    const double w2 = osc.omega0_sq;

    double A;
    switch (c.major_kind) {
        case MajorKind::Semiaxis:
            A = ck_tan(p.radial(), c.major);
            break;
        case MajorKind::UltraSemiaxis: {
            if (!(p.kappa1 < 0.0))
                throw_error(ErrorKind::Unsupported, "ultraellipse requires kappa1 < 0");
            const double t = ck_tan(p.radial(), c.major);
            if (t == 0.0)
                throw_error(ErrorKind::Domain,
                            "zero ultraellipse semiaxis: infinite-energy line limit");
            A = 1.0 / (-p.kappa1 * t);
            break;
        }
        case MajorKind::Infinite:
            if (!(p.kappa1 < 0.0))
                throw_error(ErrorKind::Unsupported, "equidistant limit requires kappa1 < 0");
            A = 1.0 / std::sqrt(-p.kappa1);
            break;
        default:
            throw_error(ErrorKind::InvalidArgument, "bad conic");
    }

    if (c.kind == ConicKind::Line) {
        const double e1 = 0.5 * w2 * A * A;
        return {e1, 0.0, 0.0, e1};
    }

    const double B = ck_tan(p.ortho(), c.b);
    PhysicalConstants out;
    out.e1 = 0.5 * w2 * A * A;
    out.e2 = 0.5 * w2 * B * B;
    out.j = w0 * A * B;
    out.e = out.e1 + p.kappa2 * out.e2 + 0.5 * p.kappa1 * p.kappa2 * out.j * out.j;
    return out;
}

} // namespace ckosc
