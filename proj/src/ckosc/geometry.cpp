#include "ckosc/geometry.hpp"

#include <cmath>

namespace ckosc {

namespace {

int sign3(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Common inverse step for both parallel charts: given the pair
//   tp = T_k1(r) C_k2(phi),  tq = T_k1(r) S_k2(phi)
// and cr = C_k1(r), recover (r, phi). Uses T^2(r) = tp^2 + k2 tq^2 (from
// C^2 + k S^2 = 1). In the kappa1 < 0 far field the tangent saturates at
// its bound within roundoff, so |r| switches to the cosine relation, which
// stays well conditioned there.
double radius_from_tangent(const CKParams& p, double t_sq, double cr) {
    if (p.kappa1 < 0.0 && t_sq * (-p.kappa1) >= 1.0 - 1e-9)
        return std::acosh(std::max(1.0, cr)) / std::sqrt(-p.kappa1);
    return ck_atan(p.radial(), std::sqrt(std::max(0.0, t_sq)));
}

PolarPoint polar_from_tangent_pair(const CKParams& p, double tp, double tq, double cr) {
    const double k2 = p.kappa2;
    const double t_sq = tp * tp + k2 * tq * tq;

    if (tp == 0.0 && tq == 0.0)
        throw_error(ErrorKind::UndefinedAngle, "polar angle undefined at the origin");

    if (k2 > 0.0) {
        const double rk2 = std::sqrt(k2);
        const double r = radius_from_tangent(p, t_sq, cr);
        const double phi = std::atan2(rk2 * tq, tp) / rk2;
        return {r, phi};
    }
    if (k2 == 0.0) {
        // C_0(phi) = 1: tp already is T(r); S_0(phi) = phi gives phi = tq/tp.
        if (tp == 0.0)
            throw_error(ErrorKind::OutOfChart, "point on the degenerate fibre over the origin");
        const double r = ck_atan(p.radial(), tp);
        return {r, tq / tp};
    }
    // Lorentzian: real r only at time-like separation. r carries the sign of
    // tp; C_k2(phi) = tp/T(r) >= 1 then holds on either wedge.
    if (t_sq <= 0.0)
        throw_error(ErrorKind::OutOfChart,
                    "point not at time-like separation from the origin", t_sq);
    const double r = std::copysign(radius_from_tangent(p, t_sq, cr), tp);
    const double tr = std::copysign(std::sqrt(t_sq), tp);
    const double phi = ck_asin(p.angular(), tq / tr);
    return {r, phi};
}

} // namespace

SpaceKind classify_space(const CKParams& p) {
    const int s1 = sign3(p.kappa1);
    const int s2 = sign3(p.kappa2);
    if (s2 > 0) return s1 > 0 ? SpaceKind::Sphere : (s1 == 0 ? SpaceKind::Euclidean : SpaceKind::Hyperbolic);
    if (s2 == 0) return s1 > 0 ? SpaceKind::CoEuclidean : (s1 == 0 ? SpaceKind::Galilean : SpaceKind::CoMinkowskian);
    return s1 > 0 ? SpaceKind::AntiDeSitter : (s1 == 0 ? SpaceKind::Minkowskian : SpaceKind::DeSitter);
}

const char* space_kind_name(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::Sphere: return "Sphere";
        case SpaceKind::Euclidean: return "Euclidean";
        case SpaceKind::Hyperbolic: return "Hyperbolic";
        case SpaceKind::CoEuclidean: return "Co-Euclidean (oscillating Newton-Hooke)";
        case SpaceKind::Galilean: return "Galilean";
        case SpaceKind::CoMinkowskian: return "Co-Minkowskian (expanding Newton-Hooke)";
        case SpaceKind::AntiDeSitter: return "Anti-de Sitter";
        case SpaceKind::Minkowskian: return "Minkowskian";
        case SpaceKind::DeSitter: return "De Sitter";
    }
    return "unknown";
}

const char* space_short_name(SpaceKind kind) {
    switch (kind) {
        case SpaceKind::Sphere: return "S2";
        case SpaceKind::Euclidean: return "E2";
        case SpaceKind::Hyperbolic: return "H2";
        case SpaceKind::CoEuclidean: return "ANH11";
        case SpaceKind::Galilean: return "G11";
        case SpaceKind::CoMinkowskian: return "NH11";
        case SpaceKind::AntiDeSitter: return "AdS11";
        case SpaceKind::Minkowskian: return "M11";
        case SpaceKind::DeSitter: return "dS11";
    }
    return "unknown";
}

CKParams standard_space(const std::string& name) {
    struct Entry { const char* name; double k1; double k2; };
    static const Entry table[] = {
        {"S2", 1, 1},   {"E2", 0, 1},  {"H2", -1, 1},
        {"ANH11", 1, 0}, {"G11", 0, 0}, {"NH11", -1, 0},
        {"AdS11", 1, -1}, {"M11", 0, -1}, {"dS11", -1, -1},
    };
    for (const auto& e : table)
        if (name == e.name) return CKParams(e.k1, e.k2);
    throw_error(ErrorKind::Unsupported,
                "unknown space '" + name +
                    "'; valid names: S2 E2 H2 ANH11 G11 NH11 AdS11 M11 dS11");
}

Metric2 metric_polar(const CKParams& p, const PolarPoint& at) {
    const double s = ck_sin(p.radial(), at.r);
    return {1.0, p.kappa2 * s * s};
}

Metric2 metric_parallel_uy(const CKParams& p, const ParallelPointUY& at) {
    const double c = ck_cos(p.ortho(), at.y);
    return {c * c, p.kappa2};
}

Metric2 metric_parallel_xv(const CKParams& p, const ParallelPointXV& at) {
    const double c = ck_cos(p.radial(), at.x);
    return {1.0, p.kappa2 * c * c};
}

void check_polar_domain(const CKParams& p, const PolarPoint& pt) {
    if (!std::isfinite(pt.r) || !std::isfinite(pt.phi))
        throw_error(ErrorKind::Domain, "polar coordinates must be finite");
    if (p.kappa1 > 0.0 && std::abs(pt.r) >= M_PI / std::sqrt(p.kappa1))
        throw_error(ErrorKind::OutOfChart, "r outside (0, pi/sqrt(kappa1))",
                    M_PI / std::sqrt(p.kappa1));
}

ParallelPointUY polar_to_parallel_uy(const CKParams& p, const PolarPoint& pt) {
    check_polar_domain(p, pt);
    if (p.kappa1 > 0.0 && std::abs(pt.r) >= ck_tan_pole(p.kappa1))
        throw_error(ErrorKind::OutOfChart,
                    "r beyond pi/(2 sqrt(kappa1)): outside the common chart domain",
                    ck_tan_pole(p.kappa1));
    try {
        const double tr = ck_tan(p.radial(), pt.r);
        const double sr = ck_sin(p.radial(), pt.r);
        const double u = ck_atan(p.radial(), tr * ck_cos(p.angular(), pt.phi));
        const double y = ck_asin(p.ortho(), sr * ck_sin(p.angular(), pt.phi));
        return {u, y};
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::OutOfRange)
            throw_error(ErrorKind::OutOfChart,
                        std::string("point outside the (u,y) chart: ") + e.what());
        throw;
    }
}

PolarPoint parallel_uy_to_polar(const CKParams& p, const ParallelPointUY& pt) {
    const double cu = ck_cos(p.radial(), pt.u);
    if (std::abs(cu) < kPoleEps)
        throw_error(ErrorKind::OutOfChart, "C(u) = 0: point on the far equator");
    const double tp = ck_tan(p.radial(), pt.u);
    const double tq = ck_tan(p.ortho(), pt.y) / cu;
    const double cr = cu * ck_cos(p.ortho(), pt.y);
    return polar_from_tangent_pair(p, tp, tq, cr);
}

ParallelPointXV polar_to_parallel_xv(const CKParams& p, const PolarPoint& pt) {
    check_polar_domain(p, pt);
    try {
        const double sr = ck_sin(p.radial(), pt.r);
        const double tr = ck_tan(p.radial(), pt.r);
        const double x = ck_asin(p.radial(), sr * ck_cos(p.angular(), pt.phi));
        const double v = ck_atan(p.ortho(), tr * ck_sin(p.angular(), pt.phi));
        return {x, v};
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::OutOfRange)
            throw_error(ErrorKind::OutOfChart,
                        std::string("point outside the (x,v) chart: ") + e.what());
        throw;
    }
}

PolarPoint parallel_xv_to_polar(const CKParams& p, const ParallelPointXV& pt) {
    const double cv = ck_cos(p.ortho(), pt.v);
    if (std::abs(cv) < kPoleEps)
        throw_error(ErrorKind::OutOfChart, "C(v) = 0: point on the far equator");
    const double tq = ck_tan(p.ortho(), pt.v);
    const double tp = ck_tan(p.radial(), pt.x) / cv;
    const double cr = cv * ck_cos(p.radial(), pt.x);
    return polar_from_tangent_pair(p, tp, tq, cr);
}

bool points_equal(const CKParams& p, const PolarPoint& a, const PolarPoint& b, double tol) {
    if (std::abs(a.r - b.r) > tol) return false;
    if (std::abs(a.r) <= tol && std::abs(b.r) <= tol) return true; // origin: phi immaterial
    double dphi = a.phi - b.phi;
    if (p.kappa2 > 0.0) {
        const double period = ck_period(p.kappa2);
        dphi = std::remainder(dphi, period);
    }
    return std::abs(dphi) <= tol;
}

KillingFields killing_fields_polar(const CKParams& p, const PolarPoint& at) {
    const double tr = ck_tan(p.radial(), at.r);
    if (std::abs(tr) < kPoleEps)
        throw_error(ErrorKind::SingularChart, "Killing fields singular at r = 0");
    const double cphi = ck_cos(p.angular(), at.phi);
    const double sphi = ck_sin(p.angular(), at.phi);
    KillingFields f;
    f.p1 = {cphi, -sphi / tr};
    f.p2 = {p.kappa2 * sphi, cphi / tr};
    f.j = {0.0, 1.0};
    return f;
}

KillingFields killing_fields_parallel(const CKParams& p, const ParallelPointUY& at) {
    const double cu = ck_cos(p.radial(), at.u);
    const double su = ck_sin(p.radial(), at.u);
    const double ty = ck_tan(p.ortho(), at.y);
    KillingFields f;
    f.p1 = {1.0, 0.0};
    f.p2 = {p.kappa1 * p.kappa2 * su * ty, cu};
    f.j = {-p.kappa2 * cu * ty, su};
    return f;
}

} // namespace ckosc
