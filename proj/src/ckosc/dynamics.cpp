#include "ckosc/dynamics.hpp"

#include <cmath>

namespace ckosc {

namespace {

// Trig bundle for a polar state.
struct PolarTrig {
    double cr, sr, tr, cphi, sphi;
};

PolarTrig polar_trig(const CKParams& p, double r, double phi) {
    return {ck_cos(p.radial(), r), ck_sin(p.radial(), r), 0.0,
            ck_cos(p.angular(), phi), ck_sin(p.angular(), phi)};
}

// Trig bundle for a parallel state.
struct ParallelTrig {
    double cu, su, cy, sy;
};

ParallelTrig parallel_trig(const CKParams& p, double u, double y) {
    return {ck_cos(p.radial(), u), ck_sin(p.radial(), u),
            ck_cos(p.ortho(), y), ck_sin(p.ortho(), y)};
}

void check_wall(double c, const char* coord, double wall) {
    if (std::abs(c) < kPoleEps)
        throw_error(ErrorKind::InfiniteWall,
                    std::string("potential wall reached in ") + coord, wall);
}

} // namespace

double ho_potential(const CKParams& p, const Oscillator& osc, const PolarPoint& at) {
    const double c = ck_cos(p.radial(), at.r);
    check_wall(c, "r", ck_tan_pole(p.kappa1));
    const double t = ck_sin(p.radial(), at.r) / c;
    return 0.5 * osc.omega0_sq * t * t;
}

double ho_potential_parallel(const CKParams& p, const Oscillator& osc, const ParallelPointUY& at) {
    const auto g = parallel_trig(p, at.u, at.y);
    check_wall(g.cu, "u", ck_tan_pole(p.kappa1));
    if (std::abs(g.cy) < kPoleEps)
        throw_error(ErrorKind::InfiniteWall, "C(y) = 0: chart pole in y",
                    ck_tan_pole(p.kappa1 * p.kappa2));
    const double tu = g.su / g.cu;
    const double ty = g.sy / g.cy;
    return 0.5 * osc.omega0_sq * (tu * tu / (g.cy * g.cy) + p.kappa2 * ty * ty);
}

Accel2 accelerations(const CKParams& p, const Oscillator& osc, const PhaseState& s) {
    if (s.chart == Chart::Polar) {
        const auto g = polar_trig(p, s.q1, s.q2);
        check_wall(g.cr, "r", ck_tan_pole(p.kappa1));
        const double dV = osc.omega0_sq * (g.sr / g.cr) / (g.cr * g.cr);
        const double a_r = p.kappa2 * g.sr * g.cr * s.v2 * s.v2 - dV;
        double a_phi = 0.0;
        if (s.v2 != 0.0) {
            if (std::abs(g.sr) < kPoleEps)
                throw_error(ErrorKind::SingularChart,
                            "polar chart singular at r = 0 with vphi != 0");
            a_phi = -2.0 * (g.cr / g.sr) * s.v1 * s.v2;
        }
        return {a_r, a_phi};
    }

    const auto g = parallel_trig(p, s.q1, s.q2);
    check_wall(g.cu, "u", ck_tan_pole(p.kappa1));
    if (std::abs(g.cy) < kPoleEps)
        throw_error(ErrorKind::SingularChart, "C(y) = 0: parallel chart degenerate");
    const double tu = g.su / g.cu;
    const double ty = g.sy / g.cy;
    const double cy2 = g.cy * g.cy;
    const double w2 = osc.omega0_sq;
    const double a_u = 2.0 * p.kappa1 * p.kappa2 * ty * s.v1 * s.v2
                       - w2 * tu / (g.cu * g.cu * cy2 * cy2);
    const double a_y = -p.kappa1 * g.sy * g.cy * s.v1 * s.v1
                       - w2 * (p.kappa1 * tu * tu * g.sy / (cy2 * g.cy) + ty / cy2);
    return {a_u, a_y};
}

NoetherMomenta noether_momenta(const CKParams& p, const PhaseState& s) {
    if (s.chart == Chart::Polar) {
        const auto g = polar_trig(p, s.q1, s.q2);
        NoetherMomenta m;
        m.p1 = g.cphi * s.v1 - p.kappa2 * g.cr * g.sr * g.sphi * s.v2;
        m.p2 = g.sphi * s.v1 + g.cr * g.sr * g.cphi * s.v2;
        m.j = g.sr * g.sr * s.v2;
        return m;
    }
    const auto g = parallel_trig(p, s.q1, s.q2);
    NoetherMomenta m;
    m.p1 = g.cy * g.cy * s.v1;
    m.p2 = p.kappa1 * g.su * g.sy * g.cy * s.v1 + g.cu * s.v2;
    m.j = -g.cu * g.sy * g.cy * s.v1 + g.su * s.v2;
    return m;
}

double energy(const CKParams& p, const Oscillator& osc, const PhaseState& s) {
    const NoetherMomenta m = noether_momenta(p, s);
    const double kin = 0.5 * (m.p1 * m.p1 + p.kappa2 * m.p2 * m.p2 +
                              p.kappa1 * p.kappa2 * m.j * m.j);
    const double pot = s.chart == Chart::Polar
                           ? ho_potential(p, osc, {s.q1, s.q2})
                           : ho_potential_parallel(p, osc, {s.q1, s.q2});
    return kin + pot;
}

FradkinTensor fradkin(const CKParams& p, const Oscillator& osc, const PhaseState& s) {
    const NoetherMomenta m = noether_momenta(p, s);
    const double w2 = osc.omega0_sq;
    double w11, w12, w22;
    if (s.chart == Chart::Polar) {
        const auto g = polar_trig(p, s.q1, s.q2);
        check_wall(g.cr, "r", ck_tan_pole(p.kappa1));
        const double t = g.sr / g.cr;
        w11 = w2 * t * t * g.cphi * g.cphi;
        w22 = w2 * t * t * g.sphi * g.sphi;
        w12 = w2 * t * t * g.cphi * g.sphi;
    } else {
        const auto g = parallel_trig(p, s.q1, s.q2);
        check_wall(g.cu, "u", ck_tan_pole(p.kappa1));
        if (std::abs(g.cy) < kPoleEps)
            throw_error(ErrorKind::InfiniteWall, "C(y) = 0: chart pole in y");
        const double tu = g.su / g.cu;
        const double ty_over_cu = (g.sy / g.cy) / g.cu;
        w11 = w2 * tu * tu;
        w22 = w2 * ty_over_cu * ty_over_cu;
        w12 = w2 * tu * ty_over_cu;
    }
    FradkinTensor f;
    f.f11 = m.p1 * m.p1 + w11;
    f.f22 = m.p2 * m.p2 + w22;
    f.f12 = m.p1 * m.p2 + w12;
    f.j_sq = m.j * m.j;
    return f;
}

double kinetic_energy_metric(const CKParams& p, const PhaseState& s) {
    const Metric2 g = s.chart == Chart::Polar
                          ? metric_polar(p, {s.q1, s.q2})
                          : metric_parallel_uy(p, {s.q1, s.q2});
    return 0.5 * (g.g11 * s.v1 * s.v1 + g.g22 * s.v2 * s.v2);
}

PolarPoint polar_position(const CKParams& p, const PhaseState& s) {
    if (s.chart == Chart::Polar) return {s.q1, s.q2};
    return parallel_uy_to_polar(p, {s.q1, s.q2});
}

PhaseState convert_state(const CKParams& p, const PhaseState& s, Chart target) {
    if (s.chart == target) return s;

    if (s.chart == Chart::Polar) {
        const ParallelPointUY q = polar_to_parallel_uy(p, {s.q1, s.q2});
        const auto g = polar_trig(p, s.q1, s.q2);
        const double cu = ck_cos(p.radial(), q.u);
        const double cy = ck_cos(p.ortho(), q.y);
        // du = C^2(u) [C(phi)/C^2(r) dr - k2 T(r) S(phi) dphi]
        // dy = [C(r) S(phi) dr + S(r) C(phi) dphi] / C(y)
        check_wall(g.cr, "r", ck_tan_pole(p.kappa1));
        const double tr = g.sr / g.cr;
        const double vu = cu * cu *
                          (g.cphi / (g.cr * g.cr) * s.v1 - p.kappa2 * tr * g.sphi * s.v2);
        const double vy = (g.cr * g.sphi * s.v1 + g.sr * g.cphi * s.v2) / cy;
        return {Chart::ParallelUY, q.u, q.y, vu, vy};
    }

    const PolarPoint q = parallel_uy_to_polar(p, {s.q1, s.q2});
    const auto g = polar_trig(p, q.r, q.phi);
    const double cu = ck_cos(p.radial(), s.q1);
    const double cy = ck_cos(p.ortho(), s.q2);
    check_wall(g.cr, "r", ck_tan_pole(p.kappa1));
    const double tr = g.sr / g.cr;
    // Invert the forward differential relations for (vr, vphi).
    const double m11 = g.cphi / (g.cr * g.cr);
    const double m12 = -p.kappa2 * tr * g.sphi;
    const double m21 = g.cr * g.sphi;
    const double m22 = g.sr * g.cphi;
    const double det = m11 * m22 - m12 * m21;
    if (std::abs(det) < 1e-300)
        throw_error(ErrorKind::SingularChart, "chart Jacobian singular (origin?)");
    const double b1 = s.v1 / (cu * cu);
    const double b2 = cy * s.v2;
    const double vr = (m22 * b1 - m12 * b2) / det;
    const double vphi = (-m21 * b1 + m11 * b2) / det;
    return {Chart::Polar, q.r, q.phi, vr, vphi};
}

double radial_expansion_rate(const CKParams& p, const PhaseState& s) {
    if (s.chart == Chart::Polar) return s.v1;
    // d/dt of T^2(r) up to a positive factor, with
    //   tp = T(u), tq = T(y)/C(u):  T^2(r) = tp^2 + k2 tq^2.
    const auto g = parallel_trig(p, s.q1, s.q2);
    const double tp = g.su / g.cu;
    const double ty = g.sy / g.cy;
    const double tq = ty / g.cu;
    const double dtp = s.v1 / (g.cu * g.cu);
    const double dtq = s.v2 / (g.cy * g.cy * g.cu) +
                       p.kappa1 * ty * g.su * s.v1 / (g.cu * g.cu);
    return tp * dtp + p.kappa2 * tq * dtq;
}

} // namespace ckosc
