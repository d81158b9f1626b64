#include "ckosc/integrator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace ckosc {

namespace {

using Vec4 = std::array<double, 4>;

// Dormand-Prince 5(4) tableau (Hairer-Norsett-Wanner DOPRI5).
constexpr double c2 = 0.2, c3 = 0.3, c4 = 0.8, c5 = 8.0 / 9.0;
constexpr double a21 = 0.2;
constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
constexpr double a41 = 44.0 / 45.0, a42 = -56.0 / 15.0, a43 = 32.0 / 9.0;
constexpr double a51 = 19372.0 / 6561.0, a52 = -25360.0 / 2187.0,
                 a53 = 64448.0 / 6561.0, a54 = -212.0 / 729.0;
constexpr double a61 = 9017.0 / 3168.0, a62 = -355.0 / 33.0, a63 = 46732.0 / 5247.0,
                 a64 = 49.0 / 176.0, a65 = -5103.0 / 18656.0;
constexpr double a71 = 35.0 / 384.0, a73 = 500.0 / 1113.0, a74 = 125.0 / 192.0,
                 a75 = -2187.0 / 6784.0, a76 = 11.0 / 84.0;
constexpr double e1 = 71.0 / 57600.0, e3 = -71.0 / 16695.0, e4 = 71.0 / 1920.0,
                 e5 = -17253.0 / 339200.0, e6 = 22.0 / 525.0, e7 = -1.0 / 40.0;
// Dense-output weights.
constexpr double d1 = -12715105075.0 / 11282082432.0;
constexpr double d3 = 87487479700.0 / 32700410799.0;
constexpr double d4 = -10690763975.0 / 1880347072.0;
constexpr double d5 = 701980252875.0 / 199316789632.0;
constexpr double d6 = -1453857185.0 / 822651844.0;
constexpr double d7 = 69997945.0 / 29380423.0;

struct StepInterp {
    double t0 = 0.0, h = 0.0;
    std::array<Vec4, 5> c{};

    Vec4 eval(double t) const {
        const double th = (t - t0) / h;
        const double th1 = 1.0 - th;
        Vec4 y;
        for (int i = 0; i < 4; ++i)
            y[i] = c[0][i] + th * (c[1][i] + th1 * (c[2][i] + th * (c[3][i] + th1 * c[4][i])));
        return y;
    }
};

class Propagator {
public:
    // Polar motion integrates (r, phi, vr, J) with the angular momentum as
    // the reduced variable: J is constant along the flow, and reconstructing
    // vphi = J/S^2(r) keeps it accurate where S^2 spans many decades
    // (escaping hyperbolic orbits, Lorentzian infall). The parallel chart
    // has no such collapsing component and integrates (u, y, vu, vy).
    Propagator(const CKParams& p, const Oscillator& osc, Chart chart,
               const IntegratorConfig& cfg)
        : p_(p), osc_(osc), chart_(chart), cfg_(cfg) {}

    Vec4 to_internal(const PhaseState& s) const {
        if (chart_ == Chart::ParallelUY) return {s.q1, s.q2, s.v1, s.v2};
        const double sr = ck_sin(p_.radial(), s.q1);
        return {s.q1, s.q2, s.v1, sr * sr * s.v2};
    }

    PhaseState make_state(const Vec4& y) const {
        if (chart_ == Chart::ParallelUY) return {chart_, y[0], y[1], y[2], y[3]};
        const double sr = ck_sin(p_.radial(), y[0]);
        return {chart_, y[0], y[1], y[2], y[3] / (sr * sr)};
    }

    Vec4 rhs(const Vec4& y) const {
        if (chart_ == Chart::ParallelUY) {
            const Accel2 a = accelerations(p_, osc_, {chart_, y[0], y[1], y[2], y[3]});
            return {y[2], y[3], a.a1, a.a2};
        }
        const double c = ck_cos(p_.radial(), y[0]);
        const double s = ck_sin(p_.radial(), y[0]);
        if (std::abs(c) < kPoleEps)
            throw_error(ErrorKind::InfiniteWall, "potential wall reached",
                        ck_tan_pole(p_.kappa1));
        const double jt = y[3];
        double phidot = 0.0, centrifugal = 0.0;
        if (jt != 0.0) {
            if (std::abs(s) < kPoleEps)
                throw_error(ErrorKind::SingularChart, "polar origin reached with J != 0");
            phidot = jt / (s * s);
            centrifugal = p_.kappa2 * c * jt * jt / (s * s * s);
        }
        const double dV = osc_.omega0_sq * (s / c) / (c * c);
        return {y[2], phidot, centrifugal - dV, 0.0};
    }

    // Positive margin while the state is comfortably inside the chart;
    // crossing zero triggers a ChartBoundary stop.
    double boundary_margin(const Vec4& y) const {
        double m = std::numeric_limits<double>::infinity();
        if (chart_ == Chart::Polar) {
            // Lorentzian isotropes sit at r = 0 and attract J != 0 motion;
            // Riemannian orbits never reach the origin, so only a hard floor
            // against numerical wander applies there.
            const double floor = p_.kappa2 < 0.0 ? cfg_.r_floor : 1e-9;
            m = std::min(m, std::abs(y[0]) - floor);
            if (p_.kappa1 > 0.0)
                m = std::min(m, ck_tan_pole(p_.kappa1) - 1e-9 - std::abs(y[0]));
        } else {
            if (p_.kappa1 > 0.0)
                m = std::min(m, ck_tan_pole(p_.kappa1) - 1e-9 - std::abs(y[0]));
            const double ky = p_.kappa1 * p_.kappa2;
            if (ky > 0.0)
                m = std::min(m, ck_tan_pole(ky) - 1e-9 - std::abs(y[1]));
        }
        return m;
    }

    // Radial turning indicator (sign of dr/dt up to a positive factor).
    double radial_rate(const Vec4& y) const {
        return radial_expansion_rate(p_, make_state(y));
    }

    // Axis-crossing indicator.
    double axis_indicator(const Vec4& y) const {
        if (chart_ == Chart::ParallelUY) return y[1];
        if (p_.kappa2 > 0.0) return std::sin(std::sqrt(p_.kappa2) * y[1]);
        return y[1];
    }

private:
    const CKParams& p_;
    const Oscillator& osc_;
    Chart chart_;
    const IntegratorConfig& cfg_;
};

double hinit(const Propagator& prop, const Vec4& y0, const Vec4& f0, double t_span,
             double rtol, double atol) {
    double dn0 = 0.0, dn1 = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double sk = atol + rtol * std::abs(y0[i]);
        dn0 += (y0[i] / sk) * (y0[i] / sk);
        dn1 += (f0[i] / sk) * (f0[i] / sk);
    }
    double h = (dn0 < 1e-10 || dn1 < 1e-10) ? 1e-6 : 0.01 * std::sqrt(dn0 / dn1);
    h = std::min(h, t_span);
    // One explicit Euler probe to bound the second derivative.
    Vec4 y1;
    for (int i = 0; i < 4; ++i) y1[i] = y0[i] + h * f0[i];
    Vec4 f1;
    try {
        f1 = prop.rhs(y1);
    } catch (const Error&) {
        return std::max(1e-10, h * 1e-3);
    }
    double der2 = 0.0;
    for (int i = 0; i < 4; ++i) {
        const double sk = atol + rtol * std::abs(y0[i]);
        const double d = (f1[i] - f0[i]) / sk;
        der2 += d * d;
    }
    der2 = std::sqrt(der2) / h;
    const double der12 = std::max(der2, std::sqrt(dn1));
    const double h1 = der12 <= 1e-15 ? std::max(1e-6, h * 1e-3)
                                     : std::pow(0.01 / der12, 0.2);
    return std::min({100.0 * h, h1, t_span});
}

struct SampleRecorder {
    const CKParams& p;
    const Oscillator& osc;
    Trajectory& traj;

    void push(double t, const PhaseState& s) {
        TrajectorySample smp;
        smp.t = t;
        smp.state = s;
        smp.momenta = noether_momenta(p, s);
        smp.energy = energy(p, osc, s);
        smp.fradkin = fradkin(p, osc, s);
        traj.samples.push_back(smp);
    }
};

// Bisect a scalar indicator to its sign change inside one accepted step.
template <typename F>
double bisect_on_step(const StepInterp& interp, double ta, double tb, F&& g) {
    double ga = g(interp.eval(ta));
    for (int it = 0; it < 80 && (tb - ta) > 1e-14 * std::max(1.0, std::abs(tb)); ++it) {
        const double tm = 0.5 * (ta + tb);
        const double gm = g(interp.eval(tm));
        if ((ga < 0.0) == (gm < 0.0)) {
            ta = tm;
            ga = gm;
        } else {
            tb = tm;
        }
    }
    return 0.5 * (ta + tb);
}

} // namespace

double DriftReport::worst() const {
    return std::max({energy, j, f11, f12, f22});
}

DriftReport Trajectory::drift_report() const {
    if (samples.empty())
        throw_error(ErrorKind::InvalidArgument, "empty trajectory");
    const auto& s0 = samples.front();
    auto rel = [](double q, double q0) {
        return std::abs(q - q0) / std::max(1.0, std::abs(q0));
    };
    DriftReport r{0, 0, 0, 0, 0};
    for (const auto& s : samples) {
        r.energy = std::max(r.energy, rel(s.energy, s0.energy));
        r.j = std::max(r.j, rel(s.momenta.j, s0.momenta.j));
        r.f11 = std::max(r.f11, rel(s.fradkin.f11, s0.fradkin.f11));
        r.f12 = std::max(r.f12, rel(s.fradkin.f12, s0.fradkin.f12));
        r.f22 = std::max(r.f22, rel(s.fradkin.f22, s0.fradkin.f22));
    }
    return r;
}

Trajectory simulate(const CKParams& p, const Oscillator& osc, const PhaseState& init,
                    double t_end, const IntegratorConfig& cfg) {
    cfg.validate();
    if (p.kappa2 == 0.0)
        throw_error(ErrorKind::Unsupported,
                    "kappa2 = 0: degenerate metric, no well-posed flow");
    if (!(t_end > 0.0))
        throw_error(ErrorKind::InvalidArgument, "t_end must be positive");

    // Chart selection: the polar chart cannot represent passage through the
    // origin, so J = 0 (and near-origin) states integrate in parallel
    // coordinates instead.
    PhaseState state = init;
    if (init.chart == Chart::Polar) {
        const double j = noether_momenta(p, init).j;
        if (j == 0.0 || std::abs(init.q1) < cfg.r_floor)
            state = convert_state(p, init, Chart::ParallelUY);
    }

    Propagator prop(p, osc, state.chart, cfg);
    Trajectory traj;
    SampleRecorder rec{p, osc, traj};

    Vec4 y = prop.to_internal(state);
    Vec4 k1 = prop.rhs(y);
    double t = 0.0;
    rec.push(t, state);

    const double atol = cfg.abs_tol, rtol = cfg.rel_tol;
    const double hmax = cfg.max_step > 0.0 ? cfg.max_step : t_end;
    double h = hinit(prop, y, k1, std::min(t_end, hmax), rtol, atol);

    constexpr double safe = 0.9, beta = 0.04, expo1 = 0.2 - beta * 0.75;
    constexpr double facc1 = 5.0, facc2 = 0.1; // 1/fac_min, 1/fac_max
    double facold = 1e-4;

    double g_rad = prop.radial_rate(y);
    double g_axis = prop.axis_indicator(y);
    double next_sample = cfg.sample_dt > 0.0 ? cfg.sample_dt : 0.0;

    bool boundary_suspect = false;
    long n_steps = 0;

    while (t < t_end) {
        if (++n_steps > cfg.max_steps)
            throw_error(ErrorKind::Stiffness, "step budget exhausted", t);
        h = std::min({h, hmax, t_end - t});
        if (h <= 16.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, t)) {
            if (boundary_suspect) {
                traj.events.push_back({t, EventKind::ChartBoundary, prop.make_state(y)});
                traj.hit_boundary = true;
                return traj;
            }
            throw_error(ErrorKind::Stiffness, "step size underflow", t);
        }

        Vec4 k2n, k3, k4, k5, k6, k7, ynew;
        bool rhs_failed = false;
        try {
            Vec4 w;
            for (int i = 0; i < 4; ++i) w[i] = y[i] + h * a21 * k1[i];
            k2n = prop.rhs(w);
            for (int i = 0; i < 4; ++i) w[i] = y[i] + h * (a31 * k1[i] + a32 * k2n[i]);
            k3 = prop.rhs(w);
            for (int i = 0; i < 4; ++i)
                w[i] = y[i] + h * (a41 * k1[i] + a42 * k2n[i] + a43 * k3[i]);
            k4 = prop.rhs(w);
            for (int i = 0; i < 4; ++i)
                w[i] = y[i] + h * (a51 * k1[i] + a52 * k2n[i] + a53 * k3[i] + a54 * k4[i]);
            k5 = prop.rhs(w);
            for (int i = 0; i < 4; ++i)
                w[i] = y[i] + h * (a61 * k1[i] + a62 * k2n[i] + a63 * k3[i] + a64 * k4[i] +
                                   a65 * k5[i]);
            k6 = prop.rhs(w);
            for (int i = 0; i < 4; ++i)
                ynew[i] = y[i] + h * (a71 * k1[i] + a73 * k3[i] + a74 * k4[i] + a75 * k5[i] +
                                      a76 * k6[i]);
            k7 = prop.rhs(ynew);
        } catch (const Error&) {
            rhs_failed = true;
        }

        if (rhs_failed) {
            boundary_suspect = true;
            h *= 0.25;
            continue;
        }

        double err = 0.0;
        for (int i = 0; i < 4; ++i) {
            const double ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] +
                                   e6 * k6[i] + e7 * k7[i]);
            const double sk = atol + rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
            err += (ei / sk) * (ei / sk);
        }
        err = std::sqrt(err / 4.0);

        const double fac11 = std::pow(err, expo1);
        if (err > 1.0) {
            h /= std::min(facc1, fac11 / safe);
            continue;
        }

        // Accepted. Build the dense interpolant for events and sampling.
        StepInterp interp;
        interp.t0 = t;
        interp.h = h;
        for (int i = 0; i < 4; ++i) {
            const double dy = ynew[i] - y[i];
            const double bspl = h * k1[i] - dy;
            interp.c[0][i] = y[i];
            interp.c[1][i] = dy;
            interp.c[2][i] = bspl;
            interp.c[3][i] = dy - h * k7[i] - bspl;
            interp.c[4][i] = h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] + d5 * k5[i] +
                                  d6 * k6[i] + d7 * k7[i]);
        }

        const double t_new = t + h;

        // Event scan on a few dense nodes to catch multiple crossings.
        constexpr int kScan = 4;
        double ta = t, ga_rad = g_rad, ga_axis = g_axis;
        for (int sgm = 1; sgm <= kScan; ++sgm) {
            const double tb = t + h * sgm / kScan;
            const Vec4 yb = sgm == kScan ? ynew : interp.eval(tb);
            const double gb_rad = prop.radial_rate(yb);
            const double gb_axis = prop.axis_indicator(yb);
            if (ga_rad != 0.0 && (ga_rad < 0.0) != (gb_rad < 0.0)) {
                const double te = bisect_on_step(interp, ta, tb,
                                                 [&](const Vec4& yy) { return prop.radial_rate(yy); });
                traj.events.push_back({te,
                                       ga_rad < 0.0 ? EventKind::RadialMin : EventKind::RadialMax,
                                       prop.make_state(interp.eval(te))});
            }
            if (ga_axis != 0.0 && (ga_axis < 0.0) != (gb_axis < 0.0)) {
                const double te = bisect_on_step(interp, ta, tb,
                                                 [&](const Vec4& yy) { return prop.axis_indicator(yy); });
                traj.events.push_back({te, EventKind::AxisCrossing,
                                       prop.make_state(interp.eval(te))});
            }
            ta = tb;
            ga_rad = gb_rad;
            ga_axis = gb_axis;
        }
        g_rad = ga_rad;
        g_axis = ga_axis;

        // Chart-boundary stop, located on the margin function.
        if (prop.boundary_margin(ynew) <= 0.0) {
            const double te = bisect_on_step(interp, t, t_new, [&](const Vec4& yy) {
                return prop.boundary_margin(yy);
            });
            const Vec4 ye = interp.eval(te);
            if (cfg.sample_dt > 0.0) {
                while (next_sample < te) {
                    rec.push(next_sample, prop.make_state(interp.eval(std::max(next_sample, t))));
                    next_sample += cfg.sample_dt;
                }
            }
            rec.push(te, prop.make_state(ye));
            traj.events.push_back({te, EventKind::ChartBoundary, prop.make_state(ye)});
            traj.hit_boundary = true;
            return traj;
        }

        if (cfg.sample_dt > 0.0) {
            while (next_sample <= t_new && next_sample < t_end) {
                if (next_sample > t) rec.push(next_sample, prop.make_state(interp.eval(next_sample)));
                next_sample += cfg.sample_dt;
            }
            if (t_new >= t_end) rec.push(t_new, prop.make_state(ynew));
        } else {
            rec.push(t_new, prop.make_state(ynew));
        }

        t = t_new;
        y = ynew;
        k1 = k7; // FSAL
        facold = std::max(err, 1e-4);
        const double fac = std::clamp(fac11 / std::pow(facold, beta) / safe, facc2, facc1);
        h = h / fac;
        boundary_suspect = false;
    }

    return traj;
}

double radial_period_measured(const Trajectory& traj) {
    std::vector<double> mins;
    for (const auto& e : traj.events)
        if (e.kind == EventKind::RadialMin) mins.push_back(e.t);
    if (mins.size() < 3)
        throw_error(ErrorKind::NotPeriodic,
                    "fewer than 3 radial minima; orbit not measurably periodic",
                    static_cast<double>(mins.size()));
    return (mins.back() - mins.front()) / static_cast<double>(mins.size() - 1);
}

double full_period_measured(const CKParams& p, const Trajectory& traj) {
    try {
        return 2.0 * radial_period_measured(traj);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotPeriodic) throw;
    }
    // Circular orbit: constant angular rate, read the winding directly.
    if (p.kappa2 <= 0.0)
        throw_error(ErrorKind::NotPeriodic, "no angular period for kappa2 <= 0");
    const auto& s0 = traj.front();
    const auto& s1 = traj.back();
    if (s0.state.chart != Chart::Polar)
        throw_error(ErrorKind::NotPeriodic, "winding fallback needs a polar trajectory");
    const double dphi = std::abs(s1.state.q2 - s0.state.q2);
    if (dphi < 1e-12 || s1.t <= s0.t)
        throw_error(ErrorKind::NotPeriodic, "no angular winding accumulated");
    return ck_period(p.kappa2) / (dphi / (s1.t - s0.t));
}

} // namespace ckosc
