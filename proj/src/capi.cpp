#include "ckoscillator.h"

#include <cstring>
#include <new>
#include <string>

#include "ckosc/render.hpp"

namespace {

thread_local std::string g_last_error;

int status_of(ckosc::ErrorKind k) {
    using ckosc::ErrorKind;
    switch (k) {
        case ErrorKind::Domain: return CKO_ERR_DOMAIN;
        case ErrorKind::Pole: return CKO_ERR_POLE;
        case ErrorKind::OutOfRange: return CKO_ERR_OUT_OF_RANGE;
        case ErrorKind::OutOfChart: return CKO_ERR_OUT_OF_CHART;
        case ErrorKind::SingularChart: return CKO_ERR_SINGULAR_CHART;
        case ErrorKind::UndefinedAngle: return CKO_ERR_UNDEFINED_ANGLE;
        case ErrorKind::InfiniteWall: return CKO_ERR_INFINITE_WALL;
        case ErrorKind::Degenerate: return CKO_ERR_DEGENERATE;
        case ErrorKind::NoRealOrbit: return CKO_ERR_NO_REAL_ORBIT;
        case ErrorKind::OutsideBranch: return CKO_ERR_OUTSIDE_BRANCH;
        case ErrorKind::OpenOrbit: return CKO_ERR_OPEN_ORBIT;
        case ErrorKind::EmptyCurve: return CKO_ERR_EMPTY_CURVE;
        case ErrorKind::Unsupported: return CKO_ERR_UNSUPPORTED;
        case ErrorKind::NotPeriodic: return CKO_ERR_NOT_PERIODIC;
        case ErrorKind::Stiffness: return CKO_ERR_STIFFNESS;
        case ErrorKind::InvalidArgument: return CKO_ERR_INVALID_ARGUMENT;
    }
    return CKO_ERR_INTERNAL;
}

template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return CKO_OK;
    } catch (const ckosc::Error& e) {
        g_last_error = e.what();
        return status_of(e.kind());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return CKO_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown failure";
        return CKO_ERR_INTERNAL;
    }
}

ckosc::Chart chart_of(int c) {
    if (c == CKO_CHART_POLAR) return ckosc::Chart::Polar;
    if (c == CKO_CHART_PARALLEL_UY) return ckosc::Chart::ParallelUY;
    ckosc::throw_error(ckosc::ErrorKind::InvalidArgument, "bad chart id");
}

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (!out) ckosc::throw_error(ckosc::ErrorKind::InvalidArgument, "out of memory");
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit_doc(const ckosc::FigureDocument& doc, char** svg, char** csv) {
    if (svg) *svg = dup_string(doc.svg);
    if (csv) *csv = dup_string(doc.csv);
}

ckosc::Projection resolve_projection(const ckosc::CKParams& p, int projection,
                                     double scale) {
    if (projection == CKO_PROJ_DEFAULT) {
        ckosc::Projection pr = ckosc::default_projection(p);
        pr.scale = scale;
        return pr;
    }
    ckosc::ProjectionKind kind;
    switch (projection) {
        case CKO_PROJ_BELTRAMI: kind = ckosc::ProjectionKind::Beltrami; break;
        case CKO_PROJ_POINCARE_DISK: kind = ckosc::ProjectionKind::PoincareDisk; break;
        case CKO_PROJ_ORTHOGRAPHIC: kind = ckosc::ProjectionKind::Orthographic; break;
        case CKO_PROJ_PLANAR: kind = ckosc::ProjectionKind::Planar; break;
        default:
            ckosc::throw_error(ckosc::ErrorKind::InvalidArgument, "bad projection id");
    }
    return {kind, scale};
}

ckosc::OrbitSolution orbit_of(const cko_orbit* o) {
    if (!o) ckosc::throw_error(ckosc::ErrorKind::InvalidArgument, "null orbit");
    return {o->d, o->g, o->phi0, o->a_sq, o->b_sq, o->e_p, o->e1, o->e2};
}

ckosc::ConicGeometry conic_of(const cko_conic* c) {
    if (!c) ckosc::throw_error(ckosc::ErrorKind::InvalidArgument, "null conic");
    ckosc::ConicGeometry g;
    g.kind = static_cast<ckosc::ConicKind>(c->kind);
    g.major_kind = static_cast<ckosc::MajorKind>(c->major_kind);
    g.major = c->major;
    g.b = c->b;
    if (c->has_focal) g.focal_half_separation = c->focal_half_separation;
    return g;
}

} // namespace

struct cko_trajectory {
    ckosc::CKParams params;
    ckosc::Trajectory traj;
};

extern "C" {

const char* cko_version(void) { return "1.0.0"; }

const char* cko_last_error(void) { return g_last_error.c_str(); }

const char* cko_status_name(int status) {
    switch (status) {
        case CKO_OK: return "ok";
        case CKO_ERR_DOMAIN: return "domain";
        case CKO_ERR_POLE: return "pole";
        case CKO_ERR_OUT_OF_RANGE: return "out-of-range";
        case CKO_ERR_OUT_OF_CHART: return "out-of-chart";
        case CKO_ERR_SINGULAR_CHART: return "singular-chart";
        case CKO_ERR_UNDEFINED_ANGLE: return "undefined-angle";
        case CKO_ERR_INFINITE_WALL: return "infinite-wall";
        case CKO_ERR_DEGENERATE: return "degenerate";
        case CKO_ERR_NO_REAL_ORBIT: return "no-real-orbit";
        case CKO_ERR_OUTSIDE_BRANCH: return "outside-branch";
        case CKO_ERR_OPEN_ORBIT: return "open-orbit";
        case CKO_ERR_EMPTY_CURVE: return "empty-curve";
        case CKO_ERR_UNSUPPORTED: return "unsupported";
        case CKO_ERR_NOT_PERIODIC: return "not-periodic";
        case CKO_ERR_STIFFNESS: return "stiffness";
        case CKO_ERR_INVALID_ARGUMENT: return "invalid-argument";
        case CKO_ERR_INTERNAL: return "internal";
    }
    return "unknown";
}

int cko_ck_cos(double kappa, double x, double* out) {
    return guarded([&] { *out = ckosc::ck_cos(ckosc::Label(kappa), x); });
}

int cko_ck_sin(double kappa, double x, double* out) {
    return guarded([&] { *out = ckosc::ck_sin(ckosc::Label(kappa), x); });
}

int cko_ck_tan(double kappa, double x, double* out) {
    return guarded([&] { *out = ckosc::ck_tan(ckosc::Label(kappa), x); });
}

int cko_ck_atan(double kappa, double t, double* out) {
    return guarded([&] { *out = ckosc::ck_atan(ckosc::Label(kappa), t); });
}

int cko_ck_asin(double kappa, double s, double* out) {
    return guarded([&] { *out = ckosc::ck_asin(ckosc::Label(kappa), s); });
}

int cko_space_kind(double kappa1, double kappa2, int* kind) {
    return guarded([&] {
        *kind = static_cast<int>(ckosc::classify_space(ckosc::CKParams(kappa1, kappa2)));
    });
}

const char* cko_space_kind_name(int kind) {
    if (kind < 0 || kind > 8) return "unknown";
    return ckosc::space_kind_name(static_cast<ckosc::SpaceKind>(kind));
}

const char* cko_space_short_name(int kind) {
    if (kind < 0 || kind > 8) return "unknown";
    return ckosc::space_short_name(static_cast<ckosc::SpaceKind>(kind));
}

int cko_standard_space(const char* name, double* kappa1, double* kappa2) {
    return guarded([&] {
        if (!name) ckosc::throw_error(ckosc::ErrorKind::InvalidArgument, "null name");
        const ckosc::CKParams p = ckosc::standard_space(name);
        *kappa1 = p.kappa1;
        *kappa2 = p.kappa2;
    });
}

int cko_get_space_info(double kappa1, double kappa2, double omega0_sq, cko_space_info* out) {
    return guarded([&] {
        ckosc::CKParams p(kappa1, kappa2);
        ckosc::Oscillator osc(omega0_sq);
        out->kind = static_cast<int>(ckosc::classify_space(p));
        out->has_e_inf = kappa1 < 0.0;
        out->has_j_inf = kappa1 < 0.0 && kappa2 > 0.0;
        out->e_inf = out->has_e_inf ? omega0_sq / (-2.0 * kappa1) : 0.0;
        out->j_inf =
            out->has_j_inf ? osc.omega0() / (std::sqrt(kappa2) * (-kappa1)) : 0.0;
    });
}

int cko_metric_polar(double kappa1, double kappa2, double r, double phi, double* g11,
                     double* g22) {
    return guarded([&] {
        const auto g = ckosc::metric_polar(ckosc::CKParams(kappa1, kappa2), {r, phi});
        *g11 = g.g11;
        *g22 = g.g22;
    });
}

int cko_metric_parallel_uy(double kappa1, double kappa2, double u, double y, double* g11,
                           double* g22) {
    return guarded([&] {
        const auto g = ckosc::metric_parallel_uy(ckosc::CKParams(kappa1, kappa2), {u, y});
        *g11 = g.g11;
        *g22 = g.g22;
    });
}

int cko_metric_parallel_xv(double kappa1, double kappa2, double x, double v, double* g11,
                           double* g22) {
    return guarded([&] {
        const auto g = ckosc::metric_parallel_xv(ckosc::CKParams(kappa1, kappa2), {x, v});
        *g11 = g.g11;
        *g22 = g.g22;
    });
}

int cko_polar_to_parallel_uy(double kappa1, double kappa2, double r, double phi,
                             double* u, double* y) {
    return guarded([&] {
        const auto q = ckosc::polar_to_parallel_uy(ckosc::CKParams(kappa1, kappa2), {r, phi});
        *u = q.u;
        *y = q.y;
    });
}

int cko_parallel_uy_to_polar(double kappa1, double kappa2, double u, double y, double* r,
                             double* phi) {
    return guarded([&] {
        const auto q = ckosc::parallel_uy_to_polar(ckosc::CKParams(kappa1, kappa2), {u, y});
        *r = q.r;
        *phi = q.phi;
    });
}

int cko_polar_to_parallel_xv(double kappa1, double kappa2, double r, double phi,
                             double* x, double* v) {
    return guarded([&] {
        const auto q = ckosc::polar_to_parallel_xv(ckosc::CKParams(kappa1, kappa2), {r, phi});
        *x = q.x;
        *v = q.v;
    });
}

int cko_parallel_xv_to_polar(double kappa1, double kappa2, double x, double v, double* r,
                             double* phi) {
    return guarded([&] {
        const auto q = ckosc::parallel_xv_to_polar(ckosc::CKParams(kappa1, kappa2), {x, v});
        *r = q.r;
        *phi = q.phi;
    });
}

int cko_killing_fields_polar(double kappa1, double kappa2, double r, double phi,
                             double out[6]) {
    return guarded([&] {
        const auto f = ckosc::killing_fields_polar(ckosc::CKParams(kappa1, kappa2), {r, phi});
        out[0] = f.p1.c1; out[1] = f.p1.c2;
        out[2] = f.p2.c1; out[3] = f.p2.c2;
        out[4] = f.j.c1;  out[5] = f.j.c2;
    });
}

int cko_killing_fields_parallel(double kappa1, double kappa2, double u, double y,
                                double out[6]) {
    return guarded([&] {
        const auto f =
            ckosc::killing_fields_parallel(ckosc::CKParams(kappa1, kappa2), {u, y});
        out[0] = f.p1.c1; out[1] = f.p1.c2;
        out[2] = f.p2.c1; out[3] = f.p2.c2;
        out[4] = f.j.c1;  out[5] = f.j.c2;
    });
}

int cko_potential(double kappa1, double kappa2, double omega0_sq, int chart, double q1,
                  double q2, double* out) {
    return guarded([&] {
        ckosc::CKParams p(kappa1, kappa2);
        ckosc::Oscillator osc(omega0_sq);
        *out = chart_of(chart) == ckosc::Chart::Polar
                   ? ckosc::ho_potential(p, osc, {q1, q2})
                   : ckosc::ho_potential_parallel(p, osc, {q1, q2});
    });
}

int cko_accelerations(double kappa1, double kappa2, double omega0_sq, int chart,
                      double q1, double q2, double v1, double v2, double* a1,
                      double* a2) {
    return guarded([&] {
        const auto a = ckosc::accelerations(ckosc::CKParams(kappa1, kappa2),
                                            ckosc::Oscillator(omega0_sq),
                                            {chart_of(chart), q1, q2, v1, v2});
        *a1 = a.a1;
        *a2 = a.a2;
    });
}

int cko_noether_momenta(double kappa1, double kappa2, int chart, double q1, double q2,
                        double v1, double v2, double* p1, double* p2, double* j) {
    return guarded([&] {
        const auto m = ckosc::noether_momenta(ckosc::CKParams(kappa1, kappa2),
                                              {chart_of(chart), q1, q2, v1, v2});
        *p1 = m.p1;
        *p2 = m.p2;
        *j = m.j;
    });
}

int cko_energy(double kappa1, double kappa2, double omega0_sq, int chart, double q1,
               double q2, double v1, double v2, double* out) {
    return guarded([&] {
        *out = ckosc::energy(ckosc::CKParams(kappa1, kappa2), ckosc::Oscillator(omega0_sq),
                             {chart_of(chart), q1, q2, v1, v2});
    });
}

int cko_fradkin(double kappa1, double kappa2, double omega0_sq, int chart, double q1,
                double q2, double v1, double v2, double* f11, double* f12, double* f22,
                double* j_sq) {
    return guarded([&] {
        const auto f = ckosc::fradkin(ckosc::CKParams(kappa1, kappa2),
                                      ckosc::Oscillator(omega0_sq),
                                      {chart_of(chart), q1, q2, v1, v2});
        *f11 = f.f11;
        *f12 = f.f12;
        *f22 = f.f22;
        *j_sq = f.j_sq;
    });
}

int cko_convert_state(double kappa1, double kappa2, int chart_from, double q1, double q2,
                      double v1, double v2, int chart_to, double out[4]) {
    return guarded([&] {
        const auto s = ckosc::convert_state(ckosc::CKParams(kappa1, kappa2),
                                            {chart_of(chart_from), q1, q2, v1, v2},
                                            chart_of(chart_to));
        out[0] = s.q1;
        out[1] = s.q2;
        out[2] = s.v1;
        out[3] = s.v2;
    });
}

void cko_sim_options_default(cko_sim_options* opt) {
    const ckosc::IntegratorConfig cfg;
    opt->rel_tol = cfg.rel_tol;
    opt->abs_tol = cfg.abs_tol;
    opt->max_step = cfg.max_step;
    opt->max_steps = cfg.max_steps;
    opt->sample_dt = cfg.sample_dt;
    opt->r_floor = cfg.r_floor;
}

int cko_simulate(double kappa1, double kappa2, double omega0_sq, int chart, double q1,
                 double q2, double v1, double v2, double t_end,
                 const cko_sim_options* opt, cko_trajectory** out) {
    return guarded([&] {
        ckosc::IntegratorConfig cfg;
        if (opt) {
            cfg.rel_tol = opt->rel_tol;
            cfg.abs_tol = opt->abs_tol;
            cfg.max_step = opt->max_step;
            cfg.max_steps = opt->max_steps;
            cfg.sample_dt = opt->sample_dt;
            cfg.r_floor = opt->r_floor;
        }
        ckosc::CKParams p(kappa1, kappa2);
        auto traj = ckosc::simulate(p, ckosc::Oscillator(omega0_sq),
                                    {chart_of(chart), q1, q2, v1, v2}, t_end, cfg);
        *out = new cko_trajectory{p, std::move(traj)};
    });
}

void cko_trajectory_free(cko_trajectory* traj) { delete traj; }

size_t cko_trajectory_size(const cko_trajectory* traj) {
    return traj ? traj->traj.samples.size() : 0;
}

int cko_trajectory_sample(const cko_trajectory* traj, size_t i, cko_sample* out) {
    return guarded([&] {
        if (!traj || i >= traj->traj.samples.size())
            ckosc::throw_error(ckosc::ErrorKind::InvalidArgument, "sample index");
        const auto& s = traj->traj.samples[i];
        out->t = s.t;
        out->chart = s.state.chart == ckosc::Chart::Polar ? CKO_CHART_POLAR
                                                          : CKO_CHART_PARALLEL_UY;
        out->q1 = s.state.q1;
        out->q2 = s.state.q2;
        out->v1 = s.state.v1;
        out->v2 = s.state.v2;
        out->p1 = s.momenta.p1;
        out->p2 = s.momenta.p2;
        out->j = s.momenta.j;
        out->energy = s.energy;
        out->f11 = s.fradkin.f11;
        out->f12 = s.fradkin.f12;
        out->f22 = s.fradkin.f22;
        out->j_sq = s.fradkin.j_sq;
    });
}

size_t cko_trajectory_event_count(const cko_trajectory* traj) {
    return traj ? traj->traj.events.size() : 0;
}

int cko_trajectory_event(const cko_trajectory* traj, size_t i, cko_event* out) {
    return guarded([&] {
        if (!traj || i >= traj->traj.events.size())
            ckosc::throw_error(ckosc::ErrorKind::InvalidArgument, "event index");
        const auto& e = traj->traj.events[i];
        out->t = e.t;
        out->kind = static_cast<int>(e.kind);
        out->chart = e.state.chart == ckosc::Chart::Polar ? CKO_CHART_POLAR
                                                          : CKO_CHART_PARALLEL_UY;
        out->q1 = e.state.q1;
        out->q2 = e.state.q2;
        out->v1 = e.state.v1;
        out->v2 = e.state.v2;
    });
}

int cko_trajectory_hit_boundary(const cko_trajectory* traj) {
    return traj && traj->traj.hit_boundary ? 1 : 0;
}

int cko_trajectory_drift(const cko_trajectory* traj, cko_drift* out) {
    return guarded([&] {
        if (!traj) ckosc::throw_error(ckosc::ErrorKind::InvalidArgument, "null trajectory");
        const auto d = traj->traj.drift_report();
        out->energy = d.energy;
        out->j = d.j;
        out->f11 = d.f11;
        out->f12 = d.f12;
        out->f22 = d.f22;
    });
}

int cko_radial_period_measured(const cko_trajectory* traj, double* out) {
    return guarded([&] {
        if (!traj) ckosc::throw_error(ckosc::ErrorKind::InvalidArgument, "null trajectory");
        *out = ckosc::radial_period_measured(traj->traj);
    });
}

int cko_full_period_measured(double kappa1, double kappa2, const cko_trajectory* traj,
                             double* out) {
    return guarded([&] {
        if (!traj) ckosc::throw_error(ckosc::ErrorKind::InvalidArgument, "null trajectory");
        *out = ckosc::full_period_measured(ckosc::CKParams(kappa1, kappa2), traj->traj);
    });
}

const char* cko_orbit_tag_name(int tag) {
    if (tag < 0 || tag > 8) return "unknown";
    return ckosc::orbit_tag_name(static_cast<ckosc::OrbitTag>(tag));
}

int cko_effective_potential(double kappa1, double kappa2, double omega0_sq, double j,
                            double r, double* out) {
    return guarded([&] {
        *out = ckosc::effective_potential(ckosc::CKParams(kappa1, kappa2),
                                          ckosc::Oscillator(omega0_sq), j, r);
    });
}

int cko_classify(double kappa1, double kappa2, double omega0_sq, double e, double j,
                 cko_orbit_class* out) {
    return guarded([&] {
        const auto c = ckosc::classify(ckosc::CKParams(kappa1, kappa2),
                                       ckosc::Oscillator(omega0_sq), e, j);
        out->tag = static_cast<int>(c.tag);
        out->e_min = c.e_min;
        out->e_inf = c.e_inf;
        out->j_inf = c.j_inf;
        out->has_r_m = c.r_m.has_value();
        out->r_m = c.r_m.value_or(0.0);
        out->has_r_min = c.r_min.has_value();
        out->r_min = c.r_min.value_or(0.0);
        out->has_r_max = c.r_max.has_value();
        out->r_max = c.r_max.value_or(0.0);
    });
}

int cko_orbit_from_ej(double kappa1, double kappa2, double omega0_sq, double e, double j,
                      double phi0, cko_orbit* out) {
    return guarded([&] {
        const auto s = ckosc::orbit_from_ej(ckosc::CKParams(kappa1, kappa2),
                                            ckosc::Oscillator(omega0_sq), e, j, phi0);
        *out = {s.d, s.g, s.phi0, s.a_sq, s.b_sq, s.e_p, s.e1, s.e2};
    });
}

int cko_orbit_from_state(double kappa1, double kappa2, double omega0_sq, int chart,
                         double q1, double q2, double v1, double v2, cko_orbit* out) {
    return guarded([&] {
        const auto s = ckosc::orbit_from_state(ckosc::CKParams(kappa1, kappa2),
                                               ckosc::Oscillator(omega0_sq),
                                               {chart_of(chart), q1, q2, v1, v2});
        *out = {s.d, s.g, s.phi0, s.a_sq, s.b_sq, s.e_p, s.e1, s.e2};
    });
}

int cko_orbit_radius(double kappa1, double kappa2, const cko_orbit* orbit, double phi,
                     double* r, int* at_infinity) {
    return guarded([&] {
        const auto res =
            ckosc::orbit_radius(ckosc::CKParams(kappa1, kappa2), orbit_of(orbit), phi);
        *r = res.r;
        if (at_infinity) *at_infinity = res.at_infinity ? 1 : 0;
    });
}

int cko_binet_residual(double kappa1, double kappa2, double omega0_sq, double j,
                       const cko_orbit* orbit, double phi, double* out) {
    return guarded([&] {
        ckosc::CKParams p(kappa1, kappa2);
        const auto sol = orbit_of(orbit);
        *out = ckosc::binet_residual(
            p, ckosc::Oscillator(omega0_sq), j,
            [&](double ph) {
                const auto res = ckosc::orbit_radius(p, sol, ph);
                if (res.at_infinity)
                    ckosc::throw_error(ckosc::ErrorKind::OutsideBranch,
                                       "radius at infinity inside stencil");
                return res.r;
            },
            phi);
    });
}

int cko_period(double kappa1, double kappa2, double omega0_sq, double e, double* out) {
    return guarded([&] {
        *out = ckosc::period(ckosc::CKParams(kappa1, kappa2),
                             ckosc::Oscillator(omega0_sq), e);
    });
}

const char* cko_conic_kind_name(int kind) {
    if (kind < 0 || kind > 4) return "unknown";
    return ckosc::conic_kind_name(static_cast<ckosc::ConicKind>(kind));
}

int cko_conic_from_AB(double kappa1, double kappa2, double a_sq, double b_sq,
                      cko_conic* out) {
    return guarded([&] {
        const auto c = ckosc::conic_from_AB(ckosc::CKParams(kappa1, kappa2), a_sq, b_sq);
        out->kind = static_cast<int>(c.kind);
        out->major_kind = static_cast<int>(c.major_kind);
        out->major = c.major;
        out->b = c.b;
        out->has_focal = c.focal_half_separation.has_value();
        out->focal_half_separation = c.focal_half_separation.value_or(0.0);
    });
}

int cko_physical_from_conic(double kappa1, double kappa2, double omega0_sq,
                            const cko_conic* conic, double* e1, double* e2, double* j,
                            double* e) {
    return guarded([&] {
        const auto ph = ckosc::physical_from_conic(ckosc::CKParams(kappa1, kappa2),
                                                   ckosc::Oscillator(omega0_sq),
                                                   conic_of(conic));
        *e1 = ph.e1;
        *e2 = ph.e2;
        *j = ph.j;
        *e = ph.e;
    });
}

int cko_project(double kappa1, double kappa2, int projection, double scale, double r,
                double phi, double* X, double* Y, int* clipped) {
    return guarded([&] {
        ckosc::CKParams p(kappa1, kappa2);
        const auto proj = resolve_projection(p, projection, scale <= 0.0 ? 1.0 : scale);
        const auto xy = ckosc::project(p, proj, {r, phi});
        if (!xy) {
            if (clipped) *clipped = 1;
            *X = 0.0;
            *Y = 0.0;
            return;
        }
        if (clipped) *clipped = 0;
        *X = (*xy)[0];
        *Y = (*xy)[1];
    });
}

void cko_string_free(char* s) { delete[] s; }

int cko_figure_potential_family(const double* kappa1_values, size_t n, double omega0_sq,
                                double r_max, char** svg, char** csv) {
    return guarded([&] {
        std::vector<double> ks(kappa1_values, kappa1_values + n);
        emit_doc(ckosc::figure_potential_family(ks, omega0_sq, r_max), svg, csv);
    });
}

int cko_figure_effective_family(double kappa1, double kappa2, double omega0_sq,
                                const double* j_values, size_t n, double r_min,
                                double r_max, char** svg, char** csv) {
    return guarded([&] {
        std::vector<double> js(j_values, j_values + n);
        emit_doc(ckosc::figure_effective_potential_family(ckosc::CKParams(kappa1, kappa2),
                                                          ckosc::Oscillator(omega0_sq), js,
                                                          r_min, r_max),
                 svg, csv);
    });
}

int cko_figure_orbit_family(double kappa1, double kappa2, double omega0_sq, double b,
                            int n_each, char** svg, char** csv) {
    return guarded([&] {
        emit_doc(ckosc::figure_orbit_family(ckosc::CKParams(kappa1, kappa2),
                                            ckosc::Oscillator(omega0_sq), b, n_each),
                 svg, csv);
    });
}

int cko_render_orbit(double kappa1, double kappa2, const cko_orbit* orbit, int projection,
                     double phi_begin, double phi_end, int n, char** svg, char** csv) {
    return guarded([&] {
        ckosc::CKParams p(kappa1, kappa2);
        const auto proj = resolve_projection(p, projection, 1.0);
        auto curve = ckosc::sample_orbit(p, proj, orbit_of(orbit), "orbit", phi_begin,
                                         phi_end, n <= 1 ? 512 : n);
        ckosc::FigureStyle style;
        style.title = "closed-form orbit";
        style.draw_disk_boundary = proj.kind == ckosc::ProjectionKind::PoincareDisk;
        if (style.draw_disk_boundary) style.fixed_extent = 1.06;
        emit_doc(ckosc::emit_figure({curve}, style), svg, csv);
    });
}

int cko_render_trajectory(double kappa1, double kappa2, const cko_trajectory* traj,
                          int projection, char** svg, char** csv) {
    return guarded([&] {
        if (!traj) ckosc::throw_error(ckosc::ErrorKind::InvalidArgument, "null trajectory");
        ckosc::CKParams p(kappa1, kappa2);
        const auto proj = resolve_projection(p, projection, 1.0);
        auto curve = ckosc::sample_trajectory(p, proj, traj->traj, "trajectory");
        ckosc::FigureStyle style;
        style.title = "integrated trajectory";
        style.draw_disk_boundary = proj.kind == ckosc::ProjectionKind::PoincareDisk;
        if (style.draw_disk_boundary) style.fixed_extent = 1.06;
        emit_doc(ckosc::emit_figure({curve}, style), svg, csv);
    });
}

} // extern "C"
