/* ckoscillator: harmonic-oscillator dynamics on the nine two-dimensional
 * Cayley-Klein spaces of constant curvature kappa1 and metric signature
 * parameter kappa2.
 *
 * C API conventions:
 *   - every fallible function returns a cko_status (CKO_OK == 0); outputs go
 *     through pointers and are untouched on failure
 *   - cko_last_error() returns a thread-local message for the most recent
 *     failure on the calling thread
 *   - trajectories are opaque handles released with cko_trajectory_free();
 *     strings returned through char** are released with cko_string_free()
 *
 * Coordinates: polar (r, phi) with r the geodesic distance to the origin;
 * parallel (u, y) along a base geodesic and its orthogonal. r/u/x carry the
 * curvature label kappa1, phi carries kappa2, y/v carry kappa1*kappa2.
 */

#ifndef CKOSCILLATOR_H
#define CKOSCILLATOR_H

#include <stddef.h>

#if defined(_WIN32)
#  ifdef CKO_BUILD_SHARED
#    define CKO_API __declspec(dllexport)
#  else
#    define CKO_API __declspec(dllimport)
#  endif
#else
#  define CKO_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cko_status {
    CKO_OK = 0,
    CKO_ERR_DOMAIN = 1,
    CKO_ERR_POLE = 2,
    CKO_ERR_OUT_OF_RANGE = 3,
    CKO_ERR_OUT_OF_CHART = 4,
    CKO_ERR_SINGULAR_CHART = 5,
    CKO_ERR_UNDEFINED_ANGLE = 6,
    CKO_ERR_INFINITE_WALL = 7,
    CKO_ERR_DEGENERATE = 8,
    CKO_ERR_NO_REAL_ORBIT = 9,
    CKO_ERR_OUTSIDE_BRANCH = 10,
    CKO_ERR_OPEN_ORBIT = 11,
    CKO_ERR_EMPTY_CURVE = 12,
    CKO_ERR_UNSUPPORTED = 13,
    CKO_ERR_NOT_PERIODIC = 14,
    CKO_ERR_STIFFNESS = 15,
    CKO_ERR_INVALID_ARGUMENT = 16,
    CKO_ERR_INTERNAL = 17
} cko_status;

CKO_API const char* cko_version(void);
CKO_API const char* cko_status_name(int status);
CKO_API const char* cko_last_error(void);

/* ---- labelled trigonometry ------------------------------------------- */

CKO_API int cko_ck_cos(double kappa, double x, double* out);
CKO_API int cko_ck_sin(double kappa, double x, double* out);
CKO_API int cko_ck_tan(double kappa, double x, double* out);
/* principal (odd) inverses */
CKO_API int cko_ck_atan(double kappa, double t, double* out);
CKO_API int cko_ck_asin(double kappa, double s, double* out);

/* ---- spaces and charts ------------------------------------------------ */

enum {
    CKO_SPACE_SPHERE = 0,
    CKO_SPACE_EUCLIDEAN = 1,
    CKO_SPACE_HYPERBOLIC = 2,
    CKO_SPACE_CO_EUCLIDEAN = 3,
    CKO_SPACE_GALILEAN = 4,
    CKO_SPACE_CO_MINKOWSKIAN = 5,
    CKO_SPACE_ANTI_DE_SITTER = 6,
    CKO_SPACE_MINKOWSKIAN = 7,
    CKO_SPACE_DE_SITTER = 8
};

CKO_API int cko_space_kind(double kappa1, double kappa2, int* kind);
CKO_API const char* cko_space_kind_name(int kind);
CKO_API const char* cko_space_short_name(int kind);
/* resolve one of S2 E2 H2 ANH11 G11 NH11 AdS11 M11 dS11 */
CKO_API int cko_standard_space(const char* name, double* kappa1, double* kappa2);

typedef struct cko_space_info {
    int kind;
    double e_inf;  /* plateau energy w0^2/(-2 k1); valid iff has_e_inf */
    int has_e_inf;
    double j_inf;  /* momentum scale w0/(sqrt(k2)(-k1)); valid iff has_j_inf */
    int has_j_inf;
} cko_space_info;

CKO_API int cko_get_space_info(double kappa1, double kappa2, double omega0_sq,
                           cko_space_info* out);

CKO_API int cko_metric_polar(double kappa1, double kappa2, double r, double phi,
                             double* g11, double* g22);
CKO_API int cko_metric_parallel_uy(double kappa1, double kappa2, double u, double y,
                                   double* g11, double* g22);
CKO_API int cko_metric_parallel_xv(double kappa1, double kappa2, double x, double v,
                                   double* g11, double* g22);

CKO_API int cko_polar_to_parallel_uy(double kappa1, double kappa2, double r, double phi,
                                     double* u, double* y);
CKO_API int cko_parallel_uy_to_polar(double kappa1, double kappa2, double u, double y,
                                     double* r, double* phi);
CKO_API int cko_polar_to_parallel_xv(double kappa1, double kappa2, double r, double phi,
                                     double* x, double* v);
CKO_API int cko_parallel_xv_to_polar(double kappa1, double kappa2, double x, double v,
                                     double* r, double* phi);

/* components (X_P1, X_P2, X_J) as three (c1, c2) pairs */
CKO_API int cko_killing_fields_polar(double kappa1, double kappa2, double r, double phi,
                                     double out[6]);
CKO_API int cko_killing_fields_parallel(double kappa1, double kappa2, double u, double y,
                                        double out[6]);

/* ---- oscillator dynamics ---------------------------------------------- */

enum { CKO_CHART_POLAR = 0, CKO_CHART_PARALLEL_UY = 1 };

CKO_API int cko_potential(double kappa1, double kappa2, double omega0_sq, int chart,
                          double q1, double q2, double* out);
CKO_API int cko_accelerations(double kappa1, double kappa2, double omega0_sq, int chart,
                              double q1, double q2, double v1, double v2,
                              double* a1, double* a2);
CKO_API int cko_noether_momenta(double kappa1, double kappa2, int chart, double q1,
                                double q2, double v1, double v2, double* p1, double* p2,
                                double* j);
CKO_API int cko_energy(double kappa1, double kappa2, double omega0_sq, int chart,
                       double q1, double q2, double v1, double v2, double* out);
CKO_API int cko_fradkin(double kappa1, double kappa2, double omega0_sq, int chart,
                        double q1, double q2, double v1, double v2, double* f11,
                        double* f12, double* f22, double* j_sq);
/* state out: {q1, q2, v1, v2} in chart_to */
CKO_API int cko_convert_state(double kappa1, double kappa2, int chart_from, double q1,
                              double q2, double v1, double v2, int chart_to,
                              double out[4]);

/* ---- integration ------------------------------------------------------ */

typedef struct cko_trajectory cko_trajectory;

typedef struct cko_sim_options {
    double rel_tol;   /* default 1e-10 */
    double abs_tol;   /* default 1e-12 */
    double max_step;  /* 0 = unlimited */
    long max_steps;   /* default 2000000 */
    double sample_dt; /* 0 = record every accepted step */
    double r_floor;   /* polar-chart stop radius, default 1e-3 */
} cko_sim_options;

CKO_API void cko_sim_options_default(cko_sim_options* opt);

CKO_API int cko_simulate(double kappa1, double kappa2, double omega0_sq, int chart,
                         double q1, double q2, double v1, double v2, double t_end,
                         const cko_sim_options* opt, cko_trajectory** out);
CKO_API void cko_trajectory_free(cko_trajectory* traj);

typedef struct cko_sample {
    double t;
    int chart;
    double q1, q2, v1, v2;
    double p1, p2, j;
    double energy;
    double f11, f12, f22, j_sq;
} cko_sample;

CKO_API size_t cko_trajectory_size(const cko_trajectory* traj);
CKO_API int cko_trajectory_sample(const cko_trajectory* traj, size_t i, cko_sample* out);

enum {
    CKO_EVENT_RADIAL_MIN = 0,
    CKO_EVENT_RADIAL_MAX = 1,
    CKO_EVENT_AXIS_CROSSING = 2,
    CKO_EVENT_CHART_BOUNDARY = 3
};

typedef struct cko_event {
    double t;
    int kind;
    int chart;
    double q1, q2, v1, v2;
} cko_event;

CKO_API size_t cko_trajectory_event_count(const cko_trajectory* traj);
CKO_API int cko_trajectory_event(const cko_trajectory* traj, size_t i, cko_event* out);
CKO_API int cko_trajectory_hit_boundary(const cko_trajectory* traj);

typedef struct cko_drift {
    double energy, j, f11, f12, f22;
} cko_drift;

CKO_API int cko_trajectory_drift(const cko_trajectory* traj, cko_drift* out);
CKO_API int cko_radial_period_measured(const cko_trajectory* traj, double* out);
CKO_API int cko_full_period_measured(double kappa1, double kappa2,
                                     const cko_trajectory* traj, double* out);

/* ---- orbits ------------------------------------------------------------ */

typedef struct cko_orbit {
    double d, g, phi0;
    double a_sq, b_sq;
    double e_p, e1, e2;
} cko_orbit;

enum {
    CKO_ORBIT_CIRCLE = 0,
    CKO_ORBIT_ELLIPSE = 1,
    CKO_ORBIT_EQUIDISTANT = 2,
    CKO_ORBIT_ULTRAELLIPSE = 3,
    CKO_ORBIT_STRAIGHT_LINE = 4,
    CKO_ORBIT_UNBOUNDED_LOW_J = 5,
    CKO_ORBIT_UNBOUNDED_HIGH_J = 6,
    CKO_ORBIT_FORBIDDEN = 7,
    CKO_ORBIT_LORENTZIAN_UNCLASSIFIED = 8
};

typedef struct cko_orbit_class {
    int tag;
    double e_min; /* NaN when no minimum exists */
    double e_inf; /* NaN unless kappa1 < 0 */
    double j_inf; /* NaN unless kappa1 < 0 */
    double r_m;
    int has_r_m;
    double r_min;
    int has_r_min;
    double r_max;
    int has_r_max;
} cko_orbit_class;

CKO_API const char* cko_orbit_tag_name(int tag);

CKO_API int cko_effective_potential(double kappa1, double kappa2, double omega0_sq,
                                    double j, double r, double* out);
CKO_API int cko_classify(double kappa1, double kappa2, double omega0_sq, double e,
                         double j, cko_orbit_class* out);
CKO_API int cko_orbit_from_ej(double kappa1, double kappa2, double omega0_sq, double e,
                              double j, double phi0, cko_orbit* out);
CKO_API int cko_orbit_from_state(double kappa1, double kappa2, double omega0_sq,
                                 int chart, double q1, double q2, double v1, double v2,
                                 cko_orbit* out);
CKO_API int cko_orbit_radius(double kappa1, double kappa2, const cko_orbit* orbit,
                             double phi, double* r, int* at_infinity);
/* Binet-equation residual of the closed-form orbit at phi */
CKO_API int cko_binet_residual(double kappa1, double kappa2, double omega0_sq, double j,
                               const cko_orbit* orbit, double phi, double* out);
CKO_API int cko_period(double kappa1, double kappa2, double omega0_sq, double e,
                       double* out);

/* ---- conics ------------------------------------------------------------ */

enum {
    CKO_CONIC_CIRCLE = 0,
    CKO_CONIC_ELLIPSE = 1,
    CKO_CONIC_ULTRAELLIPSE = 2,
    CKO_CONIC_EQUIDISTANT = 3,
    CKO_CONIC_LINE = 4
};

enum {
    CKO_MAJOR_SEMIAXIS = 0,
    CKO_MAJOR_ULTRA_SEMIAXIS = 1,
    CKO_MAJOR_INFINITE = 2
};

typedef struct cko_conic {
    int kind;
    int major_kind;
    double major; /* a, a~, or +inf */
    double b;
    double focal_half_separation; /* valid iff has_focal */
    int has_focal;
} cko_conic;

CKO_API const char* cko_conic_kind_name(int kind);
CKO_API int cko_conic_from_AB(double kappa1, double kappa2, double a_sq, double b_sq,
                              cko_conic* out);
CKO_API int cko_physical_from_conic(double kappa1, double kappa2, double omega0_sq,
                                    const cko_conic* conic, double* e1, double* e2,
                                    double* j, double* e);

/* ---- rendering ---------------------------------------------------------- */

enum {
    CKO_PROJ_DEFAULT = -1,
    CKO_PROJ_BELTRAMI = 0,
    CKO_PROJ_POINCARE_DISK = 1,
    CKO_PROJ_ORTHOGRAPHIC = 2,
    CKO_PROJ_PLANAR = 3
};

CKO_API int cko_project(double kappa1, double kappa2, int projection, double scale,
                        double r, double phi, double* X, double* Y, int* clipped);

CKO_API void cko_string_free(char* s);

/* svg/csv may each be NULL when not wanted */
CKO_API int cko_figure_potential_family(const double* kappa1_values, size_t n,
                                        double omega0_sq, double r_max, char** svg,
                                        char** csv);
CKO_API int cko_figure_effective_family(double kappa1, double kappa2, double omega0_sq,
                                        const double* j_values, size_t n, double r_min,
                                        double r_max, char** svg, char** csv);
CKO_API int cko_figure_orbit_family(double kappa1, double kappa2, double omega0_sq,
                                    double b, int n_each, char** svg, char** csv);
CKO_API int cko_render_orbit(double kappa1, double kappa2, const cko_orbit* orbit,
                             int projection, double phi_begin, double phi_end, int n,
                             char** svg, char** csv);
CKO_API int cko_render_trajectory(double kappa1, double kappa2,
                                  const cko_trajectory* traj, int projection, char** svg,
                                  char** csv);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* CKOSCILLATOR_H */
