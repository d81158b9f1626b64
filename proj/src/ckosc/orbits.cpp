#include "ckosc/orbits.hpp"

#include <cmath>

namespace ckosc {

namespace {

constexpr double kThresholdRelTol = 1e-12;

bool nearly(double a, double b) {
    return std::abs(a - b) <= kThresholdRelTol * std::max({1.0, std::abs(a), std::abs(b)});
}

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

std::optional<double> try_atan(const CKParams& p, double t) {
    try {
        return ck_atan(p.radial(), t);
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::OutOfRange) return std::nullopt;
        throw;
    }
}

// Turning points from the solution constants: T(r_max) = A, T(r_min) = B
// (absent when the corresponding tangent value leaves the space).
void attach_turning_points(const CKParams& p, const Oscillator& osc, double e, double j,
                           OrbitClass& out) {
    const OrbitSolution sol = orbit_from_ej(p, osc, e, j, 0.0);
    if (sol.b_sq > 0.0) out.r_min = try_atan(p, std::sqrt(sol.b_sq));
    if (sol.a_sq > 0.0) out.r_max = try_atan(p, std::sqrt(sol.a_sq));
}

} // namespace

const char* orbit_tag_name(OrbitTag tag) {
    switch (tag) {
        case OrbitTag::Circle: return "Circle";
        case OrbitTag::Ellipse: return "Ellipse";
        case OrbitTag::Equidistant: return "Equidistant";
        case OrbitTag::Ultraellipse: return "Ultraellipse";
        case OrbitTag::StraightLine: return "StraightLine";
        case OrbitTag::UnboundedLowJ: return "UnboundedLowJ";
        case OrbitTag::UnboundedHighJ: return "UnboundedHighJ";
        case OrbitTag::Forbidden: return "Forbidden";
        case OrbitTag::LorentzianUnclassified: return "LorentzianUnclassified";
    }
    return "unknown";
}

double effective_potential(const CKParams& p, const Oscillator& osc, double j, double r) {
    const double c = ck_cos(p.radial(), r);
    const double s = ck_sin(p.radial(), r);
    if (std::abs(c) < kPoleEps)
        throw_error(ErrorKind::Pole, "effective potential pole: C(r) = 0",
                    ck_tan_pole(p.kappa1));
    if (std::abs(s) < kPoleEps && j != 0.0)
        throw_error(ErrorKind::Pole, "effective potential pole: S(r) = 0", 0.0);
    const double t = s / c;
    const double centrifugal = j == 0.0 ? 0.0 : p.kappa2 * j * j / (2.0 * s * s);
    return 0.5 * osc.omega0_sq * t * t + centrifugal;
}

OrbitClass classify(const CKParams& p, const Oscillator& osc, double e, double j) {
    if (p.kappa2 == 0.0)
        throw_error(ErrorKind::Unsupported, "classification undefined for kappa2 = 0");
    if (!(osc.omega0_sq > 0.0))
        throw_error(ErrorKind::Unsupported,
                    "classification requires omega0^2 > 0 (solution itself does not)");

    OrbitClass out;
    out.e_min = std::numeric_limits<double>::quiet_NaN();
    out.e_inf = std::numeric_limits<double>::quiet_NaN();
    out.j_inf = std::numeric_limits<double>::quiet_NaN();

    if (p.kappa2 < 0.0) {
        out.tag = OrbitTag::LorentzianUnclassified;
        return out;
    }

    const double w0 = osc.omega0();
    const double rk2 = std::sqrt(p.kappa2);
    const double aj = std::abs(j);
    const double k1 = p.kappa1;

    if (k1 < 0.0) {
        out.e_inf = osc.omega0_sq / (-2.0 * k1);
        out.j_inf = w0 / (rk2 * (-k1));
    }

    const bool has_min = k1 >= 0.0 || aj < out.j_inf;
    if (has_min) out.e_min = rk2 * w0 * aj + 0.5 * k1 * p.kappa2 * j * j;

    if (j == 0.0) {
        // One-dimensional motion along a geodesic through the origin.
        if (e < 0.0 && !nearly(e, 0.0)) {
            out.tag = OrbitTag::Forbidden;
            return out;
        }
        if (nearly(e, 0.0)) {
            out.tag = OrbitTag::Circle; // rest at the origin
            out.r_m = 0.0;
            return out;
        }
        out.tag = OrbitTag::StraightLine;
        out.r_min = 0.0;
        out.r_max = try_atan(p, std::sqrt(2.0 * e) / w0);
        return out;
    }

    if (has_min) {
        if (e < out.e_min && !nearly(e, out.e_min)) {
            out.tag = OrbitTag::Forbidden;
            return out;
        }
        if (nearly(e, out.e_min)) {
            out.tag = OrbitTag::Circle;
            out.r_m = ck_atan(p.radial(), std::sqrt(rk2 * aj / w0));
            return out;
        }
        if (k1 >= 0.0 || (e < out.e_inf && !nearly(e, out.e_inf))) {
            out.tag = OrbitTag::Ellipse;
            attach_turning_points(p, osc, e, j, out);
            return out;
        }
        if (nearly(e, out.e_inf)) {
            out.tag = OrbitTag::Equidistant;
            attach_turning_points(p, osc, e, j, out);
            return out;
        }
        out.tag = OrbitTag::Ultraellipse;
        attach_turning_points(p, osc, e, j, out);
        return out;
    }

    // kappa1 < 0 with J >= J_inf: no minimum, plateau at E_inf; energies
    // below the plateau cannot occur, the threshold orbit is unbounded.
    if (e < out.e_inf && !nearly(e, out.e_inf)) {
        out.tag = OrbitTag::Forbidden;
        return out;
    }
    if (nearly(e, out.e_inf)) {
        out.tag = OrbitTag::UnboundedHighJ;
        attach_turning_points(p, osc, e, j, out);
        return out;
    }
    out.tag = OrbitTag::Ultraellipse;
    attach_turning_points(p, osc, e, j, out);
    return out;
}

OrbitSolution orbit_from_ej(const CKParams& p, const Oscillator& osc, double e, double j,
                            double phi0) {
    if (p.kappa2 == 0.0)
        throw_error(ErrorKind::Degenerate, "orbit constants divide by kappa2 J^2");
    if (j == 0.0)
        throw_error(ErrorKind::Degenerate, "orbit constants undefined at J = 0");

    const double kj2 = p.kappa2 * j * j;
    const double e_p = e - 0.5 * p.kappa1 * kj2;
    double disc = e_p * e_p - p.kappa2 * osc.omega0_sq * j * j;
    const double scale = std::max(1.0, e_p * e_p);
    if (disc < 0.0) {
        if (disc > -1e-14 * scale)
            disc = 0.0; // exact circle hit within roundoff
        else
            throw_error(ErrorKind::NoRealOrbit,
                        "E below the effective-potential minimum for this J", disc);
    }

    OrbitSolution sol;
    sol.phi0 = phi0;
    sol.d = e_p / kj2;
    double g_mag = std::sqrt(disc) / std::abs(kj2);
    if (p.kappa2 > 0.0) {
        sol.g = g_mag;
    } else {
        // Lorentzian: C_k2 is a cosh; of the two branches D -+ |G| cosh only
        // one passes through real radii. v^2 at the axis is D - g, so take
        // the nonnegative-G branch when it is nonempty, the other otherwise.
        sol.g = (sol.d - g_mag > 0.0) ? g_mag : -g_mag;
    }
    sol.e_p = e_p;
    sol.a_sq = 1.0 / (sol.d - sol.g);
    sol.b_sq = 1.0 / (p.kappa2 * (sol.d + sol.g));
    sol.e1 = 0.5 * osc.omega0_sq * sol.a_sq;
    sol.e2 = 0.5 * osc.omega0_sq * sol.b_sq;
    return sol;
}

OrbitSolution orbit_from_state(const CKParams& p, const Oscillator& osc, const PhaseState& s) {
    const NoetherMomenta m = noether_momenta(p, s);
    const double e = energy(p, osc, s);
    if (m.j == 0.0)
        throw_error(ErrorKind::Degenerate, "orbit fit undefined at J = 0");

    OrbitSolution sol = orbit_from_ej(p, osc, e, m.j, 0.0);

    const PolarPoint pos = polar_position(p, s);
    const double tr = ck_tan(p.radial(), pos.r);
    const double chi = 1.0 / (tr * tr);

    if (p.kappa2 < 0.0) {
        // Resolve the branch from the state: chi > D can only sit on the
        // +|G| cosh branch.
        const double g_mag = std::abs(sol.g);
        sol.g = chi > sol.d ? -g_mag : g_mag;
        sol.a_sq = 1.0 / (sol.d - sol.g);
        sol.b_sq = 1.0 / (p.kappa2 * (sol.d + sol.g));
        sol.e1 = 0.5 * osc.omega0_sq * sol.a_sq;
        sol.e2 = 0.5 * osc.omega0_sq * sol.b_sq;
    }

    if (sol.g == 0.0) return sol; // circle: phi0 immaterial, keep 0

    // Angle offset: C_k2(2(phi_s - phi0)) = (D - chi)/g, orientation fixed by
    // the signs of dr/dt, T(r) and J.
    const PhaseState sp = s.chart == Chart::Polar ? s : convert_state(p, s, Chart::Polar);
    const double rdot_sign = sgn(sp.v1);
    const double t_sign = sgn(tr);
    const double cval = (sol.d - chi) / sol.g;
    double psi;
    if (p.kappa2 > 0.0) {
        const double rk2 = std::sqrt(p.kappa2);
        const double theta = std::acos(std::clamp(cval, -1.0, 1.0));
        const double sin_sign = -rdot_sign * t_sign * sgn(m.j) * sgn(sol.g);
        psi = (sin_sign >= 0.0 ? theta : -theta) / (2.0 * rk2);
    } else {
        const double rk2 = std::sqrt(-p.kappa2);
        const double theta = std::acosh(std::max(1.0, cval));
        const double sinh_sign = rdot_sign * t_sign * sgn(m.j) * sgn(sol.g);
        psi = (sinh_sign >= 0.0 ? theta : -theta) / (2.0 * rk2);
    }
    sol.phi0 = pos.phi - psi;
    return sol;
}

OrbitRadius orbit_radius(const CKParams& p, const OrbitSolution& sol, double phi) {
    const double psi2 = 2.0 * (phi - sol.phi0);
    const double rhs = sol.d - sol.g * ck_cos(p.angular(), psi2);
    if (rhs <= 0.0)
        throw_error(ErrorKind::OutsideBranch,
                    "no real radius at this angle (1/T^2 <= 0)", rhs);
    if (p.kappa1 < 0.0 && rhs <= -p.kappa1)
        return {std::numeric_limits<double>::infinity(), true};
    return {ck_atan(p.radial(), 1.0 / std::sqrt(rhs)), false};
}

double binet_residual(const CKParams& p, const Oscillator& osc, double j,
                      const std::function<double(double)>& radius_fn, double phi) {
    if (j == 0.0)
        throw_error(ErrorKind::Degenerate, "Binet equation undefined at J = 0");
    constexpr double h = 1e-4;
    auto upsilon = [&](double ph) { return 1.0 / ck_tan(p.radial(), radius_fn(ph)); };
    const double u0 = upsilon(phi);
    const double um = upsilon(phi - h);
    const double up = upsilon(phi + h);
    const double d2 = (up - 2.0 * u0 + um) / (h * h);
    return std::abs(d2 + p.kappa2 * u0 - (osc.omega0_sq / (j * j)) / (u0 * u0 * u0));
}

double fradkin_orbit_residual(const CKParams& p, const FradkinTensor& f,
                              const ParallelPointUY& at) {
    const double lam = ck_tan(p.radial(), at.u);
    const double mu = ck_tan(p.ortho(), at.y) / ck_cos(p.radial(), at.u);
    return std::abs(f.f22 * lam * lam - 2.0 * f.f12 * lam * mu + f.f11 * mu * mu - f.j_sq);
}

double period(const CKParams& p, const Oscillator& osc, double e) {
    if (!(osc.omega0_sq > 0.0))
        throw_error(ErrorKind::Unsupported, "period requires omega0^2 > 0");
    if (!(p.kappa2 > 0.0))
        throw_error(ErrorKind::Unsupported, "period formula applies to kappa2 > 0");
    const double radicand = 1.0 + 2.0 * p.kappa1 * e / osc.omega0_sq;
    if (radicand <= 0.0)
        throw_error(ErrorKind::OpenOrbit,
                    "orbit is not closed at this energy (E >= E_inf)", radicand);
    return 2.0 * M_PI / osc.omega0() / std::sqrt(radicand);
}

double orbit_energy(const CKParams& p, const Oscillator& osc, const OrbitSolution& sol,
                    double j) {
    (void)osc;
    return sol.e1 + p.kappa2 * sol.e2 + 0.5 * p.kappa1 * p.kappa2 * j * j;
}

} // namespace ckosc
