#include "ckosc/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace ckosc {

namespace {

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

std::string fmt_csv(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                          "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

// Angular direction on the drawing plane: unit circle for k2 > 0, the
// (cosh, sinh) hyperbola parametrisation for k2 < 0 (isotropes at 45 deg).
std::array<double, 2> angle_dir(const CKParams& p, double phi) {
    if (p.kappa2 > 0.0) {
        const double a = std::sqrt(p.kappa2) * phi;
        return {std::cos(a), std::sin(a)};
    }
    if (p.kappa2 == 0.0) return {1.0, phi};
    const double a = std::sqrt(-p.kappa2) * phi;
    return {std::cosh(a), std::sinh(a)};
}

} // namespace

Projection default_projection(const CKParams& p) {
    if (p.kappa2 > 0.0) {
        if (p.kappa1 > 0.0) return {ProjectionKind::Orthographic, 1.0};
        if (p.kappa1 < 0.0) return {ProjectionKind::PoincareDisk, 1.0};
        return {ProjectionKind::Planar, 1.0};
    }
    if (p.kappa1 == 0.0) return {ProjectionKind::Planar, 1.0};
    return {ProjectionKind::Beltrami, 1.0};
}

const char* projection_kind_name(ProjectionKind k) {
    switch (k) {
        case ProjectionKind::Beltrami: return "beltrami";
        case ProjectionKind::PoincareDisk: return "poincare-disk";
        case ProjectionKind::Orthographic: return "orthographic";
        case ProjectionKind::Planar: return "planar";
    }
    return "unknown";
}

std::optional<std::array<double, 2>> project(const CKParams& p, const Projection& proj,
                                             const PolarPoint& pt) {
    const auto dir = angle_dir(p, pt.phi);
    double rho;
    switch (proj.kind) {
        case ProjectionKind::Planar:
            if (p.kappa1 != 0.0)
                throw_error(ErrorKind::InvalidArgument, "planar projection needs kappa1 = 0");
            rho = pt.r;
            break;
        case ProjectionKind::Beltrami: {
            if (p.kappa1 > 0.0 && std::abs(pt.r) >= ck_tan_pole(p.kappa1)) return std::nullopt;
            rho = ck_tan(p.radial(), pt.r);
            break;
        }
        case ProjectionKind::Orthographic: {
            if (!(p.kappa1 > 0.0))
                throw_error(ErrorKind::InvalidArgument,
                            "orthographic projection needs kappa1 > 0");
            if (std::abs(pt.r) > ck_tan_pole(p.kappa1)) return std::nullopt; // far hemisphere
            rho = std::sqrt(p.kappa1) * ck_sin(p.radial(), pt.r);
            break;
        }
        case ProjectionKind::PoincareDisk: {
            if (!(p.kappa1 < 0.0))
                throw_error(ErrorKind::InvalidArgument,
                            "Poincare disk projection needs kappa1 < 0");
            const double rk = std::sqrt(-p.kappa1);
            rho = std::tanh(rk * pt.r / 2.0);
            // tanh rounds to +-1 for far points; keep the image in the
            // open disk.
            constexpr double kJustInside = 1.0 - 1.1e-16;
            rho = std::clamp(rho, -kJustInside, kJustInside);
            break;
        }
        default:
            throw_error(ErrorKind::InvalidArgument, "bad projection");
    }
    if (!std::isfinite(rho)) return std::nullopt;
    return std::array<double, 2>{proj.scale * rho * dir[0], proj.scale * rho * dir[1]};
}

OrbitRadius conic_radius(const CKParams& p, const ConicGeometry& c, double phi) {
    double inv_a2;
    switch (c.major_kind) {
        case MajorKind::Semiaxis: {
            const double ta = ck_tan(p.radial(), c.major);
            inv_a2 = 1.0 / (ta * ta);
            break;
        }
        case MajorKind::UltraSemiaxis: {
            const double ta = ck_tan(p.radial(), c.major);
            inv_a2 = p.kappa1 * p.kappa1 * ta * ta;
            break;
        }
        case MajorKind::Infinite:
            inv_a2 = -p.kappa1;
            break;
        default:
            throw_error(ErrorKind::InvalidArgument, "bad conic");
    }
    const double tb = ck_tan(p.ortho(), c.b);
    const double inv_b2 = 1.0 / (tb * tb);
    const double cphi = ck_cos(p.angular(), phi);
    const double sphi = ck_sin(p.angular(), phi);
    const double rhs = inv_a2 * cphi * cphi + inv_b2 * sphi * sphi;
    if (rhs <= 0.0)
        throw_error(ErrorKind::OutsideBranch, "no real radius at this angle", rhs);
    if (p.kappa1 < 0.0 && rhs <= -p.kappa1)
        return {std::numeric_limits<double>::infinity(), true};
    return {ck_atan(p.radial(), 1.0 / std::sqrt(rhs)), false};
}

namespace {

template <typename RadiusFn>
ProjectedCurve sample_radius_curve(const CKParams& p, const Projection& proj,
                                   std::string label, double phi0, double phi1, int n,
                                   RadiusFn&& radius) {
    ProjectedCurve c;
    c.label = std::move(label);
    for (int i = 0; i <= n; ++i) {
        const double phi = phi0 + (phi1 - phi0) * i / n;
        try {
            const OrbitRadius orr = radius(phi);
            if (orr.at_infinity) {
                c.push_gap(phi);
                continue;
            }
            const auto xy = project(p, proj, {orr.r, phi});
            if (xy)
                c.push(phi, (*xy)[0], (*xy)[1]);
            else
                c.push_gap(phi);
        } catch (const Error&) {
            c.push_gap(phi);
        }
    }
    return c;
}

} // namespace

ProjectedCurve sample_orbit(const CKParams& p, const Projection& proj,
                            const OrbitSolution& sol, std::string label,
                            double phi_begin, double phi_end, int n) {
    return sample_radius_curve(p, proj, std::move(label), phi_begin, phi_end, n,
                               [&](double phi) { return orbit_radius(p, sol, phi); });
}

ProjectedCurve sample_conic(const CKParams& p, const Projection& proj,
                            const ConicGeometry& c, std::string label, int n) {
    double span = ck_period(p.kappa2);
    if (!std::isfinite(span)) span = 8.0;
    return sample_radius_curve(p, proj, std::move(label), 0.0, span, n,
                               [&](double phi) { return conic_radius(p, c, phi); });
}

ProjectedCurve sample_trajectory(const CKParams& p, const Projection& proj,
                                 const Trajectory& traj, std::string label) {
    ProjectedCurve c;
    c.label = std::move(label);
    for (const auto& s : traj.samples) {
        try {
            const PolarPoint pos = polar_position(p, s.state);
            const auto xy = project(p, proj, pos);
            if (xy)
                c.push(s.t, (*xy)[0], (*xy)[1]);
            else
                c.push_gap(s.t);
        } catch (const Error&) {
            c.push_gap(s.t);
        }
    }
    return c;
}

FigureDocument emit_figure(const std::vector<ProjectedCurve>& curves,
                           const FigureStyle& style) {
    if (curves.empty())
        throw_error(ErrorKind::InvalidArgument, "emit_figure needs at least one curve");

    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    if (style.fixed_extent > 0.0) {
        xmin = ymin = -style.fixed_extent;
        xmax = ymax = style.fixed_extent;
    } else {
        for (const auto& c : curves)
            for (size_t i = 0; i < c.x.size(); ++i) {
                if (!std::isfinite(c.x[i]) || !std::isfinite(c.y[i])) continue;
                xmin = std::min(xmin, c.x[i]);
                xmax = std::max(xmax, c.x[i]);
                ymin = std::min(ymin, c.y[i]);
                ymax = std::max(ymax, c.y[i]);
            }
        if (!(xmin < xmax)) { xmin -= 0.5; xmax += 0.5; }
        if (!(ymin < ymax)) { ymin -= 0.5; ymax += 0.5; }
        const double padx = 0.04 * (xmax - xmin), pady = 0.04 * (ymax - ymin);
        xmin -= padx; xmax += padx; ymin -= pady; ymax += pady;
    }

    const double W = style.width, H = style.height, m = style.margin;
    auto px = [&](double x) { return m + (x - xmin) / (xmax - xmin) * (W - 2 * m); };
    auto py = [&](double y) { return H - m - (y - ymin) / (ymax - ymin) * (H - 2 * m); };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(style.width) + "\" height=\"" + std::to_string(style.height) +
           "\" viewBox=\"0 0 " + std::to_string(style.width) + " " +
           std::to_string(style.height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!style.title.empty())
        svg += "<text x=\"" + fmt(W / 2) + "\" y=\"24\" text-anchor=\"middle\" "
               "font-family=\"sans-serif\" font-size=\"15\">" + style.title + "</text>\n";

    if (style.draw_axes) {
        if (xmin < 0.0 && xmax > 0.0)
            svg += "<line x1=\"" + fmt(px(0)) + "\" y1=\"" + fmt(py(ymin)) + "\" x2=\"" +
                   fmt(px(0)) + "\" y2=\"" + fmt(py(ymax)) +
                   "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
        if (ymin < 0.0 && ymax > 0.0)
            svg += "<line x1=\"" + fmt(px(xmin)) + "\" y1=\"" + fmt(py(0)) + "\" x2=\"" +
                   fmt(px(xmax)) + "\" y2=\"" + fmt(py(0)) +
                   "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    }
    if (style.draw_disk_boundary) {
        const double rx = px(1.0) - px(0.0);
        svg += "<circle cx=\"" + fmt(px(0)) + "\" cy=\"" + fmt(py(0)) + "\" r=\"" + fmt(rx) +
               "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1.2\"/>\n";
    }

    std::string csv = "curve_label,t_or_phi,X,Y\n";
    int color_idx = 0;
    double legend_y = 40.0;
    for (const auto& c : curves) {
        const std::string color =
            c.color.empty() ? kPalette[color_idx++ % 10] : c.color;
        std::string d;
        bool pen_down = false;
        for (size_t i = 0; i < c.x.size(); ++i) {
            const bool ok = std::isfinite(c.x[i]) && std::isfinite(c.y[i]);
            if (!ok) {
                pen_down = false;
                continue;
            }
            d += (pen_down ? " L " : " M ") + fmt(px(c.x[i])) + " " + fmt(py(c.y[i]));
            pen_down = true;
            csv += c.label + "," + fmt_csv(c.param[i]) + "," + fmt_csv(c.x[i]) + "," +
                   fmt_csv(c.y[i]) + "\n";
        }
        if (!d.empty())
            svg += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color +
                   "\" stroke-width=\"" + fmt(style.stroke_width) + "\"/>\n";
        svg += "<text x=\"" + fmt(W - m - 150.0) + "\" y=\"" + fmt(legend_y) +
               "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" + color + "\">" +
               c.label + "</text>\n";
        legend_y += 16.0;
    }
    svg += "</svg>\n";
    return {svg, csv};
}

FigureDocument figure_potential_family(const std::vector<double>& kappa1_values,
                                       double omega0_sq, double r_max, int n) {
    std::vector<ProjectedCurve> curves;
    for (double k1 : kappa1_values) {
        CKParams p(k1, 1.0);
        Oscillator osc(omega0_sq);
        ProjectedCurve c;
        char lab[48];
        std::snprintf(lab, sizeof(lab), "kappa1=%g", k1);
        c.label = lab;
        const double top = k1 > 0.0 ? std::min(r_max, ck_tan_pole(k1) * (1.0 - 1e-6))
                                    : r_max;
        for (int i = 0; i <= n; ++i) {
            const double r = top * i / n;
            double v;
            try {
                v = ho_potential(p, osc, {r, 0.0});
            } catch (const Error&) {
                c.push_gap(r);
                continue;
            }
            if (v > 12.0) { // clip the wall so the family stays readable
                c.push_gap(r);
                continue;
            }
            c.push(r, r, v);
        }
        curves.push_back(std::move(c));
    }
    FigureStyle style;
    style.title = "harmonic potential V(r) across curvatures";
    style.width = 760;
    style.height = 560;
    return emit_figure(curves, style);
}

FigureDocument figure_effective_potential_family(const CKParams& p, const Oscillator& osc,
                                                 const std::vector<double>& j_values,
                                                 double r_min, double r_max, int n) {
    std::vector<ProjectedCurve> curves;
    for (double j : j_values) {
        ProjectedCurve c;
        char lab[48];
        std::snprintf(lab, sizeof(lab), "J=%g", j);
        c.label = lab;
        for (int i = 0; i <= n; ++i) {
            const double r = r_min + (r_max - r_min) * i / n;
            try {
                const double v = effective_potential(p, osc, j, r);
                if (v > 12.0) {
                    c.push_gap(r);
                    continue;
                }
                c.push(r, r, v);
            } catch (const Error&) {
                c.push_gap(r);
            }
        }
        curves.push_back(std::move(c));
    }
    FigureStyle style;
    style.title = "effective radial potential";
    style.width = 760;
    style.height = 560;
    return emit_figure(curves, style);
}

FigureDocument figure_orbit_family(const CKParams& p, const Oscillator& osc, double b,
                                   int n_each) {
    (void)osc;
    if (!(p.kappa1 < 0.0) || !(p.kappa2 > 0.0))
        throw_error(ErrorKind::Unsupported, "orbit family figure is drawn for kappa1 < 0");
    const Projection proj = default_projection(p);
    std::vector<ProjectedCurve> curves;

    // Circle a = b.
    {
        auto c = sample_conic(p, proj, circle_at(b), "circle a=b");
        c.color = "#2ca02c";
        curves.push_back(std::move(c));
    }
    // Ellipses with a growing away from b.
    for (int i = 1; i <= n_each; ++i) {
        const double a = b + 0.35 * i;
        ConicGeometry cg{ConicKind::Ellipse, MajorKind::Semiaxis, a, b, std::nullopt};
        char lab[48];
        std::snprintf(lab, sizeof(lab), "ellipse a=%.2f", a);
        auto c = sample_conic(p, proj, cg, lab);
        c.color = "#1f77b4";
        curves.push_back(std::move(c));
    }
    // Equidistant (a -> infinity).
    {
        auto c = sample_conic(p, proj, equidistant_at(b), "equidistant");
        c.color = "#d62728";
        curves.push_back(std::move(c));
    }
    // Ultraellipses with a~ decreasing toward the line.
    for (int i = n_each; i >= 1; --i) {
        const double at = 0.35 * i;
        ConicGeometry cg{ConicKind::Ultraellipse, MajorKind::UltraSemiaxis, at, b,
                         std::nullopt};
        char lab[48];
        std::snprintf(lab, sizeof(lab), "ultraellipse a~=%.2f", at);
        auto c = sample_conic(p, proj, cg, lab);
        c.color = "#1f77b4";
        curves.push_back(std::move(c));
    }
    // Straight-line limit a~ = 0.
    {
        ConicGeometry cg{ConicKind::Ultraellipse, MajorKind::UltraSemiaxis, 0.0, b,
                         std::nullopt};
        auto c = sample_conic(p, proj, cg, "line a~=0");
        c.color = "#d600d6";
        curves.push_back(std::move(c));
    }

    FigureStyle style;
    style.title = "orbit family at fixed minor semiaxis";
    style.draw_disk_boundary = proj.kind == ProjectionKind::PoincareDisk;
    style.fixed_extent = 1.06;
    style.draw_axes = false;
    return emit_figure(curves, style);
}

} // namespace ckosc
