#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ckosc/conics.hpp"
#include "ckosc/integrator.hpp"
#include "ckosc/orbits.hpp"

namespace ckosc {

enum class ProjectionKind { Beltrami, PoincareDisk, Orthographic, Planar };

struct Projection {
    ProjectionKind kind;
    double scale = 1.0;
};

// Sensible drawing model per space: Planar (k1 = 0), Orthographic disk
// (k1 > 0, k2 > 0), Poincare disk (k1 < 0, k2 > 0), Beltrami for the
// Lorentzian spaces (time-like region, isotropes at +-45 degrees).
Projection default_projection(const CKParams& p);

const char* projection_kind_name(ProjectionKind k);

// Point projection; empty when the point leaves the projection's domain
// (the caller clips the polyline there).
std::optional<std::array<double, 2>> project(const CKParams& p, const Projection& proj,
                                             const PolarPoint& pt);

// A projected polyline. NaN coordinates split the SVG path (clipped
// segments); param carries the drawing parameter (t or phi) into the CSV.
struct ProjectedCurve {
    std::string label;
    std::string color; // empty = take from the palette
    std::vector<double> param;
    std::vector<double> x;
    std::vector<double> y;

    void push(double par, double px, double py) {
        param.push_back(par);
        x.push_back(px);
        y.push_back(py);
    }
    void push_gap(double par) {
        push(par, std::numeric_limits<double>::quiet_NaN(),
             std::numeric_limits<double>::quiet_NaN());
    }
};

struct FigureStyle {
    int width = 720;
    int height = 720;
    double margin = 48.0;
    double stroke_width = 1.4;
    std::string title;
    bool draw_axes = true;
    bool draw_disk_boundary = false; // set for disk projections
    // Fixed data half-extent (viewBox per projection); 0 = fit to data.
    double fixed_extent = 0.0;
};

struct FigureDocument {
    std::string svg;
    std::string csv; // curve_label,t_or_phi,X,Y
};

// Render labelled curves to a standalone SVG 1.1 document plus the raw
// sample CSV. Deterministic output: fixed decimal formatting throughout.
FigureDocument emit_figure(const std::vector<ProjectedCurve>& curves,
                           const FigureStyle& style);

// Radius of a conic at angle phi (shared sampling path for orbit drawing).
OrbitRadius conic_radius(const CKParams& p, const ConicGeometry& c, double phi);

// Closed-form orbit sampled uniformly in phi (512 points per angular
// period) and projected.
ProjectedCurve sample_orbit(const CKParams& p, const Projection& proj,
                            const OrbitSolution& sol, std::string label,
                            double phi_begin, double phi_end, int n = 512);

ProjectedCurve sample_conic(const CKParams& p, const Projection& proj,
                            const ConicGeometry& c, std::string label,
                            int n = 512);

ProjectedCurve sample_trajectory(const CKParams& p, const Projection& proj,
                                 const Trajectory& traj, std::string label);

// Canned figures.
// Potential profiles V(r) for several curvatures at fixed omega0^2.
FigureDocument figure_potential_family(const std::vector<double>& kappa1_values,
                                       double omega0_sq, double r_max, int n = 256);
// Effective radial potentials for several J at fixed space/oscillator.
FigureDocument figure_effective_potential_family(const CKParams& p, const Oscillator& osc,
                                                 const std::vector<double>& j_values,
                                                 double r_min, double r_max, int n = 256);
// Conic family with fixed minor semiaxis b: circle, ellipses, equidistant,
// ultraellipses, and the a~ = 0 line, drawn in the space's default model.
FigureDocument figure_orbit_family(const CKParams& p, const Oscillator& osc, double b,
                                   int n_each = 7);

} // namespace ckosc
