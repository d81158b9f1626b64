#include "ckosc/render.hpp"

#include <cmath>

#include "test_util.hpp"

using namespace ckosc;
using testutil::check_close;
using testutil::uniform;

TEST_CASE("point projections") {
    const auto planar = project(CKParams(0, 1), {ProjectionKind::Planar, 1.0}, {2.0, M_PI});
    REQUIRE(planar.has_value());
    check_close((*planar)[0], -2.0, 1e-14);
    check_close((*planar)[1], 0.0, 1e-14);

    const auto disk0 = project(CKParams(-1, 1), {ProjectionKind::PoincareDisk, 1.0},
                               {0.0, 0.4});
    REQUIRE(disk0.has_value());
    check_close((*disk0)[0], 0.0, 0.0);
    check_close((*disk0)[1], 0.0, 0.0);

    const auto belt = project(CKParams(1, 1), {ProjectionKind::Beltrami, 1.0},
                              {M_PI / 4.0, 0.0});
    REQUIRE(belt.has_value());
    check_close((*belt)[0], 1.0, 1e-14);
    check_close((*belt)[1], 0.0, 1e-14);

    // Beltrami clips at the equator.
    CHECK(!project(CKParams(1, 1), {ProjectionKind::Beltrami, 1.0}, {1.6, 0.0}).has_value());

    // Poincare disk stays inside the unit circle, far points included.
    for (double r : {0.5, 2.0, 10.0, 40.0}) {
        const auto xy = project(CKParams(-1, 1), {ProjectionKind::PoincareDisk, 1.0},
                                {r, 1.1});
        REQUIRE(xy.has_value());
        CHECK((*xy)[0] * (*xy)[0] + (*xy)[1] * (*xy)[1] < 1.0);
    }

    CHECK_THROWS_AS(project(CKParams(1, 1), {ProjectionKind::Planar, 1.0}, {1.0, 0.0}),
                    Error);
}

TEST_CASE("default projections per space") {
    CHECK(default_projection(CKParams(1, 1)).kind == ProjectionKind::Orthographic);
    CHECK(default_projection(CKParams(0, 1)).kind == ProjectionKind::Planar);
    CHECK(default_projection(CKParams(-1, 1)).kind == ProjectionKind::PoincareDisk);
    CHECK(default_projection(CKParams(1, -1)).kind == ProjectionKind::Beltrami);
    CHECK(default_projection(CKParams(0, -1)).kind == ProjectionKind::Planar);
}

TEST_CASE("geodesics through the origin are straight diameters") {
    const CKParams p(-1, 1);
    for (double phi : {0.3, 1.2, 2.4}) {
        for (ProjectionKind kind : {ProjectionKind::PoincareDisk, ProjectionKind::Beltrami}) {
            const Projection proj{kind, 1.0};
            // Signed radius sweeps the full diameter.
            std::vector<std::array<double, 2>> pts;
            for (double r : testutil::linspace(-2.0, 2.0, 21)) {
                const auto xy = project(p, proj, {r, phi});
                REQUIRE(xy.has_value());
                pts.push_back(*xy);
            }
            for (size_t i = 2; i < pts.size(); ++i) {
                const double cross = (pts[i][0] - pts[0][0]) * (pts[1][1] - pts[0][1]) -
                                     (pts[i][1] - pts[0][1]) * (pts[1][0] - pts[0][0]);
                CHECK(std::abs(cross) < 1e-9);
            }
        }
    }
}

TEST_CASE("projections are injective on their domains") {
    struct Case {
        CKParams p;
        Projection proj;
        double rmax;
    };
    const std::vector<Case> cases = {
        {CKParams(-1, 1), {ProjectionKind::PoincareDisk, 1.0}, 3.0},
        {CKParams(-1, 1), {ProjectionKind::Beltrami, 1.0}, 3.0},
        {CKParams(1, 1), {ProjectionKind::Orthographic, 1.0}, 0.98 * M_PI / 2.0},
        {CKParams(0, 1), {ProjectionKind::Planar, 1.0}, 3.0},
    };
    for (const auto& c : cases) {
        for (int i = 0; i < 1000; ++i) {
            const PolarPoint a{uniform(0.01, c.rmax), uniform(-3.0, 3.0)};
            const PolarPoint b{uniform(0.01, c.rmax), uniform(-3.0, 3.0)};
            // Skip genuinely identical configurations.
            const double du = std::abs(a.r - b.r) +
                              std::abs(std::remainder(a.phi - b.phi, 2.0 * M_PI));
            if (du < 1e-6) continue;
            const auto xa = project(c.p, c.proj, a);
            const auto xb = project(c.p, c.proj, b);
            REQUIRE(xa.has_value());
            REQUIRE(xb.has_value());
            const double d = std::hypot((*xa)[0] - (*xb)[0], (*xa)[1] - (*xb)[1]);
            CHECK(d > 0.0);
        }
    }
}

TEST_CASE("SVG emission") {
    ProjectedCurve c;
    c.label = "demo";
    for (double t : testutil::linspace(0.0, 6.28, 65))
        c.push(t, std::cos(t), std::sin(t));
    c.push_gap(6.4);
    c.push(6.5, 1.1, 0.0);

    FigureStyle style;
    style.title = "unit circle";
    const FigureDocument doc = emit_figure({c}, style);
    CHECK(doc.svg.rfind("<?xml", 0) == 0);
    CHECK(doc.svg.find("<svg") != std::string::npos);
    CHECK(doc.svg.find("</svg>") != std::string::npos);
    CHECK(doc.svg.find("unit circle") != std::string::npos);
    CHECK(doc.csv.rfind("curve_label,t_or_phi,X,Y", 0) == 0);
    // Clipped point splits the path: two M commands.
    size_t moves = 0;
    for (size_t pos = 0; (pos = doc.svg.find(" M ", pos)) != std::string::npos; ++pos)
        ++moves;
    CHECK(moves == 2);

    // Deterministic re-emission.
    const FigureDocument doc2 = emit_figure({c}, style);
    CHECK(doc.svg == doc2.svg);
    CHECK(doc.csv == doc2.csv);

    CHECK_THROWS_AS(emit_figure({}, style), Error);
}

TEST_CASE("canned figures build and repeat byte-identically") {
    const auto fig1 = figure_potential_family({2.0, 1.0, 0.5, 0.0, -0.5, -1.0, -2.0},
                                              1.0, 3.0);
    CHECK(fig1.svg.find("</svg>") != std::string::npos);
    CHECK(fig1.svg == figure_potential_family({2.0, 1.0, 0.5, 0.0, -0.5, -1.0, -2.0},
                                              1.0, 3.0).svg);

    const CKParams h2(-1, 1);
    const Oscillator osc(1.0);
    const auto fig3 = figure_effective_potential_family(h2, osc, {0.5, 1.0, 1.5}, 0.05, 4.0);
    CHECK(fig3.svg.find("J=1.5") != std::string::npos);

    const auto fig4 = figure_orbit_family(h2, osc, 0.35);
    CHECK(fig4.svg.find("equidistant") != std::string::npos);
    CHECK(fig4.svg == figure_orbit_family(h2, osc, 0.35).svg);
}

TEST_CASE("conic sampling matches the orbit solution") {
    const CKParams p(-1, 1);
    const Oscillator osc(1.0);
    const ConicGeometry circ = circle_at(0.6);
    for (double phi : testutil::linspace(0.0, 6.2, 13))
        check_close(conic_radius(p, circ, phi).r, 0.6, 1e-12);
    // Ultraellipse reaches infinity near the major axis.
    const ConicGeometry ue{ConicKind::Ultraellipse, MajorKind::UltraSemiaxis, 0.7, 0.4,
                           std::nullopt};
    CHECK(conic_radius(p, ue, 0.0).at_infinity);
    CHECK(!conic_radius(p, ue, M_PI / 2.0).at_infinity);
}
