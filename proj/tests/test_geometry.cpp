#include "ckosc/geometry.hpp"

#include <cmath>

#include "test_util.hpp"

using namespace ckosc;
using testutil::check_close;
using testutil::linspace;
using testutil::uniform;

namespace {

// The six non-degenerate standard spaces plus the kappa2 = 0 row.
const std::vector<std::pair<double, double>> kNineSpaces = {
    {1, 1},  {0, 1},  {-1, 1},  {1, 0},  {0, 0},
    {-1, 0}, {1, -1}, {0, -1},  {-1, -1}};

enum class TChart { Polar, ParallelUY };

// In-chart random polar point for the (u,y) conversion domain.
PolarPoint random_chart_point(const CKParams& p) {
    double r, phi;
    if (p.kappa2 > 0.0) {
        r = p.kappa1 > 0.0 ? uniform(0.05, 0.95 * M_PI / (2.0 * std::sqrt(p.kappa1)))
                           : uniform(0.05, 2.2);
        phi = uniform(-2.8, 2.8);
    } else {
        r = p.kappa1 > 0.0 ? uniform(0.05, 0.7) : uniform(0.05, 0.7);
        phi = uniform(-0.7, 0.7);
    }
    return {r, phi};
}

Metric2 metric_at(const CKParams& p, TChart chart, double q1, double q2) {
    return chart == TChart::Polar ? metric_polar(p, {q1, q2})
                                 : metric_parallel_uy(p, {q1, q2});
}

Tangent2 field_at(const CKParams& p, TChart chart, double q1, double q2, int which) {
    const KillingFields f = chart == TChart::Polar
                                ? killing_fields_polar(p, {q1, q2})
                                : killing_fields_parallel(p, {q1, q2});
    return which == 0 ? f.p1 : (which == 1 ? f.p2 : f.j);
}

} // namespace

TEST_CASE("nine-space classification") {
    CHECK(classify_space(CKParams(1, 1)) == SpaceKind::Sphere);
    CHECK(classify_space(CKParams(0, -1)) == SpaceKind::Minkowskian);
    CHECK(classify_space(CKParams(-2.5, 3)) == SpaceKind::Hyperbolic);
    CHECK(classify_space(CKParams(0, 1)) == SpaceKind::Euclidean);
    CHECK(classify_space(CKParams(2, 0)) == SpaceKind::CoEuclidean);
    CHECK(classify_space(CKParams(0, 0)) == SpaceKind::Galilean);
    CHECK(classify_space(CKParams(-1, 0)) == SpaceKind::CoMinkowskian);
    CHECK(classify_space(CKParams(0.3, -2)) == SpaceKind::AntiDeSitter);
    CHECK(classify_space(CKParams(-1, -1)) == SpaceKind::DeSitter);
}

TEST_CASE("standard space names") {
    const CKParams h2 = standard_space("H2");
    CHECK(h2.kappa1 == -1.0);
    CHECK(h2.kappa2 == 1.0);
    CHECK(classify_space(standard_space("G11")) == SpaceKind::Galilean);
    try {
        standard_space("XX");
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Unsupported);
        CHECK(std::string(e.what()).find("S2") != std::string::npos);
        CHECK(std::string(e.what()).find("dS11") != std::string::npos);
    }
}

TEST_CASE("polar metric") {
    auto g = metric_polar(CKParams(0, 1), {2.0, 0.0});
    check_close(g.g11, 1.0, 0.0);
    check_close(g.g22, 4.0, 1e-15);
    g = metric_polar(CKParams(1, -1), {M_PI / 2.0, 0.3});
    check_close(g.g22, -1.0, 1e-15);
    for (auto [k1, k2] : kNineSpaces) {
        g = metric_polar(CKParams(k1, k2), {0.0, 1.0});
        check_close(g.g11, 1.0, 0.0);
        check_close(g.g22, 0.0, 0.0);
    }
}

TEST_CASE("parallel metrics") {
    auto g = metric_parallel_uy(CKParams(1, 1), {0.4, 0.0});
    check_close(g.g11, 1.0, 1e-15);
    check_close(g.g22, 1.0, 0.0);
    g = metric_parallel_uy(CKParams(-1, 1), {0.0, 1.0});
    check_close(g.g11, std::cosh(1.0) * std::cosh(1.0), 1e-14);
    g = metric_parallel_uy(CKParams(1, 1), {0.0, M_PI / 3.0});
    check_close(g.g11, 0.25, 1e-15);

    g = metric_parallel_xv(CKParams(0, 1), {9.0, 2.0});
    check_close(g.g11, 1.0, 0.0);
    check_close(g.g22, 1.0, 0.0);
    g = metric_parallel_xv(CKParams(1, 1), {M_PI / 3.0, 0.1});
    check_close(g.g22, 0.25, 1e-15);
    g = metric_parallel_xv(CKParams(-1, -1), {1.0, 0.1});
    check_close(g.g22, -std::cosh(1.0) * std::cosh(1.0), 1e-14);
}

TEST_CASE("polar to parallel conversion") {
    // On the polar axis u = r.
    auto q = polar_to_parallel_uy(CKParams(1, 1), {M_PI / 4.0, 0.0});
    check_close(q.u, M_PI / 4.0, 1e-15);
    check_close(q.y, 0.0, 1e-15);

    // Euclidean: u = r cos(phi), y = r sin(phi).
    q = polar_to_parallel_uy(CKParams(0, 1), {2.0, M_PI / 3.0});
    check_close(q.u, 1.0, 1e-14);
    check_close(q.y, std::sqrt(3.0), 1e-14);

    // Sphere point off both axes: solve the defining relations directly.
    const double r = M_PI / 3.0, phi = M_PI / 4.0;
    q = polar_to_parallel_uy(CKParams(1, 1), {r, phi});
    check_close(q.u, std::atan(std::tan(r) * std::cos(phi)), 1e-14);
    check_close(q.y, std::asin(std::sin(r) * std::sin(phi)), 1e-14);
    check_close(std::cos(q.u) * std::cos(q.y), std::cos(r), 1e-14);
}

TEST_CASE("parallel to polar conversion") {
    auto pt = parallel_uy_to_polar(CKParams(-1, 1), {0.0, 1.0});
    check_close(pt.r, 1.0, 1e-14);
    check_close(pt.phi, M_PI / 2.0, 1e-14);

    pt = parallel_uy_to_polar(CKParams(0, 1), {1.0, 1.0});
    check_close(pt.r, std::sqrt(2.0), 1e-14);
    check_close(pt.phi, M_PI / 4.0, 1e-14);

    CHECK_THROWS_AS(parallel_uy_to_polar(CKParams(1, 1), {0.0, 0.0}), Error);
    try {
        parallel_uy_to_polar(CKParams(1, 1), {0.0, 0.0});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UndefinedAngle);
    }
}

TEST_CASE("chart domain guards") {
    CHECK_THROWS_AS(polar_to_parallel_uy(CKParams(1, 1), {1.8, 0.0}), Error);
    // De Sitter: sin y = sinh(r) sinh(phi) can leave [-1, 1].
    CHECK_THROWS_AS(polar_to_parallel_uy(CKParams(-1, -1), {1.5, 1.5}), Error);
    try {
        polar_to_parallel_uy(CKParams(-1, -1), {1.5, 1.5});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OutOfChart);
    }
    // Lorentzian inverse requires time-like separation.
    CHECK_THROWS_AS(parallel_uy_to_polar(CKParams(0, -1), {0.3, 1.0}), Error);
}

TEST_CASE("(x,v) chart conversions mirror (u,y)") {
    // Euclidean: x = u and v = y exactly when kappa1 = 0.
    const CKParams e2(0, 1);
    const PolarPoint pt{1.7, 0.9};
    const auto uy = polar_to_parallel_uy(e2, pt);
    const auto xv = polar_to_parallel_xv(e2, pt);
    check_close(xv.x, uy.u, 1e-15);
    check_close(xv.v, uy.y, 1e-15);

    for (auto [k1, k2] : {std::pair{1.0, 1.0}, {-1.0, 1.0}, {1.0, -1.0}}) {
        const CKParams p(k1, k2);
        const PolarPoint q{0.55, 0.35};
        const auto x1 = polar_to_parallel_xv(p, q);
        const auto back = parallel_xv_to_polar(p, x1);
        CHECK(points_equal(p, back, q, 1e-12));
        // Defining relations.
        check_close(ck_sin(p.radial(), x1.x),
                    ck_sin(p.radial(), q.r) * ck_cos(p.angular(), q.phi), 1e-13);
        check_close(ck_cos(p.radial(), x1.x) * ck_cos(p.ortho(), x1.v),
                    ck_cos(p.radial(), q.r), 1e-13);
    }
}

TEST_CASE("round-trip chart consistency, 200 points per space") {
    for (auto [k1, k2] : kNineSpaces) {
        if (k2 == 0.0) continue; // angle functions collapse; covered separately
        const CKParams p(k1, k2);
        for (int i = 0; i < 200; ++i) {
            const PolarPoint q = random_chart_point(p);
            ParallelPointUY uy;
            try {
                uy = polar_to_parallel_uy(p, q);
            } catch (const Error& e) {
                CHECK(e.kind() == ErrorKind::OutOfChart);
                continue;
            }
            const PolarPoint back = parallel_uy_to_polar(p, uy);
            CAPTURE(k1);
            CAPTURE(k2);
            CAPTURE(q.r);
            CAPTURE(q.phi);
            CHECK(points_equal(p, back, q, 1e-12));
            // Third trigonometric relation.
            check_close(ck_cos(p.radial(), uy.u) * ck_cos(p.ortho(), uy.y),
                        ck_cos(p.radial(), q.r), 1e-12);
        }
    }
}

TEST_CASE("degenerate kappa2 = 0 conversions stay valid") {
    const CKParams p(1, 0);
    const PolarPoint q{0.8, 1.3};
    const auto uy = polar_to_parallel_uy(p, q);
    check_close(uy.u, q.r, 1e-14); // C_0(phi) = 1 makes u = r
    check_close(uy.y, ck_sin(p.radial(), q.r) * q.phi, 1e-14);
    const auto back = parallel_uy_to_polar(p, uy);
    CHECK(points_equal(p, back, q, 1e-12));
}

TEST_CASE("polar point equality honours the angular period") {
    const CKParams p(1, 1);
    CHECK(points_equal(p, {1.0, 0.3}, {1.0, 0.3 + 2.0 * M_PI}, 1e-12));
    CHECK(!points_equal(p, {1.0, 0.3}, {1.0, 0.3 + M_PI}, 1e-12));
    CHECK(points_equal(p, {0.0, 0.1}, {0.0, 2.0}, 1e-12)); // origin
    const CKParams p4(1, 4);
    CHECK(points_equal(p4, {1.0, 0.3}, {1.0, 0.3 + M_PI}, 1e-12));
}

TEST_CASE("Killing fields, polar chart") {
    const auto f = killing_fields_polar(CKParams(0, 1), {1.0, 0.0});
    check_close(f.p1.c1, 1.0, 1e-15);
    check_close(f.p1.c2, 0.0, 1e-15);
    check_close(f.j.c1, 0.0, 0.0);
    check_close(f.j.c2, 1.0, 0.0);

    const auto g = killing_fields_polar(CKParams(1, 1), {M_PI / 4.0, M_PI / 2.0});
    check_close(g.p1.c1, 0.0, 1e-15);
    check_close(g.p1.c2, -1.0, 1e-14);

    CHECK_THROWS_AS(killing_fields_polar(CKParams(1, 1), {0.0, 0.2}), Error);
    try {
        killing_fields_polar(CKParams(1, 1), {0.0, 0.2});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SingularChart);
    }
}

TEST_CASE("Killing fields, parallel chart") {
    for (auto [k1, k2] : kNineSpaces) {
        const auto f = killing_fields_parallel(CKParams(k1, k2), {0.7, -0.2});
        check_close(f.p1.c1, 1.0, 0.0);
        check_close(f.p1.c2, 0.0, 0.0);
    }
    const auto f = killing_fields_parallel(CKParams(0, 1), {2.0, 3.0});
    check_close(f.j.c1, -3.0, 1e-14);
    check_close(f.j.c2, 2.0, 1e-14);
    const auto g = killing_fields_parallel(CKParams(1, 1), {0.0, M_PI / 6.0});
    check_close(g.p2.c1, 0.0, 1e-15);
    check_close(g.p2.c2, 1.0, 1e-15);
}

TEST_CASE("Killing fields generate isometries (Lie-derivative test)") {
    constexpr double eps = 1e-6;
    constexpr double h = 1e-6;
    for (auto [k1, k2] : kNineSpaces) {
        const CKParams p(k1, k2);
        for (TChart chart : {TChart::Polar, TChart::ParallelUY}) {
            for (int which = 0; which < 3; ++which) {
                for (int rep = 0; rep < 4; ++rep) {
                    double q1, q2;
                    if (chart == TChart::Polar) {
                        if (k2 <= 0.0) { q1 = uniform(0.3, 0.7); q2 = uniform(-0.5, 0.5); }
                        else { q1 = uniform(0.3, 1.0); q2 = uniform(-1.0, 1.0); }
                    } else {
                        q1 = uniform(-0.5, 0.5);
                        q2 = uniform(-0.4, 0.4);
                    }
                    // Midpoint flow map q -> q + eps X(q + eps/2 X(q)). Its
                    // Jacobian is composed from central differences of the
                    // field (differencing the map itself would divide FD
                    // roundoff by eps).
                    auto dfield = [&](double a, double b, double DX[2][2]) {
                        for (int i = 0; i < 2; ++i) {
                            const double d1 = i == 0 ? h : 0.0, d2 = i == 1 ? h : 0.0;
                            const Tangent2 fp = field_at(p, chart, a + d1, b + d2, which);
                            const Tangent2 fm = field_at(p, chart, a - d1, b - d2, which);
                            DX[0][i] = (fp.c1 - fm.c1) / (2.0 * h);
                            DX[1][i] = (fp.c2 - fm.c2) / (2.0 * h);
                        }
                    };
                    const Tangent2 x0 = field_at(p, chart, q1, q2, which);
                    const double qm1 = q1 + 0.5 * eps * x0.c1;
                    const double qm2 = q2 + 0.5 * eps * x0.c2;
                    const Tangent2 xm = field_at(p, chart, qm1, qm2, which);
                    double DX0[2][2], DXm[2][2];
                    dfield(q1, q2, DX0);
                    dfield(qm1, qm2, DXm);
                    // J = I + eps DX(qm) (I + eps/2 DX(q))
                    double Jm[2][2];
                    for (int r = 0; r < 2; ++r)
                        for (int i = 0; i < 2; ++i) {
                            const double inner =
                                DXm[r][0] * ((0 == i ? 1.0 : 0.0) + 0.5 * eps * DX0[0][i]) +
                                DXm[r][1] * ((1 == i ? 1.0 : 0.0) + 0.5 * eps * DX0[1][i]);
                            Jm[r][i] = (r == i ? 1.0 : 0.0) + eps * inner;
                        }
                    const Metric2 g0 = metric_at(p, chart, q1, q2);
                    const Metric2 g1 =
                        metric_at(p, chart, q1 + eps * xm.c1, q2 + eps * xm.c2);
                    // pullback_ij = sum_k g1_kk J[k][i] J[k][j] (diagonal metric)
                    const double p11 =
                        g1.g11 * Jm[0][0] * Jm[0][0] + g1.g22 * Jm[1][0] * Jm[1][0];
                    const double p22 =
                        g1.g11 * Jm[0][1] * Jm[0][1] + g1.g22 * Jm[1][1] * Jm[1][1];
                    const double p12 =
                        g1.g11 * Jm[0][0] * Jm[0][1] + g1.g22 * Jm[1][0] * Jm[1][1];
                    CAPTURE(k1); CAPTURE(k2); CAPTURE(which); CAPTURE(q1); CAPTURE(q2);
                    CHECK(std::abs(p11 - g0.g11) / eps < 1e-5);
                    CHECK(std::abs(p22 - g0.g22) / eps < 1e-5);
                    CHECK(std::abs(p12 - 0.0) / eps < 1e-5);
                }
            }
        }
    }
}

TEST_CASE("Killing field commutators close on the algebra") {
    // [X_J, X_P1] = -X_P2, [X_J, X_P2] = k2 X_P1, [X_P1, X_P2] = -k1 X_J.
    constexpr double h = 1e-6;
    auto commutator = [&](const CKParams& p, TChart chart, double q1, double q2, int a,
                          int b) {
        auto dfield = [&](int which, int dir, double& d1, double& d2) {
            const double e1 = dir == 0 ? h : 0.0, e2 = dir == 1 ? h : 0.0;
            const Tangent2 fp = field_at(p, chart, q1 + e1, q2 + e2, which);
            const Tangent2 fm = field_at(p, chart, q1 - e1, q2 - e2, which);
            d1 = (fp.c1 - fm.c1) / (2.0 * h);
            d2 = (fp.c2 - fm.c2) / (2.0 * h);
        };
        const Tangent2 X = field_at(p, chart, q1, q2, a);
        const Tangent2 Y = field_at(p, chart, q1, q2, b);
        double dY1_d1, dY2_d1, dY1_d2, dY2_d2, dX1_d1, dX2_d1, dX1_d2, dX2_d2;
        dfield(b, 0, dY1_d1, dY2_d1);
        dfield(b, 1, dY1_d2, dY2_d2);
        dfield(a, 0, dX1_d1, dX2_d1);
        dfield(a, 1, dX1_d2, dX2_d2);
        return Tangent2{X.c1 * dY1_d1 + X.c2 * dY1_d2 - Y.c1 * dX1_d1 - Y.c2 * dX1_d2,
                        X.c1 * dY2_d1 + X.c2 * dY2_d2 - Y.c1 * dX2_d1 - Y.c2 * dX2_d2};
    };
    for (auto [k1, k2] : kNineSpaces) {
        const CKParams p(k1, k2);
        for (TChart chart : {TChart::Polar, TChart::ParallelUY}) {
            const double q1 = chart == TChart::Polar ? 0.6 : 0.25;
            const double q2 = chart == TChart::Polar ? 0.4 : -0.3;
            const Tangent2 p1 = field_at(p, chart, q1, q2, 0);
            const Tangent2 p2 = field_at(p, chart, q1, q2, 1);
            const Tangent2 j = field_at(p, chart, q1, q2, 2);
            const Tangent2 c1 = commutator(p, chart, q1, q2, 2, 0); // [J, P1]
            check_close(c1.c1, -p2.c1, 1e-5);
            check_close(c1.c2, -p2.c2, 1e-5);
            const Tangent2 c2 = commutator(p, chart, q1, q2, 2, 1); // [J, P2]
            check_close(c2.c1, k2 * p1.c1, 1e-5);
            check_close(c2.c2, k2 * p1.c2, 1e-5);
            const Tangent2 c3 = commutator(p, chart, q1, q2, 0, 1); // [P1, P2]
            check_close(c3.c1, -k1 * j.c1, 1e-5);
            check_close(c3.c2, -k1 * j.c2, 1e-5);
        }
    }
}
