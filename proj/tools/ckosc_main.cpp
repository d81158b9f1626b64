// ckosc: command-line front end for the ckoscillator shared library.
// Everything below talks to the C API only.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ckoscillator.h"

using nlohmann::json;

namespace {

struct CliError {
    int status;
    std::string message;
};

[[noreturn]] void fail(int status) {
    throw CliError{status, cko_last_error()};
}

void require_ok(int status) {
    if (status != CKO_OK) fail(status);
}

// Space + oscillator selection shared by every subcommand.
struct SpaceOpts {
    std::string space_name;
    double kappa1 = 0.0;
    double kappa2 = 1.0;
    double omega0_sq = 1.0;
    bool kappa1_set = false, kappa2_set = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--space", space_name,
                        "named space (S2 E2 H2 ANH11 G11 NH11 AdS11 M11 dS11)");
        cmd->add_option("--kappa1", kappa1, "curvature kappa1")
            ->each([this](const std::string&) { kappa1_set = true; });
        cmd->add_option("--kappa2", kappa2, "signature parameter kappa2")
            ->each([this](const std::string&) { kappa2_set = true; });
        auto* wsq = cmd->add_option("--omega0-sq", omega0_sq,
                                    "oscillator strength omega0^2");
        cmd->add_option_function<double>(
               "--omega0",
               [this](double w0) { omega0_sq = w0 * w0; },
               "oscillator frequency omega0 (sets omega0^2)")
            ->excludes(wsq);
    }

    void resolve() {
        if (!space_name.empty()) {
            if (kappa1_set || kappa2_set)
                throw CLI::ValidationError("--space conflicts with --kappa1/--kappa2");
            require_ok(cko_standard_space(space_name.c_str(), &kappa1, &kappa2));
        }
    }
};

std::string output_path(const std::string& file) {
    if (file.empty() || file.front() == '/') return file;
    const char* dir = std::getenv("CKOSC_OUTPUT_DIR");
    if (!dir || !*dir) return file;
    return std::string(dir) + "/" + file;
}

void write_file(const std::string& file, const std::string& content) {
    const std::string path = output_path(file);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw CLI::ValidationError("cannot open output file: " + path);
    out << content;
}

void emit(const std::string& file, const std::string& content) {
    if (file.empty() || file == "-")
        std::cout << content;
    else
        write_file(file, content);
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json orbit_json(double kappa1, double kappa2, double omega0_sq, double e, double j,
                const cko_orbit& o) {
    json doc{{"kappa1", kappa1}, {"kappa2", kappa2}, {"omega0_sq", omega0_sq},
             {"E", e},           {"J", j},           {"D", o.d},
             {"G", o.g},         {"phi0", o.phi0},   {"A_sq", o.a_sq},
             {"B_sq", o.b_sq},   {"E_P", o.e_p},     {"E1", o.e1},
             {"E2", o.e2}};
    cko_conic conic;
    if (kappa2 > 0.0 && o.a_sq > 0.0 && o.b_sq > 0.0 &&
        cko_conic_from_AB(kappa1, kappa2, o.a_sq, o.b_sq, &conic) == CKO_OK) {
        json cj{{"kind", cko_conic_kind_name(conic.kind)}, {"b", conic.b}};
        if (conic.major_kind == CKO_MAJOR_SEMIAXIS) cj["a"] = conic.major;
        if (conic.major_kind == CKO_MAJOR_ULTRA_SEMIAXIS) cj["a_tilde"] = conic.major;
        if (conic.major_kind == CKO_MAJOR_INFINITE) cj["a"] = "infinite";
        if (conic.has_focal) cj["focal_half_separation"] = conic.focal_half_separation;
        doc["conic"] = cj;
    }
    return doc;
}

std::string trajectory_csv(const cko_trajectory* traj) {
    std::string csv = "t,chart,q1,q2,v1,v2,P1,P2,J,E,f11,f12,f22\n";
    const size_t n = cko_trajectory_size(traj);
    for (size_t i = 0; i < n; ++i) {
        cko_sample s;
        require_ok(cko_trajectory_sample(traj, i, &s));
        csv += fmt(s.t) + ',' + (s.chart == CKO_CHART_POLAR ? "polar" : "uy") + ',' +
               fmt(s.q1) + ',' + fmt(s.q2) + ',' + fmt(s.v1) + ',' + fmt(s.v2) + ',' +
               fmt(s.p1) + ',' + fmt(s.p2) + ',' + fmt(s.j) + ',' + fmt(s.energy) + ',' +
               fmt(s.f11) + ',' + fmt(s.f12) + ',' + fmt(s.f22) + '\n';
    }
    return csv;
}

json drift_json(const cko_trajectory* traj) {
    cko_drift d;
    require_ok(cko_trajectory_drift(traj, &d));
    return json{{"E", d.energy}, {"J", d.j}, {"f11", d.f11}, {"f12", d.f12},
                {"f22", d.f22}};
}

json events_json(const cko_trajectory* traj) {
    static const char* names[] = {"radial_min", "radial_max", "axis_crossing",
                                  "chart_boundary"};
    json arr = json::array();
    const size_t n = cko_trajectory_event_count(traj);
    for (size_t i = 0; i < n; ++i) {
        cko_event ev;
        require_ok(cko_trajectory_event(traj, i, &ev));
        arr.push_back({{"t", ev.t},
                       {"kind", ev.kind >= 0 && ev.kind < 4 ? names[ev.kind] : "?"},
                       {"q1", ev.q1},
                       {"q2", ev.q2}});
    }
    return arr;
}

// A J value that admits energy E, used when measuring the period: the period
// law depends on E alone, so any compatible J does.
double pick_j_for_energy(double kappa1, double kappa2, double omega0_sq, double e) {
    const double w0 = std::sqrt(omega0_sq);
    const double rk2 = std::sqrt(kappa2);
    double j_max;
    if (kappa1 == 0.0) {
        j_max = e / (rk2 * w0);
    } else {
        const double disc = kappa2 * omega0_sq + 2.0 * kappa1 * kappa2 * e;
        j_max = (-rk2 * w0 + std::sqrt(disc)) / (kappa1 * kappa2);
    }
    return 0.5 * j_max;
}

int chart_id(const std::string& chart) {
    if (chart == "polar") return CKO_CHART_POLAR;
    if (chart == "uy") return CKO_CHART_PARALLEL_UY;
    throw CLI::ValidationError("chart must be polar or uy");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"curved harmonic oscillator on the nine Cayley-Klein spaces"};
    app.set_config("--config", "",
                   "TOML/INI config file; [subcommand] sections hold options");
    app.require_subcommand(1);
    bool error_json = false;
    app.add_flag("--error-json", error_json,
                 "print failures as machine-readable JSON on stdout");

    // ---- info ----------------------------------------------------------
    auto* cmd_info = app.add_subcommand("info", "describe a CK space");
    SpaceOpts info_space;
    info_space.attach(cmd_info);
    bool info_as_json = false;
    cmd_info->add_flag("--json", info_as_json, "emit JSON instead of text");

    // ---- simulate ------------------------------------------------------
    auto* cmd_sim = app.add_subcommand("simulate", "integrate a trajectory");
    SpaceOpts sim_space;
    sim_space.attach(cmd_sim);
    std::string sim_chart = "polar";
    double sim_q1 = 1.0, sim_q2 = 0.0, sim_v1 = 0.0, sim_v2 = 1.0, sim_tend = 10.0;
    double sim_rtol = 1e-10, sim_atol = 1e-12, sim_sample_dt = 0.0, sim_rfloor = 0.1;
    long sim_max_steps = 2000000;
    std::string sim_csv, sim_json_out;
    cmd_sim->add_option("--chart", sim_chart, "initial chart: polar | uy");
    cmd_sim->add_option("--q1", sim_q1, "r or u");
    cmd_sim->add_option("--q2", sim_q2, "phi or y");
    cmd_sim->add_option("--v1", sim_v1, "dr/dt or du/dt");
    cmd_sim->add_option("--v2", sim_v2, "dphi/dt or dy/dt");
    cmd_sim->add_option("--t-end", sim_tend, "integration time");
    cmd_sim->add_option("--rel-tol", sim_rtol, "relative tolerance");
    cmd_sim->add_option("--abs-tol", sim_atol, "absolute tolerance");
    cmd_sim->add_option("--sample-dt", sim_sample_dt, "uniform sample spacing (0: per step)");
    cmd_sim->add_option("--max-steps", sim_max_steps, "step budget");
    cmd_sim->add_option("--r-floor", sim_rfloor, "polar-chart stop radius");
    cmd_sim->add_option("--out-csv", sim_csv, "trajectory CSV path ('-' = stdout)");
    cmd_sim->add_option("--out-json", sim_json_out, "drift/event report path");

    // ---- orbit ---------------------------------------------------------
    auto* cmd_orbit = app.add_subcommand("orbit", "closed-form orbit from (E, J)");
    SpaceOpts orb_space;
    orb_space.attach(cmd_orbit);
    double orb_e = 1.0, orb_j = 0.5, orb_phi0 = 0.0;
    int orb_n = 256;
    std::string orb_csv, orb_json_out;
    cmd_orbit->add_option("--energy", orb_e, "total energy E")->required();
    cmd_orbit->add_option("--j", orb_j, "angular momentum J")->required();
    cmd_orbit->add_option("--phi0", orb_phi0, "orbit orientation");
    cmd_orbit->add_option("--samples", orb_n, "table rows");
    cmd_orbit->add_option("--out-csv", orb_csv, "orbit table path");
    cmd_orbit->add_option("--out-json", orb_json_out, "orbit constants path");

    // ---- classify ------------------------------------------------------
    auto* cmd_cls = app.add_subcommand("classify", "orbit regime from (E, J)");
    SpaceOpts cls_space;
    cls_space.attach(cmd_cls);
    double cls_e = 1.0, cls_j = 0.5;
    cmd_cls->add_option("--energy", cls_e, "total energy E")->required();
    cmd_cls->add_option("--j", cls_j, "angular momentum J")->required();

    // ---- period --------------------------------------------------------
    auto* cmd_per = app.add_subcommand("period", "exact and measured period");
    SpaceOpts per_space;
    per_space.attach(cmd_per);
    double per_e = 1.0;
    cmd_per->add_option("--energy", per_e, "total energy E")->required();

    // ---- convert -------------------------------------------------------
    auto* cmd_conv = app.add_subcommand("convert", "coordinate chart conversions");
    SpaceOpts conv_space;
    conv_space.attach(cmd_conv);
    std::string conv_from = "polar";
    double conv_q1 = 0.0, conv_q2 = 0.0;
    cmd_conv->add_option("--from", conv_from, "source chart: polar | uy | xv");
    cmd_conv->add_option("--q1", conv_q1, "first coordinate")->required();
    cmd_conv->add_option("--q2", conv_q2, "second coordinate")->required();

    // ---- plot ----------------------------------------------------------
    auto* cmd_plot = app.add_subcommand("plot", "emit SVG figures");
    SpaceOpts plot_space;
    plot_space.attach(cmd_plot);
    std::string plot_kind = "potential";
    std::string plot_svg = "figure.svg", plot_csv;
    double plot_b = 0.35, plot_e = 1.0, plot_j = 0.5, plot_rmax = 3.0;
    std::vector<double> plot_js = {0.5, 1.0, 1.5};
    std::vector<double> plot_kappas = {2.0, 1.0, 0.5, 0.0, -0.5, -1.0, -2.0};
    cmd_plot->add_option("--figure", plot_kind,
                         "potential | effective | orbit-family | orbit");
    cmd_plot->add_option("--out", plot_svg, "SVG output path");
    cmd_plot->add_option("--out-csv", plot_csv, "raw sample CSV path");
    cmd_plot->add_option("--b", plot_b, "minor semiaxis (orbit-family)");
    cmd_plot->add_option("--energy", plot_e, "orbit energy (orbit)");
    cmd_plot->add_option("--j", plot_j, "orbit angular momentum (orbit)");
    cmd_plot->add_option("--r-max", plot_rmax, "radial range (potential/effective)");
    cmd_plot->add_option("--j-values", plot_js, "J family (effective)");
    cmd_plot->add_option("--kappa1-values", plot_kappas, "curvature family (potential)");

    // Flags override config-file values override defaults; [subcommand]
    // config sections are routed into the matching subcommand.
    for (CLI::App* sc : app.get_subcommands(nullptr)) sc->configurable();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_info) {
            info_space.resolve();
            cko_space_info si;
            require_ok(cko_get_space_info(info_space.kappa1, info_space.kappa2,
                                          info_space.omega0_sq, &si));
            json doc{{"name", cko_space_kind_name(si.kind)},
                     {"short_name", cko_space_short_name(si.kind)},
                     {"kappa1", info_space.kappa1},
                     {"kappa2", info_space.kappa2},
                     {"omega0_sq", info_space.omega0_sq},
                     {"metric_polar", "ds^2 = dr^2 + kappa2 S_kappa1(r)^2 dphi^2"},
                     {"metric_parallel",
                      "ds^2 = C_kappa1kappa2(y)^2 du^2 + kappa2 dy^2"}};
            if (si.has_e_inf) doc["E_inf"] = si.e_inf;
            if (si.has_j_inf) doc["J_inf"] = si.j_inf;
            if (info_as_json) {
                std::cout << doc.dump(2) << "\n";
            } else {
                std::cout << doc["name"].get<std::string>() << " ("
                          << doc["short_name"].get<std::string>() << "), kappa1=" <<
                    fmt(info_space.kappa1) << ", kappa2=" << fmt(info_space.kappa2) << "\n";
                std::cout << "  polar:    ds^2 = dr^2 + " << fmt(info_space.kappa2)
                          << " * S_" << fmt(info_space.kappa1) << "(r)^2 dphi^2\n";
                std::cout << "  parallel: ds^2 = C_"
                          << fmt(info_space.kappa1 * info_space.kappa2)
                          << "(y)^2 du^2 + " << fmt(info_space.kappa2) << " dy^2\n";
                if (si.has_e_inf)
                    std::cout << "  E_inf = " << fmt(si.e_inf)
                              << " (plateau energy omega0^2/(-2 kappa1))\n";
                if (si.has_j_inf)
                    std::cout << "  J_inf = " << fmt(si.j_inf)
                              << " (momentum scale omega0/(sqrt(kappa2) (-kappa1)))\n";
            }
        } else if (*cmd_sim) {
            sim_space.resolve();
            cko_sim_options opt;
            cko_sim_options_default(&opt);
            opt.rel_tol = sim_rtol;
            opt.abs_tol = sim_atol;
            opt.sample_dt = sim_sample_dt;
            opt.max_steps = sim_max_steps;
            opt.r_floor = sim_rfloor;
            cko_trajectory* traj = nullptr;
            require_ok(cko_simulate(sim_space.kappa1, sim_space.kappa2,
                                    sim_space.omega0_sq, chart_id(sim_chart), sim_q1,
                                    sim_q2, sim_v1, sim_v2, sim_tend, &opt, &traj));
            json report{{"samples", cko_trajectory_size(traj)},
                        {"hit_boundary", cko_trajectory_hit_boundary(traj) != 0},
                        {"drift", drift_json(traj)},
                        {"events", events_json(traj)}};
            if (!sim_csv.empty()) emit(sim_csv, trajectory_csv(traj));
            emit(sim_json_out, report.dump(2) + "\n");
            cko_trajectory_free(traj);
        } else if (*cmd_orbit) {
            orb_space.resolve();
            cko_orbit orbit;
            require_ok(cko_orbit_from_ej(orb_space.kappa1, orb_space.kappa2,
                                         orb_space.omega0_sq, orb_e, orb_j, orb_phi0,
                                         &orbit));
            if (!orb_csv.empty()) {
                std::string csv = "phi,r,at_infinity\n";
                const double span = orb_space.kappa2 > 0.0
                                        ? 2.0 * M_PI / std::sqrt(orb_space.kappa2)
                                        : 4.0;
                for (int i = 0; i <= orb_n; ++i) {
                    const double phi = orb_phi0 + span * i / orb_n;
                    double r = 0.0;
                    int at_inf = 0;
                    const int st = cko_orbit_radius(orb_space.kappa1, orb_space.kappa2,
                                                    &orbit, phi, &r, &at_inf);
                    if (st == CKO_ERR_OUTSIDE_BRANCH) continue;
                    require_ok(st);
                    csv += fmt(phi) + ',' + (at_inf ? "inf" : fmt(r)) + ',' +
                           (at_inf ? "1" : "0") + '\n';
                }
                emit(orb_csv, csv);
            }
            emit(orb_json_out, orbit_json(orb_space.kappa1, orb_space.kappa2,
                                          orb_space.omega0_sq, orb_e, orb_j, orbit)
                                       .dump(2) +
                                   "\n");
        } else if (*cmd_cls) {
            cls_space.resolve();
            cko_orbit_class cls;
            require_ok(cko_classify(cls_space.kappa1, cls_space.kappa2,
                                    cls_space.omega0_sq, cls_e, cls_j, &cls));
            json doc{{"kappa1", cls_space.kappa1},
                     {"kappa2", cls_space.kappa2},
                     {"omega0_sq", cls_space.omega0_sq},
                     {"E", cls_e},
                     {"J", cls_j},
                     {"tag", cko_orbit_tag_name(cls.tag)}};
            if (std::isfinite(cls.e_min)) doc["E_min"] = cls.e_min;
            if (std::isfinite(cls.e_inf)) doc["E_inf"] = cls.e_inf;
            if (std::isfinite(cls.j_inf)) doc["J_inf"] = cls.j_inf;
            if (cls.has_r_m) doc["r_m"] = cls.r_m;
            if (cls.has_r_min) doc["r_min"] = cls.r_min;
            if (cls.has_r_max) doc["r_max"] = cls.r_max;
            std::cout << doc.dump(2) << "\n";
        } else if (*cmd_per) {
            per_space.resolve();
            double t_formula = 0.0;
            require_ok(cko_period(per_space.kappa1, per_space.kappa2,
                                  per_space.omega0_sq, per_e, &t_formula));
            // Measure: start at the inner turning point of a compatible J.
            const double j = pick_j_for_energy(per_space.kappa1, per_space.kappa2,
                                               per_space.omega0_sq, per_e);
            cko_orbit orbit;
            require_ok(cko_orbit_from_ej(per_space.kappa1, per_space.kappa2,
                                         per_space.omega0_sq, per_e, j, 0.0, &orbit));
            double r0 = 0.0;
            require_ok(cko_ck_atan(per_space.kappa1, std::sqrt(orbit.b_sq), &r0));
            double s0 = 0.0;
            require_ok(cko_ck_sin(per_space.kappa1, r0, &s0));
            cko_trajectory* traj = nullptr;
            require_ok(cko_simulate(per_space.kappa1, per_space.kappa2,
                                    per_space.omega0_sq, CKO_CHART_POLAR, r0, 0.0, 0.0,
                                    j / (s0 * s0), 3.2 * t_formula, nullptr, &traj));
            double t_measured = 0.0;
            require_ok(cko_full_period_measured(per_space.kappa1, per_space.kappa2, traj,
                                                &t_measured));
            cko_trajectory_free(traj);
            json doc{{"kappa1", per_space.kappa1},
                     {"kappa2", per_space.kappa2},
                     {"omega0_sq", per_space.omega0_sq},
                     {"E", per_e},
                     {"period_formula", t_formula},
                     {"period_measured", t_measured},
                     {"rel_error", std::abs(t_measured - t_formula) / t_formula}};
            std::cout << doc.dump(2) << "\n";
        } else if (*cmd_conv) {
            conv_space.resolve();
            double r = conv_q1, phi = conv_q2;
            if (conv_from == "uy") {
                require_ok(cko_parallel_uy_to_polar(conv_space.kappa1, conv_space.kappa2,
                                                    conv_q1, conv_q2, &r, &phi));
            } else if (conv_from == "xv") {
                require_ok(cko_parallel_xv_to_polar(conv_space.kappa1, conv_space.kappa2,
                                                    conv_q1, conv_q2, &r, &phi));
            } else if (conv_from != "polar") {
                throw CLI::ValidationError("--from must be polar, uy, or xv");
            }
            json doc{{"kappa1", conv_space.kappa1},
                     {"kappa2", conv_space.kappa2},
                     {"polar", {{"r", r}, {"phi", phi}}}};
            double u = 0, y = 0, x = 0, v = 0;
            if (cko_polar_to_parallel_uy(conv_space.kappa1, conv_space.kappa2, r, phi, &u,
                                         &y) == CKO_OK)
                doc["parallel_uy"] = {{"u", u}, {"y", y}};
            if (cko_polar_to_parallel_xv(conv_space.kappa1, conv_space.kappa2, r, phi, &x,
                                         &v) == CKO_OK)
                doc["parallel_xv"] = {{"x", x}, {"v", v}};
            std::cout << doc.dump(2) << "\n";
        } else if (*cmd_plot) {
            plot_space.resolve();
            char* svg = nullptr;
            char* csv = nullptr;
            char** csv_ptr = plot_csv.empty() ? nullptr : &csv;
            if (plot_kind == "potential") {
                require_ok(cko_figure_potential_family(plot_kappas.data(),
                                                       plot_kappas.size(),
                                                       plot_space.omega0_sq, plot_rmax,
                                                       &svg, csv_ptr));
            } else if (plot_kind == "effective") {
                require_ok(cko_figure_effective_family(
                    plot_space.kappa1, plot_space.kappa2, plot_space.omega0_sq,
                    plot_js.data(), plot_js.size(), 0.05, plot_rmax, &svg, csv_ptr));
            } else if (plot_kind == "orbit-family") {
                require_ok(cko_figure_orbit_family(plot_space.kappa1, plot_space.kappa2,
                                                   plot_space.omega0_sq, plot_b, 7, &svg,
                                                   csv_ptr));
            } else if (plot_kind == "orbit") {
                cko_orbit orbit;
                require_ok(cko_orbit_from_ej(plot_space.kappa1, plot_space.kappa2,
                                             plot_space.omega0_sq, plot_e, plot_j, 0.0,
                                             &orbit));
                const double span = plot_space.kappa2 > 0.0
                                        ? 2.0 * M_PI / std::sqrt(plot_space.kappa2)
                                        : 4.0;
                require_ok(cko_render_orbit(plot_space.kappa1, plot_space.kappa2, &orbit,
                                            CKO_PROJ_DEFAULT, 0.0, span, 512, &svg,
                                            csv_ptr));
            } else {
                throw CLI::ValidationError("unknown figure kind: " + plot_kind);
            }
            emit(plot_svg, svg);
            cko_string_free(svg);
            if (csv_ptr && csv) {
                emit(plot_csv, csv);
                cko_string_free(csv);
            }
        }
    } catch (const CliError& err) {
        if (error_json) {
            json doc{{"error",
                      {{"code", err.status},
                       {"name", cko_status_name(err.status)},
                       {"message", err.message}}}};
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cerr << "error (" << cko_status_name(err.status) << "): " << err.message
                      << "\n";
        }
        return err.status;
    }
    return 0;
}
