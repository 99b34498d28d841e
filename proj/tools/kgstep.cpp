// kgstep: command-line front end for the step-barrier shutter solution.
//
// Subcommands:
//   snapshot    |psi|^2 etc. over x at fixed t          -> CSV + manifest
//   timeseries  |psi|^2 etc. over t at fixed x          -> CSV + manifest
//   figure      named preset grids (fig3..fig8)         -> CSV set + manifest
//   validate    oracle cross-checks                     -> JSON report
//   params      derived-parameter table                 -> stdout
//
// Exit codes: 0 success, 1 usage error, 2 validation failure, 3 runtime error.

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kgstep/analysis.hpp"
#include "kgstep/exact.hpp"
#include "kgstep/oracle.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace kgstep;

namespace {

constexpr const char* kVersion = "1.0.0";

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.16e", v);
    return buf;
}

struct GridSpec {
    double start = 0.0;
    double stop = 0.0;
    int n = 0;
};

struct RunConfig {
    std::string command;
    double mu0 = 1.542;        // 1/nm
    double energy_k = 5.064e-2;  // 1/nm (the reference text's literal value)
    double t = 0.05;           // fs (snapshot)
    double x = 0.4;            // nm (timeseries)
    GridSpec grid;             // x-grid [nm] or t-grid [fs]
    double tol = 1e-12;
    std::string figure;
    std::string out = ".";
    // validate knobs
    std::vector<double> fdtd_dx = {0.008, 0.004, 0.002};
    double fdtd_t_end = 0.1;
    double fdtd_final_tol = 1e-3;
    double quad_tol = 1e-8;
};

void check_grid(const GridSpec& g) {
    if (g.n < 2 || !(g.start < g.stop))
        throw CLI::ValidationError("--grid", "grid requires start < stop and n >= 2");
}

void check_tol(double tol) {
    if (!(tol >= 1e-14 && tol <= 1e-6))
        throw CLI::ValidationError("--tol", "tol must lie in [1e-14, 1e-6]");
}

// ------------------------------------------------------------------ //
// Deterministic parallel map: evaluate by index, write in order.     //
// ------------------------------------------------------------------ //
template <class F>
void parallel_for(int n, F&& body) {
    const int hw = static_cast<int>(std::thread::hardware_concurrency());
    const int workers = std::max(1, std::min({hw, n, 8}));
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
        });
    for (auto& th : pool) th.join();
}

struct Row {
    double coord;
    ComplexAmplitude psi;
    double abs2_phi;
};

std::vector<Row> scan_rows(const StepParams& p, bool over_x, double fixed,
                           const GridSpec& g, double tol) {
    std::vector<Row> rows(g.n);
    parallel_for(g.n, [&](int i) {
        const double c = g.start + (g.stop - g.start) * i / (g.n - 1);
        const SpacetimePoint pt = over_x ? SpacetimePoint{c, fixed}
                                         : SpacetimePoint{fixed, c};
        rows[i].coord = c;
        rows[i].psi = psi_auto(p, pt, tol);
        rows[i].abs2_phi = phi_stationary(p, pt).abs2;
    });
    return rows;
}

void write_csv(const fs::path& path, const char* coord_name,
               const std::vector<Row>& rows) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << coord_name << ",re_psi,im_psi,abs2_psi,abs2_phi,method,est_error\n";
    for (const Row& r : rows) {
        f << fmt17(r.coord) << ',' << fmt17(r.psi.value.real()) << ','
          << fmt17(r.psi.value.imag()) << ',' << fmt17(r.psi.abs2) << ','
          << fmt17(r.abs2_phi) << ',' << method_name(r.psi.diag.method) << ','
          << fmt17(r.psi.diag.est_error) << '\n';
    }
}

json params_json(const StepParams& p) {
    const DerivedParams d = derive_params(p);
    json j;
    j["mu0_per_nm"] = p.mu0;
    j["energy_k_per_nm"] = p.energy_k;
    j["energy_ev"] = p.energy_k * kHbarC;
    j["q_per_nm"] = d.q;
    j["x_p_nm"] = d.x_p;
    j["two_x_p_nm"] = 2.0 * d.x_p;
    j["k_plus"] = {d.k_plus.real(), d.k_plus.imag()};
    j["k_minus"] = {d.k_minus.real(), d.k_minus.imag()};
    j["abs2_k_plus"] = std::norm(d.k_plus);
    return j;
}

json config_json(const RunConfig& c) {
    json j;
    j["command"] = c.command;
    j["mu0"] = c.mu0;
    j["k"] = c.energy_k;
    j["t"] = c.t;
    j["x"] = c.x;
    j["grid"] = {c.grid.start, c.grid.stop, c.grid.n};
    j["tol"] = c.tol;
    j["figure"] = c.figure;
    j["out"] = c.out;
    j["fdtd_dx"] = c.fdtd_dx;
    j["fdtd_t_end"] = c.fdtd_t_end;
    j["fdtd_final_tol"] = c.fdtd_final_tol;
    j["quad_tol"] = c.quad_tol;
    return j;
}

void write_manifest(const fs::path& dir, const RunConfig& c,
                    const std::vector<std::string>& outputs, double wall_seconds) {
    json m;
    m["tool"] = "kgstep";
    m["version"] = kVersion;
    m["config"] = config_json(c);
    m["resolved_params"] = params_json({c.mu0, c.energy_k});
    m["constants"] = {{"c_nm_per_fs", kSpeedOfLight}, {"hbar_c_ev_nm", kHbarC}};
    m["outputs"] = outputs;
    // Known tensions between the published description and the arithmetic;
    // the computed values are used, the published ones recorded.
    m["notes"] = {
        {"two_x_p_published_nm", 1.317},
        {"two_x_p_computed_nm", 2.0 / derive_params({c.mu0, c.energy_k}).q},
        {"energy_k_literal_per_nm", 5.064e-2},
        {"energy_k_from_10ev_per_nm", 10.0 / kHbarC},
    };
    // Timing is informational only and excluded from determinism checks.
    m["timing"] = {{"wall_seconds", wall_seconds}};
    std::ofstream f(dir / "manifest.json", std::ios::binary);
    if (!f) throw std::runtime_error("cannot write manifest in " + dir.string());
    f << m.dump(2) << '\n';
}

double now_seconds() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

// ------------------------------------------------------------------ //
// Commands                                                            //
// ------------------------------------------------------------------ //

int cmd_snapshot(RunConfig c) {
    check_grid(c.grid);
    check_tol(c.tol);
    const double t0 = now_seconds();
    const StepParams p{c.mu0, c.energy_k};
    fs::create_directories(c.out);
    const auto rows = scan_rows(p, true, c.t, c.grid, c.tol);
    write_csv(fs::path(c.out) / "snapshot.csv", "x_nm", rows);
    write_manifest(c.out, c, {"snapshot.csv"}, now_seconds() - t0);
    return 0;
}

int cmd_timeseries(RunConfig c) {
    check_grid(c.grid);
    check_tol(c.tol);
    const double t0 = now_seconds();
    const StepParams p{c.mu0, c.energy_k};
    if (c.grid.stop <= c.x / kSpeedOfLight)
        std::fprintf(stderr,
                     "warning: time grid ends before the front arrival at "
                     "t = x/c = %.6g fs; the series is identically zero\n",
                     c.x / kSpeedOfLight);
    fs::create_directories(c.out);
    const auto rows = scan_rows(p, false, c.x, c.grid, c.tol);
    write_csv(fs::path(c.out) / "timeseries.csv", "t_fs", rows);
    write_manifest(c.out, c, {"timeseries.csv"}, now_seconds() - t0);
    return 0;
}

void write_combined(const fs::path& path, const std::vector<double>& coords,
                    const char* coord_name,
                    const std::vector<std::pair<std::string, std::vector<Row>>>& series) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << coord_name;
    for (const auto& s : series) f << ",abs2_psi_" << s.first;
    f << '\n';
    for (size_t i = 0; i < coords.size(); ++i) {
        f << fmt17(coords[i]);
        for (const auto& s : series) f << ',' << fmt17(s.second[i].psi.abs2);
        f << '\n';
    }
}

int cmd_figure(RunConfig c) {
    check_tol(c.tol);
    const double t0 = now_seconds();
    const StepParams p{c.mu0, c.energy_k};
    fs::create_directories(c.out);
    const fs::path dir(c.out);
    std::vector<std::string> outputs;

    auto snapshot_set = [&](const std::vector<double>& times, const GridSpec& g,
                            const std::string& stem) {
        for (size_t i = 0; i < times.size(); ++i) {
            const std::string name = (times.size() == 1)
                                         ? stem + ".csv"
                                         : stem + "_t" + std::to_string(i + 1) + ".csv";
            write_csv(dir / name, "x_nm", scan_rows(p, true, times[i], g, c.tol));
            outputs.push_back(name);
        }
    };
    auto series_set = [&](const std::vector<double>& xs, const GridSpec& g,
                          const std::string& stem) {
        std::vector<std::pair<std::string, std::vector<Row>>> all;
        for (size_t i = 0; i < xs.size(); ++i) {
            const std::string name = (xs.size() == 1)
                                         ? stem + ".csv"
                                         : stem + "_x" + std::to_string(i + 1) + ".csv";
            auto rows = scan_rows(p, false, xs[i], g, c.tol);
            write_csv(dir / name, "t_fs", rows);
            outputs.push_back(name);
            all.push_back({"x" + std::to_string(i + 1), std::move(rows)});
        }
        if (xs.size() > 1) {
            std::vector<double> coords;
            for (const Row& r : all.front().second) coords.push_back(r.coord);
            write_combined(dir / (stem + ".csv"), coords, "t_fs", all);
            outputs.push_back(stem + ".csv");
        }
    };

    if (c.figure == "fig3")
        snapshot_set({0.001, 0.0035, 0.0075, 0.012}, {0.0, 3.0, 600}, "fig3");
    else if (c.figure == "fig4")
        snapshot_set({0.05}, {0.0, 16.0, 2000}, "fig4");
    else if (c.figure == "fig5")
        snapshot_set({0.3}, {0.0, 92.0, 2000}, "fig5");
    else if (c.figure == "fig6")
        series_set({0.4, 0.6, 0.8}, {1e-4, 0.4, 1600}, "fig6");
    else if (c.figure == "fig7")
        series_set({3.0}, {1e-4, 0.4, 1600}, "fig7");
    else if (c.figure == "fig8")
        series_set({0.1, 0.3, 0.5}, {1e-4, 0.3, 1500}, "fig8");
    else
        throw CLI::ValidationError("--figure", "unknown preset (use fig3..fig8)");

    write_manifest(c.out, c, outputs, now_seconds() - t0);
    return 0;
}

int cmd_params(const RunConfig& c) {
    const StepParams p{c.mu0, c.energy_k};
    const DerivedParams d = derive_params(p);
    std::printf("parameter            value\n");
    std::printf("mu0        [1/nm]    %s\n", fmt17(p.mu0).c_str());
    std::printf("E = k      [1/nm]    %s\n", fmt17(p.energy_k).c_str());
    std::printf("E_r        [eV]      %s\n", fmt17(p.energy_k * kHbarC).c_str());
    std::printf("q          [1/nm]    %s\n", fmt17(d.q).c_str());
    std::printf("x_p        [nm]      %s\n", fmt17(d.x_p).c_str());
    std::printf("2 x_p      [nm]      %s\n", fmt17(2.0 * d.x_p).c_str());
    std::printf("|k+|^2     [-]       %s\n", fmt17(std::norm(d.k_plus)).c_str());
    std::printf("\nnotes:\n");
    std::printf("  2 x_p computed from these inputs is %.4f nm; the published\n"
                "  value 1.317 nm disagrees by ~1.5%% and is NOT forced.\n",
                2.0 * d.x_p);
    std::printf("  E = 5.064e-2 1/nm is the published literal; 10 eV / (hbar c)\n"
                "  would give %.4e 1/nm.\n", 10.0 / kHbarC);
    return 0;
}

int cmd_validate(RunConfig c) {
    check_tol(c.tol);
    const double t0 = now_seconds();
    const StepParams p{c.mu0, c.energy_k};
    derive_params(p);  // reject bad parameters before any run
    fs::create_directories(c.out);
    json checks = json::array();
    bool all_pass = true;
    auto add = [&](const std::string& name, double measured, double tolerance,
                   bool pass) {
        checks.push_back({{"name", name},
                          {"measured", measured},
                          {"tolerance", tolerance},
                          {"pass", pass}});
        all_pass = all_pass && pass;
    };

    // 1. Series vs inverse-transform quadrature on a 10x10 interior grid.
    {
        double worst = 0.0;
        std::vector<std::pair<double, double>> pts;
        for (int it = 0; it < 10; ++it)
            for (int ix = 0; ix < 10; ++ix) {
                const double t = 0.01 + (0.3 - 0.01) * it / 9.0;
                const double x = (0.1 + 0.8 * ix / 9.0) * kSpeedOfLight * t;
                pts.push_back({x, t});
            }
        std::vector<double> err(pts.size());
        parallel_for(static_cast<int>(pts.size()), [&](int i) {
            const SpacetimePoint pt{pts[i].first, pts[i].second};
            err[i] = std::abs(psi_exact(p, pt).value -
                              bromwich_quadrature(p, pt).value);
        });
        for (double e : err) worst = std::max(worst, e);
        add("series_vs_quadrature_max_abs", worst, c.quad_tol, worst < c.quad_tol);
    }

    // 2. FDTD convergence ladder.
    {
        std::vector<double> probes = {0.1, 0.5, 1.0, 3.0};
        std::vector<double> l2(c.fdtd_dx.size());
        double drift = 0.0, leak = 0.0;
        for (size_t lvl = 0; lvl < c.fdtd_dx.size(); ++lvl) {
            const FdtdSpec spec =
                make_fdtd_spec(c.fdtd_dx[lvl], 1.0, -80.0, 40.0, c.fdtd_t_end);
            const auto run = fdtd_run(p, spec, probes, 25, 3);
            drift = std::max(drift, run.energy_drift);
            leak = std::max(leak, run.causality_leakage);
            double num = 0.0, den = 0.0;
            for (const auto& pr : run.probes)
                for (size_t i = 0; i < pr.times.size(); ++i) {
                    const auto ex = psi_exact(p, {pr.x_probe, pr.times[i]}).value;
                    num += std::norm(pr.values[i] - ex);
                    den += std::norm(ex);
                }
            l2[lvl] = std::sqrt(num / den);
        }
        add("fdtd_final_l2_rel", l2.back(), c.fdtd_final_tol,
            l2.back() < c.fdtd_final_tol);
        add("fdtd_energy_drift", drift, 1e-6, drift < 1e-6);
        add("fdtd_causality_leakage", leak, 1e-6, leak < 1e-6);
        for (size_t lvl = 0; lvl + 1 < l2.size(); ++lvl) {
            const double ratio = l2[lvl] / l2[lvl + 1];
            add("fdtd_convergence_ratio_" + std::to_string(lvl + 1), ratio, 0.8,
                std::abs(ratio - 4.0) < 0.8);
        }
    }

    // 3. Limit checks.
    {
        const StepParams tiny{1e-8, 5e-9};
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double t = 0.01 + 0.29 * ((i * 37) % 100) / 99.0;
            const double x = (0.02 + 0.95 * ((i * 59) % 100) / 99.0) *
                             kSpeedOfLight * t;
            worst = std::max(worst, std::abs(psi_exact(tiny, {x, t}).value -
                                             psi_free(tiny.energy_k, {x, t}).value));
        }
        add("free_limit_sup", worst, 1e-6, worst < 1e-6);

        const SpacetimePoint late{0.1, 20.0};
        const double rel = std::abs(psi_exact(p, late).value -
                                    phi_stationary(p, late).value) /
                           std::abs(phi_stationary(p, late).value);
        add("stationary_limit_rel", rel, 1e-5, rel < 1e-5);

        double worst_cone = 0.0;
        for (const double t : {0.05, 0.3}) {
            const double x = kSpeedOfLight * t * (1.0 - 1e-3);
            const auto ex = psi_exact(p, {x, t}).value;
            worst_cone = std::max(
                worst_cone, std::abs(psi_cutoff_asym(p, {x, t}).value - ex) /
                                std::abs(ex));
        }
        add("cutoff_asymptote_rel", worst_cone, 0.01, worst_cone < 0.01);
    }

    // 4. Causality scans (analytic evaluator).
    {
        double worst = 0.0;
        for (const double t : {0.01, 0.05, 0.3}) {
            std::vector<double> grid;
            for (int i = 1; i <= 40; ++i)
                grid.push_back(kSpeedOfLight * t * (1.0 + 0.05 * i));
            worst = std::max(worst, causality_scan(p, t, grid));
        }
        add("causality_max_abs2", worst, 0.0, worst == 0.0);
    }

    json report;
    report["tool"] = "kgstep validate";
    report["version"] = kVersion;
    report["config"] = config_json(c);
    report["checks"] = checks;
    report["all_pass"] = all_pass;
    report["timing"] = {{"wall_seconds", now_seconds() - t0}};
    std::ofstream f(fs::path(c.out) / "validate.json", std::ios::binary);
    if (!f) throw std::runtime_error("cannot write validate.json");
    f << report.dump(2) << '\n';
    std::printf("%s\n", all_pass ? "validate: all checks passed"
                                 : "validate: FAILURES (see validate.json)");
    return all_pass ? 0 : 2;
}

void load_config_file(const std::string& path, RunConfig& c) {
    std::ifstream f(path);
    if (!f) throw CLI::ValidationError("--config", "cannot read " + path);
    json j = json::parse(f);
    if (j.contains("config")) j = j["config"];  // accept a full manifest
    if (j.contains("mu0")) c.mu0 = j["mu0"];
    if (j.contains("k")) c.energy_k = j["k"];
    if (j.contains("energy_ev")) c.energy_k = energy_to_wavenumber(j["energy_ev"]);
    if (j.contains("t")) c.t = j["t"];
    if (j.contains("x")) c.x = j["x"];
    if (j.contains("grid")) {
        c.grid.start = j["grid"][0];
        c.grid.stop = j["grid"][1];
        c.grid.n = j["grid"][2];
    }
    if (j.contains("tol")) c.tol = j["tol"];
    if (j.contains("figure")) c.figure = j["figure"];
    if (j.contains("out")) c.out = j["out"];
    if (j.contains("fdtd_dx")) c.fdtd_dx = j["fdtd_dx"].get<std::vector<double>>();
    if (j.contains("fdtd_t_end")) c.fdtd_t_end = j["fdtd_t_end"];
    if (j.contains("fdtd_final_tol")) c.fdtd_final_tol = j["fdtd_final_tol"];
    if (j.contains("quad_tol")) c.quad_tol = j["quad_tol"];
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact relativistic shutter dynamics for a step barrier"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string config_file;
    double energy_ev = 0.0;
    std::vector<double> grid_flag;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_file, "JSON config or manifest file");
        sub->add_option("--mu0", cfg.mu0, "barrier mass parameter [1/nm]");
        sub->add_option("--k", cfg.energy_k, "incident wavenumber E [1/nm]");
        sub->add_option("--energy-ev", energy_ev, "incident energy [eV]")
            ->excludes("--k");
        sub->add_option("--tol", cfg.tol, "series tolerance");
        sub->add_option("--out", cfg.out, "output directory");
        return sub;
    };

    CLI::App* snap = add_common(app.add_subcommand("snapshot", "field over x at fixed t"));
    snap->add_option("--t", cfg.t, "time [fs]");
    snap->add_option("--grid", grid_flag, "start,stop,n")->delimiter(',')->expected(3);

    CLI::App* ts = add_common(app.add_subcommand("timeseries", "field over t at fixed x"));
    ts->add_option("--x", cfg.x, "position [nm]");
    ts->add_option("--grid", grid_flag, "start,stop,n")->delimiter(',')->expected(3);

    CLI::App* fig = add_common(app.add_subcommand("figure", "preset figure grids"));
    fig->add_option("--figure", cfg.figure, "fig3..fig8");

    CLI::App* val = add_common(app.add_subcommand("validate", "oracle cross-checks"));
    val->add_option("--fdtd-dx", cfg.fdtd_dx, "convergence-ladder spacings [nm]")
        ->delimiter(',');
    val->add_option("--fdtd-t-end", cfg.fdtd_t_end, "ladder end time [fs]");
    val->add_option("--fdtd-final-tol", cfg.fdtd_final_tol,
                    "relative L2 bound on the finest level");
    val->add_option("--quad-tol", cfg.quad_tol, "series-vs-quadrature bound");

    CLI::App* par = add_common(app.add_subcommand("params", "derived parameters"));
    (void)par;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try {
        CLI::App* sub = app.get_subcommands().front();
        cfg.command = sub->get_name();

        // Config file first, then flags override.
        if (!config_file.empty()) {
            RunConfig from_file = cfg;
            load_config_file(config_file, from_file);
            // Re-apply any flags the user passed explicitly.
            auto keep = [&](const char* flag) { return sub->count(flag) > 0; };
            if (!keep("--mu0")) cfg.mu0 = from_file.mu0;
            if (!keep("--k") && !keep("--energy-ev")) cfg.energy_k = from_file.energy_k;
            if (!keep("--tol")) cfg.tol = from_file.tol;
            if (!keep("--out")) cfg.out = from_file.out;
            if (sub->get_option_no_throw("--t") && !keep("--t")) cfg.t = from_file.t;
            if (sub->get_option_no_throw("--x") && !keep("--x")) cfg.x = from_file.x;
            if (sub->get_option_no_throw("--figure") && !keep("--figure"))
                cfg.figure = from_file.figure;
            if (sub->get_option_no_throw("--grid") && !keep("--grid"))
                cfg.grid = from_file.grid;
            if (sub->get_option_no_throw("--fdtd-dx")) {
                if (!keep("--fdtd-dx")) cfg.fdtd_dx = from_file.fdtd_dx;
                if (!keep("--fdtd-t-end")) cfg.fdtd_t_end = from_file.fdtd_t_end;
                if (!keep("--fdtd-final-tol"))
                    cfg.fdtd_final_tol = from_file.fdtd_final_tol;
                if (!keep("--quad-tol")) cfg.quad_tol = from_file.quad_tol;
            }
        }
        if (sub->count("--energy-ev") > 0)
            cfg.energy_k = energy_to_wavenumber(energy_ev);
        if (grid_flag.size() == 3) {
            cfg.grid.start = grid_flag[0];
            cfg.grid.stop = grid_flag[1];
            cfg.grid.n = static_cast<int>(grid_flag[2]);
        } else if (cfg.grid.n == 0) {
            cfg.grid = (cfg.command == "snapshot") ? GridSpec{0.0, 16.0, 2000}
                                                   : GridSpec{1e-4, 0.4, 1600};
        }

        derive_params({cfg.mu0, cfg.energy_k});  // reject unsupported regimes early

        if (cfg.command == "snapshot") return cmd_snapshot(cfg);
        if (cfg.command == "timeseries") return cmd_timeseries(cfg);
        if (cfg.command == "figure") return cmd_figure(cfg);
        if (cfg.command == "validate") return cmd_validate(cfg);
        if (cfg.command == "params") return cmd_params(cfg);
        std::fprintf(stderr, "error: unknown command\n");
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "runtime error: %s\n", e.what());
        return 3;
    }
}
