// Command-line front end: wires flat key=value configs to the experiments and
// emits CSV/flat-text reports. Exit codes: 0 success, 2 validation error,
// 3 runtime failure (recorded in the report when possible).

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include "gardner/config.hpp"
#include "gardner/csv.hpp"
#include "gardner/errors.hpp"
#include "gardner/evolve.hpp"
#include "gardner/local_time.hpp"
#include "gardner/norms.hpp"
#include "gardner/scaling.hpp"
#include "gardner/solitons.hpp"
#include "gardner/stability.hpp"
#include "gardner/xsb.hpp"

namespace fs = std::filesystem;
using namespace gardner;

namespace {

struct CommonArgs {
    std::string config_path;
    std::string out_dir;
    uint64_t seed = 0;
    bool seed_set = false;
};

Config load_config(const CommonArgs& args) {
    Config cfg = args.config_path.empty() ? Config{} : Config::parse_file(args.config_path);
    if (args.seed_set) cfg.set("seed", std::to_string(args.seed));
    fs::create_directories(args.out_dir);
    return cfg;
}

SolitonParams soliton_from_config(const Config& cfg) {
    SolitonParams p;
    p.sigma = cfg.get_double("sigma", 0.35);
    p.c0 = cfg.get_double("c0", 0.23);
    p.branch = parse_branch(cfg.get_string("branch", "focusing"));
    p.validate();
    return p;
}

GridSpec grid_from_config(const Config& cfg, const SolitonParams& p, int default_n = 4096) {
    const int n = cfg.get_int("grid.n", default_n);
    const double L = cfg.get_double("grid.L", GridSpec::default_half_length(p.c0));
    return GridSpec(n, L);
}

Config resolved_soliton_config(const Config& cfg, const SolitonParams& p, const GridSpec& g) {
    Config r = cfg;
    r.set("sigma", format_double(p.sigma));
    r.set("c0", format_double(p.c0));
    r.set("branch", branch_name(p.branch));
    r.set("grid.n", std::to_string(g.size()));
    r.set("grid.L", format_double(g.half_length()));
    return r;
}

std::string out_path(const CommonArgs& args, const std::string& name) {
    return (fs::path(args.out_dir) / name).string();
}

int run_soliton_check(const CommonArgs& args) {
    Config cfg = load_config(args);
    SolitonParams p = soliton_from_config(cfg);
    GridSpec grid = grid_from_config(cfg, p);
    Config resolved = resolved_soliton_config(cfg, p, grid);

    Field phi = soliton_profile(p, grid, 0.0);
    write_field_csv(out_path(args, "profile.csv"), phi);

    OdeResiduals res = ode_residuals(p, grid);

    // kernel check and spectrum on a moderate grid (dense eigensolve)
    const int eig_n = cfg.get_int("soliton.eigen_n", 1024);
    GridSpec eig_grid(std::min(eig_n, 2048), grid.half_length());
    LinearizedOperator lin(p, eig_grid);
    Field phi_prime = sample(eig_grid, [&](double x) { return soliton_slope(p, x); });
    const double kernel_residual = l2_norm(lin.apply(phi_prime)) / l2_norm(phi_prime);
    std::vector<double> eigs = lin.eigenvalues();

    std::vector<std::vector<double>> spectrum_rows;
    const int keep = std::min<int>(64, static_cast<int>(eigs.size()));
    for (int i = 0; i < keep; ++i) {
        spectrum_rows.push_back({static_cast<double>(i), eigs[static_cast<size_t>(i)]});
    }
    write_table_csv(out_path(args, "spectrum.csv"), "index,eigenvalue", spectrum_rows, &resolved);

    write_report(out_path(args, "soliton_report.txt"),
                 {
                     {"peak", format_double(phi.values[grid.size() / 2])},
                     {"peak_closed_form", format_double(soliton_peak(p))},
                     {"speed", format_double(soliton_speed(p))},
                     {"residual_second_order", format_double(res.second_order)},
                     {"residual_first_integral", format_double(res.first_integral)},
                     {"kernel_residual", format_double(kernel_residual)},
                     {"lowest_eigenvalue", format_double(eigs.front())},
                 },
                 &resolved);
    return 0;
}

int run_evolve(const CommonArgs& args) {
    Config cfg = load_config(args);
    SolitonParams p = soliton_from_config(cfg);
    GridSpec grid = grid_from_config(cfg, p);

    EvolveConfig ecfg;
    ecfg.dt = cfg.get_double("dt", 1e-3);
    ecfg.t_end = cfg.get_double("t_end", 10.0);
    ecfg.dealias = cfg.get_bool("dealias", true);
    ecfg.log_every = cfg.get_int("log_every", 100);
    ecfg.validate();

    const bool oracle = cfg.get_string("evolve.oracle", "soliton") == "soliton";
    const std::vector<double> snapshot_times = cfg.get_double_list("snapshot.times", {});

    Config resolved = resolved_soliton_config(cfg, p, grid);
    resolved.set("dt", format_double(ecfg.dt));
    resolved.set("t_end", format_double(ecfg.t_end));
    resolved.set("dealias", ecfg.dealias ? "on" : "off");

    const NonlinearCoeffs coeffs = p.branch == Branch::focusing
                                       ? NonlinearCoeffs::mkdv_background(p.sigma)
                                       : NonlinearCoeffs::defocusing_background(p.sigma);
    const double drift = p.branch == Branch::focusing ? soliton_speed(p) : -soliton_speed(p);

    Field v0 = soliton_profile(p, grid, 0.0);
    Simulation sim(v0, coeffs, ecfg);

    std::string header = "t,mean,mass,energy";
    if (oracle) header += ",l2_error_vs_oracle";
    std::vector<std::vector<double>> rows;
    size_t next_snapshot = 0;

    auto log_sample = [&] {
        ConservedTriple c = conserved_general(sim.state(), coeffs);
        std::vector<double> row{sim.time(), c.mean, c.mass, c.energy};
        if (oracle) {
            Field target = soliton_profile(p, grid, drift * sim.time());
            row.push_back(l2_norm(sim.state() - target));
        }
        rows.push_back(std::move(row));
    };

    const long total = std::lround(ecfg.t_end / ecfg.dt);
    int status = 0;
    std::string failure;
    try {
        log_sample();
        while (sim.steps_taken() < total) {
            const long chunk = std::min<long>(ecfg.log_every, total - sim.steps_taken());
            // write any requested snapshots that fall inside this chunk
            while (next_snapshot < snapshot_times.size() &&
                   snapshot_times[next_snapshot] <= sim.time() + chunk * ecfg.dt + 1e-12) {
                sim.advance_to(snapshot_times[next_snapshot]);
                write_field_csv(
                    out_path(args, "snapshot_t" + format_double(sim.time()) + ".csv"),
                    sim.state());
                ++next_snapshot;
            }
            sim.advance(static_cast<int>(chunk - (sim.steps_taken() % ecfg.log_every == 0
                                                      ? 0
                                                      : sim.steps_taken() % ecfg.log_every)));
            log_sample();
        }
    } catch (const RuntimeFailure& e) {
        failure = std::string(failure_kind_name(e.kind())) + ": " + e.what();
        write_field_csv(out_path(args, "last_valid_state.csv"), sim.last_valid());
        status = 3;
    }

    write_table_csv(out_path(args, "run_log.csv"), header, rows, &resolved);
    std::vector<std::pair<std::string, std::string>> report{
        {"status", status == 0 ? "ok" : "failed"},
        {"steps", std::to_string(sim.steps_taken())},
        {"final_time", format_double(sim.time())},
    };
    if (!failure.empty()) report.push_back({"failure", failure});
    write_report(out_path(args, "evolve_report.txt"), report, &resolved);
    return status;
}

int run_stability(const CommonArgs& args) {
    Config cfg = load_config(args);
    SolitonParams p = soliton_from_config(cfg);
    GridSpec grid = grid_from_config(cfg, p, 2048);

    StabilityRunConfig rcfg;
    rcfg.dt = cfg.get_double("dt", 1e-3);
    rcfg.t_end = cfg.get_double("t_end", 50.0);
    rcfg.sample_dt = cfg.get_double("track.sample_dt", 0.1);
    rcfg.dealias = cfg.get_bool("dealias", true);
    rcfg.pass_K = cfg.get_double("stability.K", 50.0);
    const uint64_t seed = cfg.get_u64("seed", 1);

    std::vector<double> deltas = cfg.get_double_list("perturbation.delta", {1e-3});
    std::vector<std::string> shape_names =
        cfg.get_string_list("perturbation.shape", {"bump"});
    if (shape_names.size() == 1 && shape_names[0] == "all") {
        shape_names = {"family", "bump", "noise"};
    }
    std::vector<PerturbationShape> shapes;
    for (const auto& s : shape_names) shapes.push_back(parse_perturbation_shape(s));

    Config resolved = resolved_soliton_config(cfg, p, grid);
    resolved.set("dt", format_double(rcfg.dt));
    resolved.set("t_end", format_double(rcfg.t_end));
    resolved.set("track.sample_dt", format_double(rcfg.sample_dt));
    resolved.set("stability.K", format_double(rcfg.pass_K));
    resolved.set("seed", std::to_string(seed));

    struct Job {
        PerturbationShape shape;
        double delta;
        StabilityResult result;
        std::string error;
    };
    std::vector<Job> jobs;
    for (auto shape : shapes) {
        for (double d : deltas) jobs.push_back({shape, d, {}, {}});
    }

    // runs are independent; sweep them concurrently
    std::vector<std::future<void>> futures;
    futures.reserve(jobs.size());
    for (auto& job : jobs) {
        futures.push_back(std::async(std::launch::async, [&job, &p, &grid, &rcfg, seed] {
            try {
                job.result = run_stability_experiment(p, job.shape, job.delta, seed, grid, rcfg);
            } catch (const std::exception& e) {
                job.error = e.what();
            }
        }));
    }
    for (auto& f : futures) f.get();

    int status = 0;
    std::vector<std::pair<std::string, std::string>> summary;
    for (const auto& job : jobs) {
        const std::string tag =
            std::string(perturbation_shape_name(job.shape)) + "_" + format_double(job.delta);
        if (!job.error.empty()) {
            write_report(out_path(args, "report_" + tag + ".txt"),
                         {{"status", "failed"}, {"failure", job.error}}, &resolved);
            status = 3;
            continue;
        }
        const StabilityReport& rep = job.result.report;

        std::vector<std::vector<double>> rows;
        for (const auto& s : job.result.trace.samples) {
            rows.push_back({s.t, s.r, s.r_prime, s.h1_distance, s.conserved.mean,
                            s.conserved.mass, s.conserved.energy});
        }
        write_table_csv(out_path(args, "trace_" + tag + ".csv"),
                        "t,r,r_prime,h1_distance,mean,mass,energy", rows, &resolved);

        write_report(out_path(args, "report_" + tag + ".txt"),
                     {
                         {"sigma", format_double(p.sigma)},
                         {"c0", format_double(p.c0)},
                         {"branch", branch_name(p.branch)},
                         {"shape", perturbation_shape_name(job.shape)},
                         {"delta", format_double(rep.delta)},
                         {"epsilon_observed", format_double(rep.epsilon_observed)},
                         {"speed_deviation", format_double(rep.speed_deviation)},
                         {"measured_K", format_double(rep.measured_K)},
                         {"root_lost", rep.root_lost ? "true" : "false"},
                         {"pass", rep.pass ? "true" : "false"},
                     },
                     &resolved);
        summary.push_back({tag, rep.pass ? "pass" : "fail"});
        if (rep.root_lost) status = 3;
    }
    write_report(out_path(args, "stability_summary.txt"), summary, &resolved);
    return status;
}

int run_convexity(const CommonArgs& args) {
    Config cfg = load_config(args);
    SolitonParams p = soliton_from_config(cfg);
    const int n = cfg.get_int("grid.n", 4096);

    const double c0_min = cfg.get_double("convexity.c0_min", 1e-2);
    const double c0_max = cfg.get_double("convexity.c0_max", 1e2);
    const int per_decade = cfg.get_int("convexity.points_per_decade", 4);

    std::vector<double> c0s;
    const int decades = static_cast<int>(std::round(std::log10(c0_max / c0_min)));
    for (int i = 0; i <= decades * per_decade; ++i) {
        c0s.push_back(c0_min * std::pow(10.0, static_cast<double>(i) / per_decade));
    }
    c0s.push_back(p.c0);

    Config resolved = cfg;
    resolved.set("grid.n", std::to_string(n));

    std::vector<std::vector<double>> rows;
    double max_abs_err = 0.0;
    for (double c0 : c0s) {
        SolitonParams q = p;
        q.c0 = c0;
        if (q.branch == Branch::defocusing && !(c0 < 4.0 * q.sigma * q.sigma)) continue;
        GridSpec grid(n, GridSpec::default_half_length(c0));
        DSecond d2 = d_second(q, grid);
        const double err = std::abs(d2.quadrature - d2.closed_form);
        max_abs_err = std::max(max_abs_err, err);
        rows.push_back({c0, d2.quadrature, d2.closed_form, err});
    }
    write_table_csv(out_path(args, "convexity.csv"), "c0,d2_numeric,d2_closed_form,abs_err",
                    rows, &resolved);
    write_report(out_path(args, "convexity_report.txt"),
                 {{"max_abs_err", format_double(max_abs_err)},
                  {"points", std::to_string(rows.size())}},
                 &resolved);
    return 0;
}

int run_scaling_check(const CommonArgs& args) {
    Config cfg = load_config(args);
    SolitonParams p = soliton_from_config(cfg);
    GridSpec grid = grid_from_config(cfg, p, 2048);

    ScalingParams sp;
    sp.lambda = cfg.get_double("scaling.lambda", 2.0);
    sp.alpha = cfg.get_double("scaling.alpha", 3.0);
    sp.validate();
    const double t_v = cfg.get_double("scaling.t", 0.125);
    const double dt = cfg.get_double("dt", 1e-3);

    Field v0 = soliton_profile(p, grid, 0.0);

    // the lambda substitution only closes in the zero-transport frame
    EvolveConfig direct_cfg{dt, t_v, true, 1000};
    Simulation direct(v0, NonlinearCoeffs::gardner_frame(p.sigma), direct_cfg);
    direct.advance_to(t_v);

    const double lam = sp.lambda;
    NonlinearCoeffs scaled{0.0, 6.0 * p.sigma * std::pow(lam, sp.alpha - 2.0),
                           2.0 * std::pow(lam, 2.0 * (sp.alpha - 1.0))};
    const double t_w = t_v * lam * lam * lam;
    EvolveConfig scaled_cfg{dt, t_w, true, 1000};
    Simulation rescaled(scale_down(v0, sp), scaled, scaled_cfg);
    rescaled.advance_to(t_w);

    const double discrepancy = l2_norm(scale_up(rescaled.state(), sp) - direct.state());

    Config resolved = resolved_soliton_config(cfg, p, grid);
    resolved.set("scaling.lambda", format_double(sp.lambda));
    resolved.set("scaling.alpha", format_double(sp.alpha));
    write_report(out_path(args, "scaling_report.txt"),
                 {{"l2_discrepancy", format_double(discrepancy)},
                  {"t_direct", format_double(t_v)},
                  {"t_rescaled", format_double(t_w)}},
                 &resolved);
    return 0;
}

int run_local_time(const CommonArgs& args) {
    Config cfg = load_config(args);
    const double s = cfg.get_double("local_time.s", 1.0);
    const double c0_const = cfg.get_double("local_time.c0", 1.0);
    const double alpha = cfg.get_double("local_time.alpha", 3.0);
    const std::vector<double> norms =
        cfg.get_double_list("local_time.norms", {cfg.get_double("local_time.norm", 1.0)});

    std::vector<std::vector<double>> rows;
    for (double nu : norms) {
        LocalTimeEstimate est = local_time_estimate(nu, s, c0_const, alpha);
        rows.push_back({nu, est.T, est.lambda0, est.d1, est.d2});
    }
    write_table_csv(out_path(args, "local_time.csv"), "norm,T,lambda0,d1,d2", rows, &cfg);

    LocalTimeEstimate first = local_time_estimate(norms.front(), s, c0_const, alpha);
    write_report(out_path(args, "local_time_report.txt"),
                 {{"norm", format_double(norms.front())},
                  {"T", format_double(first.T)},
                  {"lambda0", format_double(first.lambda0)},
                  {"d1", format_double(first.d1)},
                  {"d2", format_double(first.d2)}},
                 &cfg);
    return 0;
}

int run_xsb_sample(const CommonArgs& args) {
    Config cfg = load_config(args);
    EnsembleSpec spec{
        cfg.get_int("xsb.count", 64),
        parse_ensemble_kind(cfg.get_string("xsb.kind", "generic-random")),
        cfg.get_u64("seed", 1),
        cfg.get_double("xsb.s", 0.5),
        cfg.get_double("xsb.b", 0.51),
        GridSpec(cfg.get_int("grid.n", 256), cfg.get_double("grid.L", 40.0)),
        cfg.get_int("xsb.nt", 256),
        cfg.get_double("xsb.t_half", 2.0),
    };
    spec.validate();

    Config resolved = cfg;
    resolved.set("xsb.kind", ensemble_kind_name(spec.kind));
    resolved.set("xsb.s", format_double(spec.s));
    resolved.set("xsb.b", format_double(spec.b));
    resolved.set("seed", std::to_string(spec.seed));

    struct Estimator {
        const char* name;
        RatioStats stats;
    };
    std::vector<Estimator> estimators;
    estimators.push_back({"trilinear", sample_trilinear_ratio(spec)});
    estimators.push_back({"bilinear_l2", sample_bilinear_l2_ratio(spec)});
    if (spec.s > 0.0) estimators.push_back({"bilinear_dx", sample_bilinear_dx_ratio(spec)});

    for (const auto& est : estimators) {
        std::vector<std::vector<double>> rows;
        for (const auto& s : est.stats.samples) {
            rows.push_back({static_cast<double>(s.sample_id), static_cast<double>(
                                static_cast<int>(spec.kind)),
                            spec.s, spec.b, s.ratio});
        }
        write_table_csv(out_path(args, std::string(est.name) + "_report.csv"),
                        "sample_id,kind,s,b,ratio", rows, &resolved);
        write_table_csv(out_path(args, std::string(est.name) + "_summary.csv"),
                        "s,b,kind,max,mean,p50,p95",
                        {{spec.s, spec.b, static_cast<double>(static_cast<int>(spec.kind)),
                          est.stats.max, est.stats.mean, est.stats.p50, est.stats.p95}},
                        &resolved);
    }

    const std::vector<double> deltas = cfg.get_double_list("xsb.fit_deltas", {1.0, 0.5, 0.25});
    CutoffScalingFit fit = cutoff_scaling_fit(spec, deltas);
    std::vector<std::pair<std::string, std::string>> report{
        {"fitted_exponent", format_double(fit.fitted_exponent)},
        {"predicted_exponent", format_double(fit.predicted_exponent)},
    };
    for (size_t i = 0; i < fit.deltas.size(); ++i) {
        report.push_back({"norm_delta_" + format_double(fit.deltas[i]),
                          format_double(fit.norms[i])});
    }
    write_report(out_path(args, "xsb_report.txt"), report, &resolved);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gardner equation simulation laboratory"};
    app.require_subcommand(1);

    CommonArgs args;
    struct Sub {
        const char* name;
        const char* help;
        int (*fn)(const CommonArgs&);
    };
    const std::vector<Sub> subs{
        {"soliton-check", "construct a soliton and verify its defining ODEs", run_soliton_check},
        {"evolve", "time-integrate the equation and log conserved quantities", run_evolve},
        {"stability", "perturbed-soliton experiments with phase tracking", run_stability},
        {"convexity", "d''(c0) sweep against the closed form", run_convexity},
        {"scaling-check", "rescaled-evolution consistency check", run_scaling_check},
        {"local-time", "local-existence-time arithmetic", run_local_time},
        {"xsb-sample", "space-time estimate ratio sampler", run_xsb_sample},
    };

    std::map<std::string, int (*)(const CommonArgs&)> dispatch;
    for (const auto& sub : subs) {
        CLI::App* s = app.add_subcommand(sub.name, sub.help);
        s->add_option("--config", args.config_path, "flat key = value config file");
        s->add_option("--out", args.out_dir, "output directory")->required();
        s->add_option("--seed", args.seed, "override the config seed")
            ->each([&args](const std::string&) { args.seed_set = true; });
        dispatch[sub.name] = sub.fn;
    }

    CLI11_PARSE(app, argc, argv);

    const std::string chosen = app.get_subcommands().front()->get_name();
    try {
        return dispatch[chosen](args);
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const RuntimeFailure& e) {
        std::cerr << failure_kind_name(e.kind()) << ": " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
