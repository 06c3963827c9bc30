#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nsf/config.hpp"
#include "nsf/diagnostics.hpp"
#include "nsf/io.hpp"
#include "nsf/kernels.hpp"
#include "nsf/simulate.hpp"

namespace {

namespace fs = std::filesystem;
using nsf::io::ordered_json;

constexpr int kExitBadConfig = 2;
constexpr int kExitConstruction = 3;
constexpr int kExitPositivity = 4;
constexpr int kExitBoundary = 5;

std::vector<std::string> metadata_lines(const nsf::RunConfig& cfg) {
    return {"nsfwave output", "config_hash: " + nsf::config_hash(cfg)};
}

int cmd_riemann(const nsf::RunConfig& cfg, const fs::path& out) {
    const auto ends = nsf::build_end_states(cfg.setup.gas, cfg.setup.plus, cfg.setup.strengths);
    ordered_json j = nsf::io::end_states_json(cfg.setup.gas, ends);
    j["config"] = nsf::config_json(cfg);
    j["config_hash"] = nsf::config_hash(cfg);
    nsf::io::write_json((out / "end_states.json").string(), j);

    const auto res = j["rh_residual"];
    std::cout << "sigma = " << nsf::io::format_double(ends.sigma) << "\n"
              << "RH residual = [" << res[0].get<double>() << ", " << res[1].get<double>() << ", "
              << res[2].get<double>() << "]\n"
              << "Lax condition: " << (j["lax"]["holds"].get<bool>() ? "holds" : "VIOLATED")
              << "\n";
    return j["lax"]["holds"].get<bool>() ? 0 : kExitConstruction;
}

int cmd_profile(const nsf::RunConfig& cfg, const std::string& which, const fs::path& out) {
    const nsf::GasParams& gas = cfg.setup.gas;
    const auto ends = nsf::build_end_states(gas, cfg.setup.plus, cfg.setup.strengths);
    const auto meta = metadata_lines(cfg);
    ordered_json report;
    report["wave"] = which;
    report["config_hash"] = nsf::config_hash(cfg);
    bool pass = true;

    if (which == "shock") {
        const auto prof =
            nsf::solve_shock_profile(gas, ends.starstar, ends.plus, ends.sigma);
        nsf::io::write_csv((out / "shock_profile.csv").string(), meta,
                           {"xi", "v", "u", "theta", "dv", "du", "dtheta"},
                           {&prof.xi, &prof.vS, &prof.uS, &prof.thetaS, &prof.dvS, &prof.duS,
                            &prof.dthetaS});
        bool monotone = true;
        for (std::size_t i = 1; i < prof.vS.size(); ++i)
            if (prof.vS[i] < prof.vS[i - 1]) monotone = false;
        const auto lemma = nsf::check_shock_lemma(prof, gas);
        report["monotone_v"] = monotone;
        report["ratio_u"] = lemma.ratio_u;
        report["ratio_theta"] = lemma.ratio_theta;
        report["tail_rate_left"] = lemma.tail_rate_left;
        report["tail_rate_right"] = lemma.tail_rate_right;
        report["second_deriv_ratio"] = lemma.second_deriv_ratio;
        pass = monotone;
    } else if (which == "contact") {
        const auto prof = nsf::solve_contact_profile(gas, ends.star.theta, ends.starstar.theta,
                                                     ends.p_star_cd, ends.star.u);
        nsf::io::write_csv((out / "contact_profile.csv").string(), meta,
                           {"eta", "Theta", "dTheta"}, {&prof.eta, &prof.Theta, &prof.dTheta});
        report["residual_norm"] = prof.residual_norm;
        report["degenerate"] = prof.degenerate();
        ordered_json decay = ordered_json::array();
        for (double t : {5.0, 10.0, 20.0, 50.0}) {
            const auto q = nsf::contact_residual(gas, prof, t);
            decay.push_back({{"t", t}, {"sup_Q1", q.sup_Q1}, {"sup_Q2", q.sup_Q2}});
        }
        report["residual_decay"] = decay;
        pass = prof.residual_norm < 1e-8;
    } else if (which == "rarefaction") {
        const auto wave = nsf::make_rarefaction_wave(gas, ends.minus, ends.star);
        const int n = 2001;
        std::vector<double> x(n), v(n), u(n), th(n), dv(n), du(n), dth(n);
        for (int i = 0; i < n; ++i) {
            x[i] = -40.0 + 80.0 * i / (n - 1);
            const auto e = nsf::approx_rarefaction_eval(wave, 0.0, x[i]);
            v[i] = e.v;
            u[i] = e.u;
            th[i] = e.theta;
            dv[i] = e.dv;
            du[i] = e.du;
            dth[i] = e.dtheta;
        }
        nsf::io::write_csv((out / "rarefaction_profile.csv").string(), meta,
                           {"x", "v", "u", "theta", "dv", "du", "dtheta"},
                           {&x, &v, &u, &th, &dv, &du, &dth});
        ordered_json sups = ordered_json::array();
        double prev = 1e300;
        bool decreasing = true;
        for (double t : {0.0, 10.0, 100.0}) {
            double sup = 0.0;
            const double span = 40.0 + std::abs(wave.w_minus) * t + 20.0;
            for (int i = 0; i < 4001; ++i) {
                const double xi = -span + 2.0 * span * i / 4000.0;
                const auto e = nsf::approx_rarefaction_eval(wave, t, xi);
                sup = std::max({sup, std::abs(e.dv), std::abs(e.du), std::abs(e.dtheta)});
            }
            sups.push_back({{"t", t}, {"sup_deriv", sup}});
            if (cfg.setup.strengths.delta_R > 0.0 && sup >= prev) decreasing = false;
            prev = sup;
        }
        report["sup_derivatives"] = sups;
        report["decreasing"] = decreasing;
        pass = decreasing || cfg.setup.strengths.delta_R == 0.0;
    } else {
        throw std::invalid_argument("profile: unknown wave '" + which + "'");
    }
    report["pass"] = pass;
    nsf::io::write_json((out / (which + "_report.json")).string(), report);
    std::cout << which << " profile: " << (pass ? "pass" : "FAIL") << "\n";
    return pass ? 0 : kExitConstruction;
}

int cmd_simulate(const nsf::RunConfig& cfg, const fs::path& out) {
    nsf::SimulationResult res;
    try {
        res = nsf::run_simulation(cfg.setup);
    } catch (const nsf::PositivityError& e) {
        std::cerr << "positivity lost at t = " << e.t << "\n";
        return kExitPositivity;
    } catch (const nsf::BoundaryError& e) {
        std::cerr << "boundary contamination at t = " << e.t << "\n";
        return kExitBoundary;
    }

    const auto meta = metadata_lines(cfg);
    nsf::io::write_diagnostics_csv((out / "diagnostics.csv").string(), meta, res.history);
    for (const auto& snap : res.snapshots) {
        char name[64];
        std::snprintf(name, sizeof(name), "snapshot_t%09.3f.csv", snap.t);
        nsf::io::write_snapshot_csv((out / name).string(), meta, res.grid, snap);
    }

    const auto decay = nsf::entropy_decay_check(res.history);
    ordered_json summary;
    summary["config"] = nsf::config_json(cfg);
    summary["config_hash"] = nsf::config_hash(cfg);
    summary["grid"] = {{"xi_min", res.grid.xi_min}, {"xi_max", res.grid.xi_max}, {"n", res.grid.n}};
    summary["M"] = res.M;
    summary["M_variant"] = res.M_variant;
    summary["lambda"] = res.lambda;
    summary["perturbation_h1_norm"] = res.h1_norm;
    summary["step_count"] = res.step_count;
    summary["wall_seconds"] = res.wall_seconds;
    summary["final"] = {{"t", res.history.back().t},
                        {"X", res.shift.X},
                        {"Xdot", res.history.back().Xdot},
                        {"sup_gap", res.history.back().sup_gap},
                        {"E_weighted", res.history.back().E_weighted}};
    summary["trend"] = {{"E_initial", decay.E_initial},
                        {"E_final", decay.E_final},
                        {"decayed", decay.decayed},
                        {"max_monotonicity_violation", decay.max_monotonicity_violation},
                        {"xdot_final_over_max", decay.xdot_final_over_max},
                        {"shift_sublinearity", decay.shift_sublinearity},
                        {"max_sup_gap", res.max_sup_gap},
                        {"max_abs_xdot", res.max_abs_xdot}};
    nsf::io::write_json((out / "summary.json").string(), summary);

    std::ofstream gp(out / "plot.gp");
    gp << "set datafile separator ','\n"
          "set key autotitle columnhead\n"
          "set logscale y\n"
          "plot 'diagnostics.csv' using 1:4 with lines title 'E_weighted'\n";

    std::cout << "steps = " << res.step_count << ", X(T) = " << res.shift.X
              << ", sup_gap(T) = " << res.history.back().sup_gap
              << ", E(T)/E(0) = " << decay.E_final / std::max(decay.E_initial, 1e-300) << "\n";
    return 0;
}

int cmd_check(const nsf::RunConfig& cfg, const fs::path& out) {
    ordered_json suites = ordered_json::array();
    bool all_pass = true;
    auto add = [&](const std::string& name, bool pass, ordered_json detail) {
        detail["name"] = name;
        detail["pass"] = pass;
        suites.push_back(detail);
        all_pass = all_pass && pass;
        std::cout << name << ": " << (pass ? "pass" : "FAIL") << "\n";
    };

    {  // weighted Poincare inequality
        const int n = 4001;
        auto sample = [&](auto&& f) {
            std::vector<double> s(n);
            for (int i = 0; i < n; ++i) s[i] = f(static_cast<double>(i) / (n - 1));
            return s;
        };
        const auto lin = nsf::poincare_check(sample([](double y) { return y; }));
        const bool lin_ok = std::abs(lin.lhs - 1.0 / 12.0) < 1e-6 &&
                            std::abs(lin.rhs - 1.0 / 12.0) < 1e-6;
        const auto quad = nsf::poincare_check(sample([](double y) { return y * y; }));
        const bool quad_ok = std::abs(quad.lhs - 4.0 / 45.0) < 1e-6 &&
                             std::abs(quad.rhs - 0.1) < 1e-6;

        std::mt19937 rng(cfg.seed);
        std::uniform_real_distribution<double> coeff(-1.0, 1.0);
        double worst = 0.0;
        int failures = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            double c[8], d[8];
            for (int k = 0; k < 8; ++k) {
                c[k] = coeff(rng);
                d[k] = coeff(rng);
            }
            const auto r = nsf::poincare_check(sample([&](double y) {
                double f = 0.0;
                for (int k = 0; k < 8; ++k)
                    f += c[k] * std::sin((k + 1) * M_PI * y) + d[k] * std::cos((k + 1) * M_PI * y);
                return f;
            }));
            worst = std::max(worst, r.ratio);
            if (r.ratio > 1.0 + 1e-6) ++failures;
        }
        add("poincare", lin_ok && quad_ok && failures == 0,
            {{"linear", {{"lhs", lin.lhs}, {"rhs", lin.rhs}}},
             {"quadratic", {{"lhs", quad.lhs}, {"rhs", quad.rhs}}},
             {"random_trials", 1000},
             {"worst_ratio", worst},
             {"failures", failures}});
    }

    {  // shock lemma scaling sweep
        ordered_json rows = ordered_json::array();
        std::vector<double> ru, rt;
        for (double delta : {0.2, 0.1, 0.05}) {
            const auto jump = nsf::shock3_curve(cfg.setup.gas, cfg.setup.plus,
                                                cfg.setup.plus.v - delta);
            const auto prof = nsf::solve_shock_profile(cfg.setup.gas, jump.left, cfg.setup.plus,
                                                       jump.sigma);
            const auto lemma = nsf::check_shock_lemma(prof, cfg.setup.gas);
            ru.push_back(lemma.ratio_u);
            rt.push_back(lemma.ratio_theta);
            rows.push_back({{"delta_S", delta},
                            {"ratio_u", lemma.ratio_u},
                            {"ratio_theta", lemma.ratio_theta},
                            {"tail_rate_left", lemma.tail_rate_left},
                            {"tail_rate_right", lemma.tail_rate_right}});
        }
        bool ok = true;
        for (std::size_t i = 1; i < ru.size(); ++i) {
            const double fu = ru[i] / ru[i - 1];
            const double ft = rt[i] / rt[i - 1];
            if (fu < 0.3 || fu > 0.7 || ft < 0.3 || ft > 0.7) ok = false;
        }
        add("shock_lemma_scaling", ok, {{"rows", rows}});
    }

    {  // sharp diffusion coefficient sweep
        const auto rows = nsf::check_sharp_diffusion(cfg.setup.gas, cfg.setup.plus,
                                                     {0.1, 0.05, 0.025});
        ordered_json jrows = ordered_json::array();
        std::vector<double> errs;
        for (const auto& r : rows) {
            errs.push_back(std::abs(r.chord_over_delta - r.limit_coefficient));
            jrows.push_back({{"delta_S", r.delta_S},
                             {"chord_over_delta", r.chord_over_delta},
                             {"limit", r.limit_coefficient},
                             {"residual_over_delta2", r.residual_over_delta2}});
        }
        bool ok = errs[1] < 0.2 * rows[1].limit_coefficient;
        for (std::size_t i = 1; i < errs.size(); ++i)
            if (errs[i] >= errs[i - 1]) ok = false;
        add("sharp_diffusion", ok, {{"rows", jrows}});
    }

    {  // quadrature Richardson: trapezoid error quarters under h-halving
        auto integrate_sin = [](int n) {
            std::vector<double> f(n);
            for (int i = 0; i < n; ++i) f[i] = std::sin(M_PI * i / (n - 1));
            return nsf::kernels::trapezoid(f, M_PI / (n - 1));
        };
        const double exact = 2.0;
        const double coarse = std::abs(integrate_sin(501) - exact);
        const double fine = std::abs(integrate_sin(1001) - exact);
        const double order = std::log2(coarse / fine);
        add("quadrature_richardson", order > 1.8 && order < 2.2,
            {{"err_coarse", coarse}, {"err_fine", fine}, {"order", order}});
    }

    {  // harness sanity: a deliberately reversed inequality must be reported as a failure
        const int n = 2001;
        std::vector<double> f(n);
        for (int i = 0; i < n; ++i) f[i] = static_cast<double>(i) / (n - 1);
        const auto r = nsf::poincare_check(f);
        const bool reversed_claim = r.lhs > r.rhs * (1.0 + 1e-6);  // intentionally wrong direction
        add("harness_sanity", !reversed_claim, {{"reversed_claim_detected", !reversed_claim}});
    }

    ordered_json report;
    report["config_hash"] = nsf::config_hash(cfg);
    report["suites"] = suites;
    report["all_pass"] = all_pass;
    nsf::io::write_json((out / "check_report.json").string(), report);
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* env = std::getenv("NSFWAVE_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) nsf::kernels::set_threads(n);
    }

    CLI::App app{"Composite-wave laboratory for 1D compressible Navier-Stokes-Fourier"};
    app.require_subcommand(1);
    std::string config_path, out_dir = ".", which = "shock";

    auto* riemann = app.add_subcommand("riemann", "Construct the four-state Riemann configuration");
    auto* profile = app.add_subcommand("profile", "Solve and check a single wave profile");
    profile->add_option("--wave", which, "shock|contact|rarefaction");
    auto* simulate = app.add_subcommand("simulate", "Evolve perturbed data and track the shift");
    auto* check = app.add_subcommand("check", "Run the property suites");
    for (auto* sub : {riemann, profile, simulate, check}) {
        sub->add_option("--config", config_path, "JSON config file");
        sub->add_option("--out", out_dir, "output directory");
    }

    CLI11_PARSE(app, argc, argv);

    nsf::RunConfig cfg;
    try {
        if (!config_path.empty()) cfg = nsf::load_config(config_path);
    } catch (const std::exception& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitBadConfig;
    }

    try {
        std::filesystem::create_directories(out_dir);
        const fs::path out(out_dir);
        if (riemann->parsed()) return cmd_riemann(cfg, out);
        if (profile->parsed()) return cmd_profile(cfg, which, out);
        if (simulate->parsed()) return cmd_simulate(cfg, out);
        if (check->parsed()) return cmd_check(cfg, out);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConstruction;
    }
    return 0;
}
