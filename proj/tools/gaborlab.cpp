// gaborlab: batch CLI over the time-frequency operator calculus.
//
// Subcommands: fourier, stft, project, twisted-conv, moyal, seq-verify,
// mod-norm, wiener-norm, verify-mult, verify-conv, gabor-product,
// product-identity, nlse, suite. All randomness is drawn from a single
// 64-bit seed through the counter generator, so reports are reproducible
// byte-for-byte. Exit codes: 0 ok, 1 tolerance failure, 2 precondition
// failure (named condition as JSON on stderr).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "gaborlab/fld_json.hpp"
#include "gaborlab/gabor.hpp"
#include "gaborlab/gabor_product.hpp"
#include "gaborlab/nlse.hpp"
#include "gaborlab/suite.hpp"
#include "gaborlab/testset.hpp"

using namespace gaborlab;
using nlohmann::json;

namespace {

Field load_field(const std::string& path) { return field_from_json(load_json(path)); }
PhaseField load_phasefield(const std::string& path) { return phasefield_from_json(load_json(path)); }

// window argument: a .fld path, "gauss", or the pair windows "phi"/"psi"
Field resolve_window(const std::string& spec, const Grid& g) {
    if (spec == "gauss") return gaussian_window(g);
    if (spec == "phi") return make_window_pair(g).phi;
    if (spec == "psi") return make_window_pair(g).psi;
    Field w = load_field(spec);
    require_same_grid(w.grid, g, "window grid");
    return w;
}

void emit(const json& j) { std::cout << j.dump(2) << std::endl; }

int tolerance_exit(bool ok) { return ok ? 0 : 1; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"time-frequency operator calculus workbench"};
    app.require_subcommand(1);
    app.fallthrough();  // global options like --seed may follow the subcommand
    app.set_config("--config", "", "config file with key = value lines (L, N, seed, tolerances)");

    std::uint64_t seed = 7;
    app.add_option("--seed", seed, "master seed for all randomness")->capture_default_str();

    int exit_code = 0;

    // ---- fourier ----
    auto* cmd_fourier = app.add_subcommand("fourier", "transform a field (or inverse)");
    struct {
        std::string in, out;
        bool inverse = false;
    } fa;
    cmd_fourier->add_option("--in", fa.in)->required();
    cmd_fourier->add_option("--out", fa.out)->required();
    cmd_fourier->add_flag("--inverse", fa.inverse);
    cmd_fourier->callback([&] {
        Field f = load_field(fa.in);
        save_json(to_json(fa.inverse ? inverse_fourier(f) : fourier(f)), fa.out);
    });

    // ---- stft ----
    auto* cmd_stft = app.add_subcommand("stft", "short-time Fourier transform of a field");
    struct {
        std::string in, out, window = "gauss";
    } sa;
    cmd_stft->add_option("--in", sa.in)->required();
    cmd_stft->add_option("--out", sa.out)->required();
    cmd_stft->add_option("--window", sa.window, "window: gauss, phi, psi, or an .fld path");
    cmd_stft->callback([&] {
        Field f = load_field(sa.in);
        save_json(to_json(stft(f, resolve_window(sa.window, f.grid))), sa.out);
    });

    // ---- project ----
    auto* cmd_project = app.add_subcommand("project", "STFT-range projection of a phase field");
    struct {
        std::string in, out, window = "gauss";
    } pa;
    cmd_project->add_option("--in", pa.in)->required();
    cmd_project->add_option("--out", pa.out)->required();
    cmd_project->add_option("--window", pa.window);
    cmd_project->callback([&] {
        PhaseField F = load_phasefield(pa.in);
        save_json(to_json(project(F, resolve_window(pa.window, F.space))), pa.out);
    });

    // ---- twisted-conv ----
    auto* cmd_twist = app.add_subcommand("twisted-conv", "twisted convolution of two phase fields");
    struct {
        std::string f, g, out;
        bool allow_large = false;
    } ta;
    cmd_twist->add_option("--f", ta.f)->required();
    cmd_twist->add_option("--g", ta.g)->required();
    cmd_twist->add_option("--out", ta.out)->required();
    cmd_twist->add_flag("--allow-large", ta.allow_large, "override the N <= 128 cost guard");
    cmd_twist->callback([&] {
        PhaseField F = load_phasefield(ta.f), G = load_phasefield(ta.g);
        save_json(to_json(twisted_convolve(F, G, ta.allow_large)), ta.out);
    });

    // ---- moyal ----
    auto* cmd_moyal = app.add_subcommand("moyal", "Moyal identity on seeded random quadruples");
    struct {
        int cases = 100;
        double L = 12.0;
        int N = 256;
        double tol = 1e-8;
    } ma;
    cmd_moyal->add_option("--cases", ma.cases)->capture_default_str();
    cmd_moyal->add_option("--L", ma.L)->capture_default_str();
    cmd_moyal->add_option("--N", ma.N)->capture_default_str();
    cmd_moyal->add_option("--tol", ma.tol)->capture_default_str();
    cmd_moyal->callback([&] {
        Grid g(1, ma.L, ma.N);
        double worst = 0.0;
        for (int s = 0; s < ma.cases; ++s) {
            CounterRng rng = CounterRng(seed).substream(200 + static_cast<std::uint64_t>(s));
            Field f = random_smooth_field(g, rng), h = random_smooth_field(g, rng);
            Field phi = random_smooth_field(g, rng), psi = random_smooth_field(g, rng);
            MoyalResult r = moyal(f, h, phi, psi);
            worst = std::max(worst, std::abs(r.lhs - r.rhs) / (1.0 + std::abs(r.rhs)));
        }
        json j{{"check", "moyal"}, {"cases", ma.cases}, {"max_rel", worst}, {"tolerance", ma.tol},
               {"seed", seed}, {"status", worst <= ma.tol ? "ok" : "fail"}};
        emit(j);
        exit_code = tolerance_exit(worst <= ma.tol);
    });

    // ---- seq-verify ----
    auto* cmd_seq = app.add_subcommand("seq-verify", "Holder/Young inequality on sequence files");
    struct {
        std::string a, b, mode = "holder";
        std::string e0 = "1", e1 = "2", e2 = "2";
        std::string w0 = "1", w1 = "1", w2 = "1";
    } qa;
    cmd_seq->add_option("--a", qa.a)->required();
    cmd_seq->add_option("--b", qa.b)->required();
    cmd_seq->add_option("--mode", qa.mode)->check(CLI::IsMember({"holder", "young"}));
    cmd_seq->add_option("--e0", qa.e0, "target exponent");
    cmd_seq->add_option("--e1", qa.e1);
    cmd_seq->add_option("--e2", qa.e2);
    cmd_seq->add_option("--w0", qa.w0, "weight literal, e.g. poly:1 or split(poly:1;bracket:2)");
    cmd_seq->add_option("--w1", qa.w1);
    cmd_seq->add_option("--w2", qa.w2);
    cmd_seq->callback([&] {
        LatticeSeq a = lattice_seq_from_json(load_json(qa.a));
        LatticeSeq b = lattice_seq_from_json(load_json(qa.b));
        const std::array<Exponent, 3> e = {Exponent::parse(qa.e0), Exponent::parse(qa.e1), Exponent::parse(qa.e2)};
        const std::array<Weight, 3> w = {parse_weight(qa.w0), parse_weight(qa.w1), parse_weight(qa.w2)};
        const double ratio = qa.mode == "holder" ? verify_holder(a, b, e, w) : verify_young(a, b, e, w);
        const bool ok = ratio <= 1.0 + 1e-12;
        emit(json{{"check", "seq-" + qa.mode}, {"ratio", ratio}, {"tolerance", 1.0 + 1e-12},
                  {"status", ok ? "ok" : "fail"}});
        exit_code = tolerance_exit(ok);
    });

    // ---- mod-norm ----
    auto* cmd_mod = app.add_subcommand("mod-norm", "Gabor-lattice modulation quasi-norm of a field");
    struct {
        std::string in, p = "2", q = "2", weight = "1", flavor = "M", window = "phi";
    } na;
    cmd_mod->add_option("--in", na.in)->required();
    cmd_mod->add_option("--p", na.p);
    cmd_mod->add_option("--q", na.q);
    cmd_mod->add_option("--weight", na.weight);
    cmd_mod->add_option("--flavor", na.flavor)->check(CLI::IsMember({"M", "W"}));
    cmd_mod->add_option("--window", na.window);
    cmd_mod->callback([&] {
        Field f = load_field(na.in);
        Field w = resolve_window(na.window, f.grid);
        auto rep = mod_norm_report(f, Exponent::parse(na.p), Exponent::parse(na.q), parse_weight(na.weight),
                                   na.flavor == "M" ? ModFlavor::M : ModFlavor::W, w, na.window);
        json j{{"norm", rep.norm},
               {"window_id", rep.window_id},
               {"truncation", {{"J", rep.J}, {"M", rep.M}}},
               {"boundary_mass", rep.boundary_mass},
               {"window_wrap", rep.window_wrap}};
        if (rep.weight_class_warning)
            j["warning"] = "weight class beyond P_BD: lattice norm equivalence not covered";
        emit(j);
    });

    // ---- wiener-norm ----
    auto* cmd_wiener = app.add_subcommand("wiener-norm", "Wiener amalgam quasi-norm of a phase field");
    struct {
        std::string in, r = "inf", p = "2", q = "2", weight = "1", variant = "standard";
    } wa;
    cmd_wiener->add_option("--in", wa.in)->required();
    cmd_wiener->add_option("--r", wa.r);
    cmd_wiener->add_option("--p", wa.p);
    cmd_wiener->add_option("--q", wa.q);
    cmd_wiener->add_option("--weight", wa.weight);
    cmd_wiener->add_option("--variant", wa.variant)->check(CLI::IsMember({"standard", "star"}));
    cmd_wiener->callback([&] {
        PhaseField F = load_phasefield(wa.in);
        const double norm = wiener_norm(F, Exponent::parse(wa.r), Exponent::parse(wa.p), Exponent::parse(wa.q),
                                        parse_weight(wa.weight),
                                        wa.variant == "standard" ? NormVariant::standard : NormVariant::star);
        emit(json{{"norm", norm}, {"variant", wa.variant}});
    });

    // ---- verify-mult / verify-conv ----
    struct TheoremArgs {
        std::string p1 = "2", q1 = "2", p2 = "2", q2 = "2";
        std::string p0, q0;
        bool auto_target = false;
        std::string w0 = "1", w1 = "1", w2 = "1", flavor = "M";
        int cases = 50;
        double L = 8.0;
        int N = 384;
        bool check_identity = false;
    };
    auto add_theorem_options = [](CLI::App* cmd, TheoremArgs& a) {
        cmd->add_option("--p1", a.p1);
        cmd->add_option("--q1", a.q1);
        cmd->add_option("--p2", a.p2);
        cmd->add_option("--q2", a.q2);
        cmd->add_option("--p0", a.p0, "target exponent (omit with --auto-target)");
        cmd->add_option("--q0", a.q0);
        cmd->add_flag("--auto-target", a.auto_target, "derive (p0,q0) from the sharp arithmetic");
        cmd->add_option("--w0", a.w0);
        cmd->add_option("--w1", a.w1);
        cmd->add_option("--w2", a.w2);
        cmd->add_option("--flavor", a.flavor)->check(CLI::IsMember({"M", "W"}));
        cmd->add_option("--cases", a.cases);
        cmd->add_option("--L", a.L);
        cmd->add_option("--N", a.N);
        cmd->add_flag("--check-identity", a.check_identity, "also verify the STFT-level reformulation");
    };
    auto run_theorem = [&](const TheoremArgs& a, bool mult) {
        Grid g(1, a.L, a.N);
        WindowPair wp = make_window_pair(g);
        const Exponent p1 = Exponent::parse(a.p1), q1 = Exponent::parse(a.q1);
        const Exponent p2 = Exponent::parse(a.p2), q2 = Exponent::parse(a.q2);
        Exponent p0 = p1, q0 = q1;
        if (a.auto_target || a.p0.empty() || a.q0.empty()) {
            auto sol = intro_solve(p1, q1, p2, q2);
            p0 = mult ? sol.mult_p0 : sol.conv_p0;
            q0 = mult ? sol.mult_q0 : sol.conv_q0;
        } else {
            p0 = Exponent::parse(a.p0);
            q0 = Exponent::parse(a.q0);
        }
        const std::array<Exponent, 3> p = {p0, p1, p2}, q = {q0, q1, q2};
        const std::array<Weight, 3> w = {parse_weight(a.w0), parse_weight(a.w1), parse_weight(a.w2)};
        const ModFlavor flavor = a.flavor == "M" ? ModFlavor::M : ModFlavor::W;

        double max_ratio = 0.0, identity_rel = -1.0, extract_rel = -1.0;
        for (int s = 0; s < a.cases; ++s) {
            CounterRng rng = CounterRng(seed).substream(900 + static_cast<std::uint64_t>(s));
            Field f1 = gaussian_chirp_field(g, rng), f2 = gaussian_chirp_field(g, rng);
            const bool ident = a.check_identity && s < 3;
            auto rep = mult ? verify_mult(f1, f2, p, q, w, flavor, wp.phi, ident)
                            : verify_conv(f1, f2, p, q, w, flavor, wp.phi, ident);
            max_ratio = std::max(max_ratio, rep.ratio);
            if (ident) {
                identity_rel = std::max(identity_rel, rep.identity_rel);
                extract_rel = std::max(extract_rel, rep.extract_rel);
            }
        }
        json j{{"check", mult ? "verify-mult" : "verify-conv"},
               {"p0", p0.to_string()}, {"q0", q0.to_string()},
               {"cases", a.cases},     {"max_ratio", max_ratio},
               {"seed", seed},         {"status", std::isfinite(max_ratio) ? "ok" : "fail"}};
        if (identity_rel >= 0.0) {
            j["identity_rel"] = identity_rel;
            j["extract_rel"] = extract_rel;
            if (identity_rel > 1e-6 || extract_rel > 1e-6) j["status"] = "fail";
        }
        emit(j);
        exit_code = tolerance_exit(j["status"] == "ok");
    };
    auto* cmd_vm = app.add_subcommand("verify-mult", "modulation-space multiplication theorem, empirically");
    static TheoremArgs vma;
    add_theorem_options(cmd_vm, vma);
    cmd_vm->callback([&] { run_theorem(vma, true); });
    auto* cmd_vc = app.add_subcommand("verify-conv", "modulation-space convolution theorem, empirically");
    static TheoremArgs vca;
    add_theorem_options(cmd_vc, vca);
    cmd_vc->callback([&] { run_theorem(vca, false); });

    // ---- gabor-product ----
    auto* cmd_gp = app.add_subcommand("gabor-product", "Gabor product of two phase fields");
    struct {
        std::string f1, f2, window = "gauss", out;
        bool allow_large = false;
    } ga;
    cmd_gp->add_option("--f1", ga.f1)->required();
    cmd_gp->add_option("--f2", ga.f2)->required();
    cmd_gp->add_option("--window", ga.window);
    cmd_gp->add_option("--out", ga.out)->required();
    cmd_gp->add_flag("--allow-large", ga.allow_large);
    cmd_gp->callback([&] {
        PhaseField F1 = load_phasefield(ga.f1), F2 = load_phasefield(ga.f2);
        Field w = resolve_window(ga.window, F1.space);
        save_json(to_json(gabor_product(F1, F2, w, ga.allow_large)), ga.out);
    });

    // ---- product-identity ----
    auto* cmd_pi = app.add_subcommand("product-identity",
                                      "windowed-product and homomorphism identities on a seeded suite");
    struct {
        int cases = 20;
        double L = 8.0;
        int N = 96;
        double tol = 1e-5;
    } pia;
    cmd_pi->add_option("--cases", pia.cases)->capture_default_str();
    cmd_pi->add_option("--L", pia.L)->capture_default_str();
    cmd_pi->add_option("--N", pia.N)->capture_default_str();
    cmd_pi->add_option("--tol", pia.tol)->capture_default_str();
    cmd_pi->callback([&] {
        Grid g(1, pia.L, pia.N);
        Field phi = gaussian_window(g);
        double worst = 0.0;
        for (int s = 0; s < pia.cases; ++s) {
            CounterRng rng = CounterRng(seed).substream(1100 + static_cast<std::uint64_t>(s));
            Field f1 = gaussian_chirp_field(g, rng), f2 = gaussian_chirp_field(g, rng);
            const double w1 = rng.next_uniform(0.4, 0.8), w2 = rng.next_uniform(0.4, 0.8);
            Field phi1(g), phi2(g);
            for (int k = 0; k < g.N; ++k) {
                const double x = g.x(k);
                phi1.values[static_cast<std::size_t>(k)] = cd{std::exp(-w1 * x * x), 0.0};
                phi2.values[static_cast<std::size_t>(k)] = cd{std::exp(-w2 * x * x), 0.0};
            }
            Field prod(g);
            for (std::size_t i = 0; i < prod.values.size(); ++i) prod.values[i] = f1.values[i] * f2.values[i];
            PhaseField lhs = stft(prod, phi);
            const cd c = inner(phi2, phi1);
            for (auto& v : lhs.values) v *= c;
            PhaseField rhs = gabor_product(stft(f1, phi1), stft(f2, phi2), phi);
            worst = std::max(worst, rel_l2_error(rhs, lhs));
            PhaseField hom = gabor_product(stft(f1, phi), stft(f2, phi), phi);
            worst = std::max(worst, rel_l2_error(hom, stft(prod, phi)));
        }
        const bool ok = worst <= pia.tol;
        emit(json{{"check", "product-identity"}, {"cases", pia.cases}, {"max_rel", worst},
                  {"tolerance", pia.tol}, {"seed", seed}, {"status", ok ? "ok" : "fail"}});
        exit_code = tolerance_exit(ok);
    });

    // ---- nlse ----
    auto* cmd_nlse = app.add_subcommand("nlse", "split-step cubic NLSE with phase-space residuals");
    struct {
        int lambda = 1;
        double dt = 1e-3, T = 0.1;
        double L = 8.0;
        int N = 96;
        double amplitude = 0.5, sigma = 1.0;
        int stride = 1;
        std::string out, residuals;
    } la;
    cmd_nlse->add_option("--lambda", la.lambda)->check(CLI::IsMember({-1, 0, 1}))->capture_default_str();
    cmd_nlse->add_option("--dt", la.dt)->capture_default_str();
    cmd_nlse->add_option("--T", la.T)->capture_default_str();
    cmd_nlse->add_option("--L", la.L)->capture_default_str();
    cmd_nlse->add_option("--N", la.N)->capture_default_str();
    cmd_nlse->add_option("--amplitude", la.amplitude, "Gaussian initial amplitude")->capture_default_str();
    cmd_nlse->add_option("--sigma", la.sigma, "Gaussian initial width")->capture_default_str();
    cmd_nlse->add_option("--stride", la.stride, "residual evaluation stride")->capture_default_str();
    cmd_nlse->add_option("--out", la.out, "trajectory JSON output");
    cmd_nlse->add_option("--residuals", la.residuals, "residual CSV output (t,residual,mass,boundary_mass)");
    cmd_nlse->callback([&] {
        Grid g(1, la.L, la.N);
        Field psi0(g);
        for (int k = 0; k < g.N; ++k)
            psi0.values[static_cast<std::size_t>(k)] =
                cd{la.amplitude * std::exp(-0.5 * g.x(k) * g.x(k) / (la.sigma * la.sigma)), 0.0};
        NlseConfig cfg(la.lambda, la.dt, la.T);
        Trajectory traj = split_step(psi0, cfg);

        json report{{"check", "nlse"},
                    {"lambda", la.lambda},
                    {"dt", la.dt},
                    {"T", la.T},
                    {"steps", traj.states.size() - 1},
                    {"mass_initial", l2_norm(traj.states.front())},
                    {"mass_final", l2_norm(traj.states.back())},
                    {"association_order", "left: (invol(F) nat F) nat F"}};

        if (!la.residuals.empty()) {
            Field window = gaussian_window(g);
            auto res = phase_residual(traj, window, cfg, la.stride);
            std::ofstream csv(la.residuals);
            if (!csv) throw precondition_error("file-io", "cannot write '" + la.residuals + "'");
            csv << "t,residual,mass,boundary_mass\n";
            char line[160];
            for (const auto& s : res) {
                std::snprintf(line, sizeof(line), "%.12g,%.12g,%.12g,%.12g\n", s.t, s.residual, s.mass,
                              s.boundary);
                csv << line;
            }
            report["max_residual"] = max_residual(res);
            report["residual_samples"] = res.size();
        }
        if (!la.out.empty()) {
            json traj_json{{"format", "nlse-traj/1"}, {"lambda", la.lambda}, {"dt", la.dt}};
            traj_json["times"] = traj.times;
            json states = json::array();
            for (const auto& s : traj.states) states.push_back(to_json(s));
            traj_json["states"] = std::move(states);
            save_json(traj_json, la.out);
        }
        emit(report);
    });

    // ---- suite ----
    auto* cmd_suite = app.add_subcommand("suite", "full acceptance battery");
    struct {
        bool quick = false;
        std::string out;
    } ua;
    cmd_suite->add_flag("--quick", ua.quick, "accepted for compatibility; the full battery fits the budget");
    cmd_suite->add_option("--out", ua.out, "summary JSON path");
    cmd_suite->callback([&] {
        const auto results = run_acceptance_suite(seed, ua.quick);
        bool all = true;
        for (const auto& r : results) {
            std::printf("[%s] %-26s value %-12.5g tol %-9.3g (%.1fs)\n", r.pass ? "PASS" : "FAIL",
                        r.name.c_str(), r.value, r.tolerance, r.seconds);
            all = all && r.pass;
        }
        const json summary = suite_summary_json(results, seed, ua.quick);
        if (!ua.out.empty()) save_json(summary, ua.out);
        exit_code = tolerance_exit(all);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const precondition_error& e) {
        std::cerr << json{{"error", e.condition()}, {"detail", e.what()}}.dump() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"detail", e.what()}}.dump() << std::endl;
        return 2;
    }
    return exit_code;
}
