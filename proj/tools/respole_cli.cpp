// Experiment runner: config-driven computations with JSON reports and
// plot-ready CSV output.
//
// Exit codes: 0 ok, 2 config error, 3 validation error, 4 tolerance failure.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <future>
#include <thread>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "respole/config.hpp"
#include "respole/contour.hpp"
#include "respole/exact.hpp"
#include "respole/jordan.hpp"
#include "respole/states.hpp"

namespace fs = std::filesystem;
using namespace respole;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitValidation = 3;
constexpr int kExitTolerance = 4;

const cplx kImag{0.0, 1.0};

struct CliOptions {
    std::string config_path;
    std::string out_dir = ".";
    std::optional<double> tol;
    std::optional<int> n_max;
    std::optional<std::string> t_grid;
    bool gnuplot = false;
};

struct RunContext {
    ExperimentConfig cfg;
    std::string config_hash;
    fs::path out_dir;
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

json complex_report(cplx z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

RunContext make_context(const CliOptions& opt, bool config_required) {
    RunContext ctx;
    if (!opt.config_path.empty()) {
        const std::string raw = read_file(opt.config_path);
        ctx.cfg = load_experiment_file(opt.config_path);
        ctx.config_hash = fnv1a_hex(raw);
    } else if (config_required) {
        throw ConfigError("this subcommand requires --config <path>");
    }
    if (opt.tol) ctx.cfg.tol = *opt.tol;
    if (opt.n_max) ctx.cfg.n_max = *opt.n_max;
    if (opt.t_grid) ctx.cfg.t_grid = tgrid_from_string(*opt.t_grid);
    if (opt.gnuplot) ctx.cfg.gnuplot = true;
    if (ctx.config_hash.empty())
        ctx.config_hash = fnv1a_hex(experiment_to_json(ctx.cfg).dump());
    ctx.out_dir = opt.out_dir;
    fs::create_directories(ctx.out_dir);
    return ctx;
}

void emit(const RunContext& ctx, const std::string& name, json& report) {
    report["config_hash"] = ctx.config_hash;
    const fs::path path = ctx.out_dir / (name + ".json");
    write_file(path.string(), report.dump(2) + "\n");
    std::cout << name << (report["pass"].get<bool>() ? ": pass" : ": FAIL")
              << "  report: " << path.string() << "\n";
}

json base_report(const std::string& name, const RunContext& ctx) {
    json j;
    j["subcommand"] = name;
    j["tolerances"] = json{{"tol", ctx.cfg.tol}, {"quadrature_tol", ctx.cfg.quadrature.tol}};
    return j;
}

// ---- subcommand handlers ------------------------------------------------

int run_laurent(const CliOptions& opt) {
    RunContext ctx = make_context(opt, true);
    const ResonanceModel& m = ctx.cfg.require_model();
    const auto closed = laurent_principal(m).a;

    // numerical cross-check against the gauge-stripped amplitude
    ResonanceModel stripped(m.E_R, m.Gamma, m.r);
    const auto numeric = cauchy_residue_coeffs(
        [&](cplx w) { return smatrix_eval(stripped, w); }, m.z_R(), m.r, ctx.cfg.quadrature);
    double defect = 0.0;
    for (int n = 0; n < m.r; ++n)
        defect = std::max(defect, std::abs(numeric[n] - closed[n]) / std::abs(closed[n]));

    json rep = base_report("laurent", ctx);
    rep["model"] = model_to_json(m);
    rep["coefficients"] = json::array();
    for (cplx a : closed) rep["coefficients"].push_back(complex_report(a));
    rep["cauchy_relative_defect"] = defect;
    rep["pass"] = defect <= ctx.cfg.tol;
    emit(ctx, "laurent", rep);
    return rep["pass"].get<bool>() ? kExitOk : kExitTolerance;
}

int run_pole_term(const CliOptions& opt) {
    RunContext ctx = make_context(opt, true);
    const ResonanceModel& m = ctx.cfg.require_model();
    const auto pt = pole_term(m, ctx.cfg.require_psi(), ctx.cfg.require_phi());
    const cplx via_expansion =
        pole_term_from_expansion(m, ctx.cfg.require_psi(), ctx.cfg.require_phi());
    const double defect = std::abs(pt.total - via_expansion);

    json rep = base_report("pole-term", ctx);
    rep["total"] = complex_report(pt.total);
    rep["per_order"] = json::array();
    for (cplx v : pt.per_order) rep["per_order"].push_back(complex_report(v));
    rep["gauge_included"] = pt.gauge_included;
    rep["expansion_defect"] = defect;
    rep["pass"] = defect <= ctx.cfg.tol * (1.0 + std::abs(pt.total));
    emit(ctx, "pole-term", rep);
    return rep["pass"].get<bool>() ? kExitOk : kExitTolerance;
}

int run_contour_check(const CliOptions& opt) {
    RunContext ctx = make_context(opt, true);
    const auto rep0 = contour_identity_check(ctx.cfg.require_model(), ctx.cfg.require_psi(),
                                             ctx.cfg.require_phi(), ctx.cfg.quadrature,
                                             ctx.cfg.tol);
    json rep = base_report("contour-check", ctx);
    rep["direct"] = complex_report(rep0.direct);
    rep["direct"]["error_estimate"] = rep0.direct_detail.error_estimate;
    rep["direct"]["tail_bound"] = rep0.direct_detail.tail_bound;
    rep["direct"]["e_max"] = rep0.direct_detail.e_max;
    rep["background"] = complex_report(rep0.background);
    rep["background"]["error_estimate"] = rep0.background_detail.error_estimate;
    rep["pole_term"] = complex_report(rep0.pole_total);
    rep["defect"] = rep0.defect;
    rep["relative_defect"] = rep0.rel_defect;
    rep["pass"] = rep0.pass;
    emit(ctx, "contour-check", rep);
    if (!rep0.pass)
        std::cerr << "contour-check: the deformation identity (direct = background + pole term) "
                     "missed its tolerance: defect "
                  << rep0.defect << " > " << rep0.tol * (1.0 + std::abs(rep0.direct)) << "\n";
    return rep0.pass ? kExitOk : kExitTolerance;
}

int run_expand(const CliOptions& opt) {
    RunContext ctx = make_context(opt, true);
    const ResonanceModel& m = ctx.cfg.require_model();
    const auto b = expansion_coefficients(m, ctx.cfg.require_phi());

    json rep = base_report("expand", ctx);
    rep["b"] = json::array();
    for (cplx v : b) rep["b"].push_back(complex_report(v));
    bool pass = true;
    if (ctx.cfg.psi) {
        const cplx recon = pole_term_from_expansion(m, *ctx.cfg.psi, *ctx.cfg.phi);
        const cplx direct = pole_term(m, *ctx.cfg.psi, *ctx.cfg.phi).total;
        const double defect = std::abs(recon - direct);
        rep["reconstruction"] = complex_report(recon);
        rep["pole_term"] = complex_report(direct);
        rep["defect"] = defect;
        pass = defect <= ctx.cfg.tol * (1.0 + std::abs(direct));
    }
    rep["pass"] = pass;
    emit(ctx, "expand", rep);
    return pass ? kExitOk : kExitTolerance;
}

int run_evolve(const CliOptions& opt) {
    RunContext ctx = make_context(opt, true);
    const ResonanceModel& m = ctx.cfg.require_model();
    if (!ctx.cfg.t_grid) throw ConfigError("evolve needs a t grid (config t_grid or --t-grid)");
    const auto times = ctx.cfg.t_grid->points();

    std::optional<GamowComponents> comps;
    if (ctx.cfg.psi) comps = gamow_components(m, *ctx.cfg.psi).to(Normalization::Jordan);

    std::string csv = "t";
    for (int i = 0; i < m.r; ++i)
        for (int j = 0; j < m.r; ++j) {
            const std::string tag = std::to_string(i) + "_" + std::to_string(j);
            csv += ",m" + tag + "_re,m" + tag + "_im";
        }
    if (comps)
        for (int k = 0; k < m.r; ++k) csv += ",c" + std::to_string(k) + "_re,c" +
                                             std::to_string(k) + "_im";
    csv += "\n";

    double oracle_dev = 0.0;
    for (double t : times) {
        const auto e = evolution_matrix(m, t);
        oracle_dev = std::max(oracle_dev,
                              (e.entries - matrix_exp_oracle(m, t).entries).cwiseAbs().maxCoeff());
        csv += fmt(t);
        for (int i = 0; i < m.r; ++i)
            for (int j = 0; j < m.r; ++j)
                csv += "," + fmt(e.entries(i, j).real()) + "," + fmt(e.entries(i, j).imag());
        if (comps) {
            const auto ct = evolve_components(*comps, t);
            for (int k = 0; k < m.r; ++k)
                csv += "," + fmt(ct.values[k].real()) + "," + fmt(ct.values[k].imag());
        }
        csv += "\n";
    }
    const fs::path csv_path = ctx.out_dir / "evolve.csv";
    write_file(csv_path.string(), csv);

    json rep = base_report("evolve", ctx);
    rep["csv"] = csv_path.filename().string();
    rep["series_oracle_max_deviation"] = oracle_dev;
    rep["pass"] = oracle_dev <= ctx.cfg.tol;
    emit(ctx, "evolve", rep);
    return rep["pass"].get<bool>() ? kExitOk : kExitTolerance;
}

int run_decay_curve(const CliOptions& opt) {
    RunContext ctx = make_context(opt, true);
    const ResonanceModel& m = ctx.cfg.require_model();
    if (!ctx.cfg.t_grid)
        throw ConfigError("decay-curve needs a t grid (config t_grid or --t-grid)");
    const auto times = ctx.cfg.t_grid->points();
    const int dyad_k = ctx.cfg.dyad_k >= 0 ? ctx.cfg.dyad_k : m.r - 1;
    if (dyad_k >= m.r)
        throw ValidationError("decay-curve: dyad_k must be < r");

    const auto psi = gamow_components(m, ctx.cfg.require_psi()).to(Normalization::Jordan);
    const auto w0 = full_state_operator(m, BraKind::DecayMinus);
    const cplx pw0 = pair_with_observable(w0, psi);
    const double pd0 = pair_with_observable(state_operator(m, dyad_k, BraKind::DecayMinus), psi)
                           .real();

    struct Row {
        double t, p_dyad, p_w, decay;
    };
    const auto compute_row = [&](double t) {
        const cplx pw = pair_with_observable(evolve_coefficients(w0, t), psi);
        const double pd = pair_with_observable(evolve_dyad(m, dyad_k, dyad_k, t), psi).real();
        return Row{t, pd, std::abs(pw), std::exp(-m.Gamma * t)};
    };

    // rows are independent; fan out in bounded chunks, collect in grid order
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(),
                                                       times.size()));
    const std::size_t chunk = (times.size() + workers - 1) / workers;
    std::vector<std::future<std::vector<Row>>> fut;
    for (std::size_t lo = 0; lo < times.size(); lo += chunk)
        fut.push_back(std::async(std::launch::async, [&, lo] {
            std::vector<Row> rows;
            for (std::size_t i = lo; i < std::min(lo + chunk, times.size()); ++i)
                rows.push_back(compute_row(times[i]));
            return rows;
        }));

    std::string csv = ctx.cfg.normalize ? "t,P_dyad_norm,P_W_norm,exp_decay\n"
                                        : "t,P_dyad,P_W,exp_decay\n";
    double ratio_defect = 0.0;
    for (auto& f : fut)
        for (const Row& row : f.get()) {
            ratio_defect = std::max(ratio_defect, std::abs(row.p_w / std::abs(pw0) - row.decay));
            const double pd = ctx.cfg.normalize ? row.p_dyad / pd0 : row.p_dyad;
            const double pw = ctx.cfg.normalize ? row.p_w / std::abs(pw0) : row.p_w;
            csv += fmt(row.t) + "," + fmt(pd) + "," + fmt(pw) + "," + fmt(row.decay) + "\n";
        }
    const fs::path csv_path = ctx.out_dir / "decay-curve.csv";
    write_file(csv_path.string(), csv);

    if (ctx.cfg.gnuplot) {
        const std::string gp =
            "set datafile separator ','\n"
            "set key autotitle columnhead\n"
            "set xlabel 't'\n"
            "set ylabel 'probability'\n"
            "set logscale y\n"
            "plot 'decay-curve.csv' using 1:2 with lines, \\\n"
            "     '' using 1:3 with lines, \\\n"
            "     '' using 1:4 with lines dashtype 2\n";
        write_file((ctx.out_dir / "decay-curve.gp").string(), gp);
    }

    json rep = base_report("decay-curve", ctx);
    rep["csv"] = csv_path.filename().string();
    rep["dyad_k"] = dyad_k;
    rep["normalized"] = ctx.cfg.normalize;
    rep["survival_ratio_max_defect"] = ratio_defect;
    rep["pass"] = ratio_defect <= ctx.cfg.tol;
    emit(ctx, "decay-curve", rep);
    return rep["pass"].get<bool>() ? kExitOk : kExitTolerance;
}

int run_identity_suite(const CliOptions& opt) {
    RunContext ctx = make_context(opt, false);
    const int n_max = ctx.cfg.n_max;
    if (n_max < 0) throw ConfigError("identity-suite: n-max must be >= 0");

    json rows = json::array();
    bool all_pass = true;
    for (int n = 0; n <= n_max; ++n) {
        bool products = true;
        for (int k = 0; k <= n; ++k)
            for (int l = 0; l <= k; ++l)
                for (int mm = 0; mm <= n - k; ++mm)
                    products = products && binom_product_identity(n, k, l, mm);
        bool cancellation = true;
        for (int mm = 0; mm <= n; ++mm)
            for (int l = 0; l <= n - mm; ++l) {
                const auto p = binom_cancellation(n, mm, l);
                cancellation =
                    cancellation && (l == n - mm ? p.is_constant_one() : p.is_zero());
            }
        const bool reorder = reorder_check(n);
        const bool symbolic =
            n <= 20 ? symbolic_state_evolution(n).matches_antidiagonal() : true;
        const bool row_pass = products && cancellation && reorder && symbolic;
        all_pass = all_pass && row_pass;
        rows.push_back(json{{"n", n},
                            {"binom_product", products},
                            {"binom_cancellation", cancellation},
                            {"reorder", reorder},
                            {"symbolic_evolution", symbolic},
                            {"pass", row_pass}});
        std::cout << "n=" << n << (row_pass ? "  ok" : "  FAIL") << "\n";
    }

    json rep = base_report("identity-suite", ctx);
    rep["n_max"] = n_max;
    rep["results"] = rows;
    rep["pass"] = all_pass;
    emit(ctx, "identity-suite", rep);
    return all_pass ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"resonance-pole toolkit: pole terms, Jordan-block evolution, state operators"};
    app.require_subcommand(1);

    CliOptions opt;
    const auto add_common = [&](CLI::App* sub, bool with_tgrid = false) {
        sub->add_option("--config", opt.config_path, "JSON experiment configuration");
        sub->add_option("--out", opt.out_dir, "output directory (default .)");
        sub->add_option_function<double>(
            "--tol", [&opt](const double& v) { opt.tol = v; }, "tolerance override");
        if (with_tgrid)
            sub->add_option_function<std::string>(
                "--t-grid", [&opt](const std::string& v) { opt.t_grid = v; },
                "time grid start:stop:count");
    };

    auto* laurent = app.add_subcommand("laurent", "principal-part coefficients + numeric check");
    add_common(laurent);
    auto* pole = app.add_subcommand("pole-term", "symbolic pole term and per-order summands");
    add_common(pole);
    auto* check = app.add_subcommand("contour-check", "direct = background + pole term identity");
    add_common(check);
    auto* expand = app.add_subcommand("expand", "basis-expansion coefficients b_k");
    add_common(expand);
    auto* evolve = app.add_subcommand("evolve", "evolution matrix and component trajectories");
    add_common(evolve, true);
    auto* decay = app.add_subcommand("decay-curve", "survival probabilities on a t grid");
    add_common(decay, true);
    decay->add_flag("--gnuplot", opt.gnuplot, "emit a gnuplot script next to the CSV");
    auto* ident = app.add_subcommand("identity-suite", "exact combinatorial identity checks");
    add_common(ident);
    ident->add_option_function<int>(
        "--n-max", [&opt](const int& v) { opt.n_max = v; }, "largest order to check");

    CLI11_PARSE(app, argc, argv);

    try {
        if (laurent->parsed()) return run_laurent(opt);
        if (pole->parsed()) return run_pole_term(opt);
        if (check->parsed()) return run_contour_check(opt);
        if (expand->parsed()) return run_expand(opt);
        if (evolve->parsed()) return run_evolve(opt);
        if (decay->parsed()) return run_decay_curve(opt);
        if (ident->parsed()) return run_identity_suite(opt);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const PoleEvaluationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}
