// Command-line front end: spectra, resonance certification, normal-form
// construction, long-time simulation, stability verification and the
// material table.

#include <complex>
#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "beambnf/bnf.hpp"
#include "beambnf/config.hpp"
#include "beambnf/dynamics.hpp"
#include "beambnf/hamiltonian.hpp"
#include "beambnf/io.hpp"
#include "beambnf/physical.hpp"
#include "beambnf/resonance.hpp"
#include "beambnf/spectrum.hpp"

using nlohmann::ordered_json;
using namespace beambnf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitHypothesis = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitUsage = 64;

struct GlobalOpts {
    std::string config_path;
    std::string out_path;
    std::string format = "table";
    int threads = 1;
    long long seed = 0;
    bool seed_given = false;
};

void emit(const GlobalOpts& opts, const std::string& content) {
    if (opts.out_path.empty())
        std::cout << content;
    else
        write_text_file(opts.out_path, content);
}

ordered_json report_to_json(const CertifyReport& rep) {
    ordered_json j;
    j["order"] = rep.order;
    j["m"] = rep.m;
    j["i_max"] = rep.i_max;
    j["threshold"] = rep.threshold;
    j["min_abs_delta"] = rep.min_abs_delta;
    j["ratio_to_threshold"] = rep.ratio_to_threshold;
    j["min_top_decade"] = rep.min_top_decade;
    j["argmin"] = {{"class", rep.argmin.label},
                   {"i", rep.argmin.i},
                   {"j", rep.argmin.j},
                   {"k", rep.argmin.k}};
    j["pass"] = rep.pass;
    j["directed"] = {{"delta_lower", rep.argmin_delta_lower},
                     {"threshold_upper", rep.threshold_upper},
                     {"rigorous", rep.rigorous}};
    return j;
}

ordered_json constants_to_json(const BnfConstants& k) {
    ordered_json j;
    j["m"] = k.m;
    j["mu"] = k.mu;
    j["frak_c"] = k.frak_c;
    j["r"] = k.r;
    j["gamma_r"] = k.gamma_r;
    j["eta_r"] = k.eta_r;
    j["C_r"] = k.C_r;
    j["eta6"] = k.eta6;
    j["C6"] = k.C6;
    j["r8_bound"] = k.r8_bound;
    j["eps0"] = k.eps0;
    j["eps1"] = k.eps1;
    j["eps_of_r"] = k.eps_of_r;
    j["T0"] = k.T0;
    j["T1"] = k.T1;
    j["c_star"] = k.c_star;
    j["c_dagger"] = k.c_dagger;
    j["smallness_4th_ok"] = k.smallness_4th_ok;
    j["smallness_6th_ok"] = k.smallness_6th_ok;
    return j;
}

int cmd_freq(const GlobalOpts& opts, double m, int j_max) {
    std::ostringstream os;
    if (opts.format == "json") {
        ordered_json j;
        j["m"] = m;
        j["mu"] = mu(m);
        j["frak_c"] = frak_c(m);
        ordered_json rows = ordered_json::array();
        for (int k = 1; k <= j_max; ++k)
            rows.push_back({{"j", k}, {"omega", frequency(k, m)}});
        j["frequencies"] = rows;
        os << dump_json(j);
    } else if (opts.format == "csv") {
        os << "j,omega\n";
        for (int k = 1; k <= j_max; ++k) os << k << ',' << fmt_full(frequency(k, m)) << '\n';
    } else {
        os << "m = " << fmt_human(m) << "  mu = " << fmt_human(mu(m))
           << "  frak_c = " << fmt_human(frak_c(m)) << "\n";
        os << "   j        omega_j\n";
        for (int k = 1; k <= j_max; ++k) {
            char line[64];
            std::snprintf(line, sizeof(line), "%4d %14s\n", k, fmt_human(frequency(k, m)).c_str());
            os << line;
        }
    }
    emit(opts, os.str());
    return kExitOk;
}

int cmd_resonances(const GlobalOpts& opts, int order, double m, int i_max) {
    CertifyOptions copt;
    copt.threads = opts.threads;
    const CertifyReport rep =
        (order == 4) ? certify_prop_4th(i_max, m, copt) : certify_prop_6th(i_max, m, copt);
    if (opts.format == "csv") {
        emit(opts, certify_report_csv(rep));
    } else if (opts.format == "json") {
        emit(opts, dump_json(report_to_json(rep)));
    } else {
        std::ostringstream os;
        os << "order " << order << "  m = " << fmt_human(m) << "  i_max = " << i_max << "\n"
           << certify_report_csv(rep) << "min |Delta| = " << fmt_human(rep.min_abs_delta)
           << "  threshold = " << fmt_human(rep.threshold)
           << "  ratio = " << fmt_human(rep.ratio_to_threshold)
           << "  top-decade min = " << fmt_human(rep.min_top_decade) << "\n"
           << (rep.pass ? "PASS" : "FAIL") << (rep.rigorous ? " (rigorous)" : "") << "\n";
        emit(opts, os.str());
    }
    return rep.pass ? kExitOk : kExitNumerical;
}

int cmd_bnf(const GlobalOpts& opts, double m, int n_trunc, double r, int order) {
    ModelParams params{m, n_trunc, 1.0, n_trunc};
    if (order == 6 && m == 0.0)
        throw std::domain_error("sixth order refused at m = 0: Pythagorean resonances");
    const NormalFormHamiltonian nf = build_normal_form(params, r);
    if (order == 6 && !nf.sixth_available)
        throw std::domain_error("sixth order requires -1/2 <= m <= 1, m != 0");

    ordered_json j;
    j["n_trunc"] = n_trunc;
    j["constants"] = constants_to_json(nf.constants);
    j["residual4_rel"] = nf.residual4;
    j["S4_norm_bound"] = nf.S4_norm_bound;
    ordered_json a4 = ordered_json::array();
    for (const auto& t : nf.A4) a4.push_back({{"i", t.i}, {"j", t.j}, {"coeff", t.coeff}});
    j["G_bar"] = a4;
    if (order == 6 || nf.sixth_available) {
        j["residual6_rel"] = nf.residual6;
        j["S6_norm_bound"] = nf.S6_norm_bound;
        ordered_json a6 = ordered_json::array();
        for (const auto& t : nf.A6)
            a6.push_back({{"i", t.i}, {"j", t.j}, {"k", t.k}, {"coeff", t.coeff}});
        j["R_bar"] = a6;
    }
    emit(opts, dump_json(j));
    return kExitOk;
}

ModelParams model_from_config(const Config& cfg) {
    const ConfigSection* section = cfg.find("model");
    if (section == nullptr) throw std::runtime_error("config: missing [model] section");
    section->require_keys({"m", "n_trunc", "s", "n_weight"});
    ModelParams params;
    params.m = section->get_double("m");
    params.n_trunc = static_cast<int>(section->get_int_or("n_trunc", 16));
    params.s = section->get_double_or("s", 1.0);
    params.n_weight = static_cast<int>(section->get_int_or("n_weight", params.n_trunc));
    params.validate();
    return params;
}

IntegratorConfig integrator_from_config(const Config& cfg) {
    IntegratorConfig out;
    const ConfigSection* section = cfg.find("integrator");
    if (section == nullptr) return out;
    section->require_keys(
        {"dt", "t_end", "scheme", "fixedpoint_tol", "max_fixedpoint_iters", "stride"});
    out.dt = section->get_double_or("dt", out.dt);
    out.t_end = section->get_double_or("t_end", out.t_end);
    const std::string scheme = section->get_or("scheme", "implicit_midpoint");
    if (scheme == "implicit_midpoint")
        out.scheme = Scheme::implicit_midpoint;
    else if (scheme == "splitting")
        out.scheme = Scheme::splitting;
    else
        throw std::runtime_error("config: unknown scheme '" + scheme + "'");
    out.fixedpoint_tol = section->get_double_or("fixedpoint_tol", out.fixedpoint_tol);
    out.max_fixedpoint_iters =
        static_cast<int>(section->get_int_or("max_fixedpoint_iters", out.max_fixedpoint_iters));
    out.sample_stride = static_cast<int>(section->get_int_or("stride", out.sample_stride));
    out.validate();
    return out;
}

// [initial]: kind = mode | profile | random, plus eps / delta / j / seed
ModeState initial_state_from_config(const Config& cfg, const ModelParams& params,
                                    long long seed_override) {
    const ConfigSection* section = cfg.find("initial");
    if (section == nullptr) throw std::runtime_error("config: missing [initial] section");
    section->require_keys({"kind", "eps", "delta", "j", "seed"});
    const std::string kind = section->get_or("kind", "mode");
    const auto n = static_cast<std::size_t>(params.n_trunc);
    ModeState z(n, {0.0, 0.0});
    if (kind == "mode") {
        const double eps = section->get_double_or("eps", 0.05);
        const int j = static_cast<int>(section->get_int_or("j", 1));
        if (j < 1 || j > params.n_trunc) throw std::runtime_error("config: mode j out of range");
        // u_j = eps/j so |u|_1 = eps; q = sqrt(omega) u
        z[static_cast<std::size_t>(j - 1)] = {
            std::sqrt(frequency(j, params.m)) * eps / j / std::sqrt(2.0), 0.0};
        return z;
    }
    if (kind == "profile") {
        const double delta = section->get_double_or("delta", 1e-4);
        PhysicalBeam nominal{1.0, 1.0, 1.0, Section::square(0.01), 0.0};
        const InitialData data = initial_data_from_profile(delta, nominal, params.n_trunc);
        return to_modes(from_fields(data.fields, params.m));
    }
    if (kind == "random") {
        const double eps = section->get_double_or("eps", 0.05);
        const long long seed =
            (seed_override != 0) ? seed_override : section->get_int_or("seed", 1);
        std::mt19937_64 rng(static_cast<std::uint64_t>(seed));
        std::uniform_real_distribution<double> unif(-1.0, 1.0);
        for (auto& c : z) c = {unif(rng), unif(rng)};
        const WeightSequence w =
            WeightSequence::wsN(params.n_trunc, params.m, params.s, params.n_weight);
        const double nz = weighted_norm(z, w);
        for (auto& c : z) c *= eps / nz;
        return z;
    }
    throw std::runtime_error("config: unknown initial kind '" + kind + "'");
}

int cmd_simulate(const GlobalOpts& opts) {
    if (opts.config_path.empty()) throw std::runtime_error("usage: simulate requires --config");
    const Config cfg = Config::parse_file(opts.config_path);
    const ModelParams params = model_from_config(cfg);
    const IntegratorConfig icfg = integrator_from_config(cfg);
    const ModeState z0 =
        initial_state_from_config(cfg, params, opts.seed_given ? opts.seed : 0);
    const WeightSequence w =
        WeightSequence::wsN(params.n_trunc, params.m, params.s, params.n_weight);

    const Trajectory traj = integrate(z0, params, icfg, w);
    const DriftReport drift = action_drift(traj, w);

    const int k_actions = std::min(params.n_trunc, 8);
    std::ostringstream csv;
    csv << "t,energy,sum_actions,w_norm,sup_bound";
    for (int j = 1; j <= k_actions; ++j) csv << ",I_" << j;
    csv << '\n';
    for (std::size_t s = 0; s < traj.t.size(); ++s) {
        csv << fmt_full(traj.t[s]) << ',' << fmt_full(traj.energy[s]) << ','
            << fmt_full(traj.sum_actions[s]) << ',' << fmt_full(traj.w_norm[s]) << ','
            << fmt_full(traj.sup_bound[s]);
        for (int j = 1; j <= k_actions; ++j)
            csv << ',' << fmt_full(traj.actions[s][static_cast<std::size_t>(j - 1)]);
        csv << '\n';
    }

    ordered_json summary;
    summary["steps"] = traj.steps_taken;
    summary["samples"] = traj.t.size();
    summary["energy_initial"] = traj.energy.front();
    double energy_drift = 0.0;
    for (double e : traj.energy) energy_drift = std::max(energy_drift, std::fabs(e - traj.energy.front()));
    energy_drift /= std::max(1e-300, std::fabs(traj.energy.front()));
    summary["energy_drift_rel"] = energy_drift;
    summary["weighted_action_drift"] = drift.weighted_action_drift;
    summary["w_norm_drift"] = drift.w_norm_drift;
    double max_sup = 0.0;
    for (double s : traj.sup_bound) max_sup = std::max(max_sup, s);
    summary["max_sup_bound"] = max_sup;
    bool support_ok = true;
    for (const auto& state : traj.states)
        for (std::size_t t = 0; t < state.size(); ++t)
            if (z0[t] == std::complex<double>{0.0, 0.0} &&
                state[t] != std::complex<double>{0.0, 0.0})
                support_ok = false;
    summary["flags"] = {{"energy_drift_le_1e-8", energy_drift <= 1e-8},
                        {"support_invariant", support_ok}};

    if (opts.format == "json") {
        emit(opts, dump_json(summary));
    } else if (!opts.out_path.empty()) {
        write_text_file(opts.out_path, csv.str());
        write_text_file(opts.out_path + ".json", dump_json(summary));
    } else {
        std::cout << csv.str() << dump_json(summary);
    }
    return kExitOk;
}

int cmd_verify(const GlobalOpts& opts) {
    if (opts.config_path.empty()) throw std::runtime_error("usage: verify requires --config");
    const Config cfg = Config::parse_file(opts.config_path);
    const ModelParams params = model_from_config(cfg);
    IntegratorConfig icfg = integrator_from_config(cfg);

    const ConfigSection* vs = cfg.find("verify");
    if (vs == nullptr) throw std::runtime_error("config: missing [verify] section");
    vs->require_keys({"kind", "eps", "delta", "budget_steps"});
    const long long budget = vs->get_int_or("budget_steps", 10000000);
    const std::string kind = vs->get_or("kind", "mode");

    FieldPair init;
    init.u.assign(static_cast<std::size_t>(params.n_trunc), 0.0);
    init.v.assign(static_cast<std::size_t>(params.n_trunc), 0.0);
    if (kind == "mode") {
        init.u[0] = vs->get_double_or("eps", 0.05);
    } else if (kind == "profile") {
        const double delta = vs->get_double_or("delta", 1e-4);
        PhysicalBeam nominal{1.0, 1.0, 1.0, Section::square(0.01), 0.0};
        init = initial_data_from_profile(delta, nominal, params.n_trunc).fields;
    } else {
        throw std::runtime_error("config: unknown verify kind '" + kind + "'");
    }

    const StabilityCheckReport rep = verify_stability_bound(init, params, budget, icfg);
    ordered_json j;
    j["eps"] = rep.eps;
    j["eps0"] = rep.eps0;
    j["hypotheses_ok"] = rep.hypotheses_ok;
    j["horizon"] = rep.horizon;
    j["covered_time"] = rep.covered_time;
    j["certified_fraction"] = rep.certified_fraction;
    j["max_sup_ratio"] = rep.max_sup_ratio;
    j["max_hsN_ratio"] = rep.max_hsN_ratio;
    j["n_weight"] = rep.n_weight;
    j["pass"] = rep.pass;
    j["message"] = rep.message;
    emit(opts, dump_json(j));
    if (!rep.hypotheses_ok) return kExitHypothesis;
    return rep.pass ? kExitOk : kExitNumerical;
}

int cmd_fig1(const GlobalOpts& opts) {
    if (opts.config_path.empty()) throw std::runtime_error("usage: fig1 requires --config");
    const Config cfg = Config::parse_file(opts.config_path);
    double delta = 1e-4;
    if (const ConfigSection* ps = cfg.find("profile")) {
        ps->require_keys({"delta"});
        delta = ps->get_double_or("delta", delta);
    }
    std::vector<Fig1Row> rows;
    for (const ConfigSection* bs : cfg.find_all("beam")) {
        bs->require_keys(
            {"material", "E", "rho", "L", "h_over_L", "m", "ref_P_kN", "ref_nu", "ref_T"});
        Fig1Row row;
        row.material = bs->get_or("material", "beam");
        row.E = bs->get_double("E");
        row.rho = bs->get_double("rho");
        row.L = bs->get_double("L");
        row.h_over_L = bs->get_double_or("h_over_L", 1e-2);
        row.m = bs->get_double("m");
        row.has_ref = bs->has("ref_T");
        if (row.has_ref) {
            row.ref_P_kN = bs->get_double_or("ref_P_kN", 0.0);
            row.ref_nu = bs->get_double_or("ref_nu", 0.0);
            row.ref_T = bs->get_double("ref_T");
        }
        rows.push_back(row);
    }
    if (rows.empty()) throw std::runtime_error("usage: fig1 config has no [beam] rows");

    const auto results = fig1_table(rows, delta);
    if (opts.format == "csv") {
        emit(opts, fig1_csv(results));
    } else if (opts.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : results) {
            arr.push_back({{"material", r.row.material},
                           {"m", r.row.m},
                           {"P_kN", r.P_kN},
                           {"nu", r.nu},
                           {"eps", r.eps},
                           {"T_seconds", r.T_seconds},
                           {"order", r.order},
                           {"dev_P", r.dev_P},
                           {"dev_nu", r.dev_nu},
                           {"dev_T", r.dev_T},
                           {"flagged", r.flagged}});
        }
        emit(opts, dump_json(arr));
    } else {
        emit(opts, fig1_text_table(results));
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantitative normal forms and long-time stability for the hinged beam with "
                 "stretching nonlinearity"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--config", opts.config_path, "configuration file (key = value with [sections])");
    app.add_option("--out", opts.out_path, "output path (default stdout)");
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"csv", "json", "table"}));
    app.add_option("--threads", opts.threads, "worker threads for certification sweeps");
    auto* seed_opt = app.add_option("--seed", opts.seed, "seed for random initial states");

    auto* freq = app.add_subcommand("freq", "linear frequencies and spectral constants");
    double freq_m = 0.0;
    int freq_jmax = 10;
    freq->add_option("-m,--m", freq_m, "axial force parameter");
    freq->add_option("--jmax", freq_jmax, "largest mode index");

    auto* res = app.add_subcommand("resonances", "certify small-divisor lower bounds");
    int res_order = 4;
    double res_m = 0.0;
    int res_imax = 0;
    res->add_option("--order", res_order, "4 or 6")->check(CLI::IsMember({4, 6}));
    res->add_option("-m,--m", res_m, "axial force parameter");
    res->add_option("--imax", res_imax, "index range (defaults: 2000 / 300)");

    auto* bnf = app.add_subcommand("bnf", "normal-form constants, tables and residuals");
    double bnf_m = 1.0, bnf_r = 0.1;
    int bnf_n = 12, bnf_order = 4;
    bnf->add_option("-m,--m", bnf_m, "axial force parameter");
    bnf->add_option("-N,--n-trunc", bnf_n, "truncation for the symbolic stage");
    bnf->add_option("-r,--radius", bnf_r, "ball radius for the constants");
    bnf->add_option("--order", bnf_order, "4 or 6")->check(CLI::IsMember({4, 6}));

    auto* sim = app.add_subcommand("simulate", "long-time symplectic integration");
    auto* ver = app.add_subcommand("verify", "stability desk check");
    auto* fig = app.add_subcommand("fig1", "material stability-time table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }
    opts.seed_given = seed_opt->count() > 0;

    try {
        if (freq->parsed()) return cmd_freq(opts, freq_m, freq_jmax);
        if (res->parsed()) {
            if (res_imax == 0) res_imax = (res_order == 4) ? 2000 : 300;
            return cmd_resonances(opts, res_order, res_m, res_imax);
        }
        if (bnf->parsed()) return cmd_bnf(opts, bnf_m, bnf_n, bnf_r, bnf_order);
        if (sim->parsed()) return cmd_simulate(opts);
        if (ver->parsed()) return cmd_verify(opts);
        if (fig->parsed()) return cmd_fig1(opts);
    } catch (const std::domain_error& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const std::exception& e) {
        const std::string what = e.what();
        std::cerr << "error: " << what << "\n";
        if (what.rfind("config:", 0) == 0 || what.rfind("usage:", 0) == 0) return kExitUsage;
        return kExitNumerical;
    }
    return kExitUsage;
}
