#include "beambnf/dynamics.hpp"

#include <cmath>
#include <complex>
#include <iostream>
#include <stdexcept>

namespace beambnf {

namespace {

constexpr std::complex<double> kImagUnit{0.0, 1.0};
constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;

// One implicit-midpoint step of dz/dt = X(z): solve w = z + (dt/2) X(w) by
// fixed-point iteration, then z <- 2w - z.  Zero components stay exactly
// zero, so the Fourier support never grows.
template <class Field>
void midpoint_step(ModeState& z, double dt, const Field& field, double tol, int max_iters,
                   ModeState& w, ModeState& xw) {
    field(z, xw);
    w.resize(z.size());
    for (std::size_t t = 0; t < z.size(); ++t) w[t] = z[t] + 0.5 * dt * xw[t];
    double diff = 0.0;
    for (int it = 0; it < max_iters; ++it) {
        field(w, xw);
        diff = 0.0;
        for (std::size_t t = 0; t < z.size(); ++t) {
            const std::complex<double> next = z[t] + 0.5 * dt * xw[t];
            diff = std::max(diff, std::abs(next - w[t]));
            w[t] = next;
        }
        if (diff <= tol) {
            for (std::size_t t = 0; t < z.size(); ++t) z[t] = 2.0 * w[t] - z[t];
            return;
        }
    }
    throw std::runtime_error("fixed point diverged (reduce dt)");
}

struct BeamStepper {
    const ModelParams& params;
    const IntegratorConfig& cfg;
    std::vector<double> omega;
    std::vector<double> c;  // j^2 / omega_j
    std::vector<std::complex<double>> half_rotation;
    ModeState scratch_w, scratch_x;

    BeamStepper(const ModelParams& p, const IntegratorConfig& config) : params(p), cfg(config) {
        omega.resize(static_cast<std::size_t>(p.n_trunc));
        c.resize(static_cast<std::size_t>(p.n_trunc));
        half_rotation.resize(static_cast<std::size_t>(p.n_trunc));
        for (int j = 1; j <= p.n_trunc; ++j) {
            const double om = frequency(j, p.m);
            omega[static_cast<std::size_t>(j - 1)] = om;
            c[static_cast<std::size_t>(j - 1)] = static_cast<double>(j) * j / om;
            half_rotation[static_cast<std::size_t>(j - 1)] =
                std::exp(kImagUnit * (om * cfg.dt * 0.5));
        }
    }

    void field(const ModeState& z, ModeState& out) const {
        out.resize(z.size());
        double q = 0.0;
        for (std::size_t t = 0; t < z.size(); ++t) {
            const double x = 2.0 * z[t].real();
            q += c[t] * x * x;
        }
        for (std::size_t t = 0; t < z.size(); ++t) {
            const double x = 2.0 * z[t].real();
            const std::complex<double> val = omega[t] * z[t] + c[t] / (8.0 * kPi) * x * q;
            out[t] = {-val.imag(), val.real()};
        }
    }

    void rotate_half(ModeState& z) const {
        for (std::size_t t = 0; t < z.size(); ++t) z[t] *= half_rotation[t];
    }

    // The quartic flow is exact: Re z_j is invariant under it, so Q is
    // constant and each mode receives a pure imaginary kick.
    void kick(ModeState& z, double dt) const {
        double q = 0.0;
        for (std::size_t t = 0; t < z.size(); ++t) {
            const double x = 2.0 * z[t].real();
            q += c[t] * x * x;
        }
        for (std::size_t t = 0; t < z.size(); ++t) {
            const double x = 2.0 * z[t].real();
            z[t] += kImagUnit * (dt * c[t] / (8.0 * kPi) * x * q);
        }
    }

    void step(ModeState& z) {
        if (cfg.scheme == Scheme::implicit_midpoint) {
            midpoint_step(
                z, cfg.dt, [this](const ModeState& s, ModeState& out) { field(s, out); },
                cfg.fixedpoint_tol, cfg.max_fixedpoint_iters, scratch_w, scratch_x);
        } else {
            rotate_half(z);
            kick(z, cfg.dt);
            rotate_half(z);
        }
    }
};

}  // namespace

void IntegratorConfig::validate() const {
    if (!(dt > 0.0)) throw std::invalid_argument("IntegratorConfig: require dt > 0");
    if (!(fixedpoint_tol >= 1e-14))
        throw std::invalid_argument("IntegratorConfig: require fixedpoint_tol >= 1e-14");
    if (max_fixedpoint_iters < 1)
        throw std::invalid_argument("IntegratorConfig: require max_fixedpoint_iters >= 1");
    if (!(t_end >= 0.0)) throw std::invalid_argument("IntegratorConfig: require t_end >= 0");
    if (sample_stride < 1)
        throw std::invalid_argument("IntegratorConfig: require sample_stride >= 1");
}

Trajectory integrate(const ModeState& z0, const ModelParams& params, const IntegratorConfig& cfg,
                     const WeightSequence& w) {
    params.validate();
    cfg.validate();
    if (static_cast<int>(z0.size()) != params.n_trunc)
        throw std::invalid_argument("integrate: state size != n_trunc");
    if (w.size() != params.n_trunc)
        throw std::invalid_argument("integrate: weight size != n_trunc");

    BeamStepper stepper(params, cfg);
    if (cfg.dt * stepper.omega.back() > 1.0)
        std::cerr << "integrate: warning, dt * max omega = " << cfg.dt * stepper.omega.back()
                  << " > 1\n";

    const std::int64_t n_steps = static_cast<std::int64_t>(std::llround(cfg.t_end / cfg.dt));
    Trajectory traj;
    ModeState z = z0;

    auto sample = [&](double t) {
        traj.t.push_back(t);
        traj.states.push_back(z);
        traj.energy.push_back(eval_H(z, params.m));
        double sum_i = 0.0;
        std::vector<double> actions(z.size());
        for (std::size_t u = 0; u < z.size(); ++u) {
            actions[u] = std::norm(z[u]);
            sum_i += actions[u];
        }
        traj.sum_actions.push_back(sum_i);
        traj.actions.push_back(std::move(actions));
        traj.w_norm.push_back(weighted_norm(z, w));
        traj.sup_bound.push_back(u_sup_bound(z, params.m));
    };

    sample(0.0);
    for (std::int64_t n = 1; n <= n_steps; ++n) {
        stepper.step(z);
        if (n % cfg.sample_stride == 0 || n == n_steps) sample(static_cast<double>(n) * cfg.dt);
    }
    traj.steps_taken = n_steps;
    return traj;
}

ModeState flow_generating(const ModeState& z0, const GeneratingFunction& S, int direction,
                          const WeightSequence& w, int substeps, double tol) {
    if (direction != 1 && direction != -1)
        throw std::invalid_argument("flow_generating: direction must be +1 or -1");
    if (substeps < 1) throw std::invalid_argument("flow_generating: require substeps >= 1");

    const double r = weighted_norm(z0, w);
    if (r > 0.0) {
        const double eta = 4.0 * kE * 11.0 * norm_upper_bound(S.S, 1.1 * r, w);
        if (!(eta < 1.0))
            throw std::domain_error("flow_generating: state outside the certified ball (eta >= 1)");
    }

    const CompiledField field(S.S, static_cast<int>(z0.size()));
    // The generating coefficients solve G + {S, Lambda} = Gbar, which ties the
    // conjugation to the canonical flow dz/dt = -i dS/dconj z; the compiled
    // field carries the +i sign, so it is integrated backward in time.
    const double dt = -static_cast<double>(direction) / substeps;
    ModeState z = z0, scratch_w, scratch_x;
    for (int n = 0; n < substeps; ++n) {
        midpoint_step(
            z, dt, [&field](const ModeState& s, ModeState& out) { field.apply(s, out); }, tol,
            200, scratch_w, scratch_x);
    }
    return z;
}

DriftReport action_drift(const Trajectory& traj, const WeightSequence& w) {
    if (traj.actions.empty()) throw std::invalid_argument("action_drift: empty trajectory");
    DriftReport rep;
    const auto& i0 = traj.actions.front();
    const double w0 = traj.w_norm.front();
    for (std::size_t s = 1; s < traj.actions.size(); ++s) {
        double acc = 0.0;
        for (std::size_t t = 0; t < i0.size(); ++t) {
            const double wt = w.values[t];
            acc += wt * wt * std::fabs(traj.actions[s][t] - i0[t]);
        }
        rep.weighted_action_drift = std::max(rep.weighted_action_drift, acc);
        rep.w_norm_drift = std::max(rep.w_norm_drift, std::fabs(traj.w_norm[s] - w0));
    }
    return rep;
}

StabilityCheckReport verify_stability_bound(const FieldPair& init, const ModelParams& params,
                              std::int64_t budget_steps, const IntegratorConfig& cfg) {
    params.validate();
    cfg.validate();
    StabilityCheckReport rep;

    const SobolevNorms n0 = sobolev_norms(init.u, params.s, params.n_weight, params.m);
    const SobolevNorms v0 = sobolev_norms(init.v, params.s, params.n_weight, params.m);
    rep.eps = std::max(n0.h1, v0.tilde_hm1);
    rep.eps0 = 0.08 * std::sqrt(mu(params.m));
    if (params.m < -0.5) {
        rep.message = "hypotheses not met: m < -1/2";
        return rep;
    }
    if (rep.eps > rep.eps0 || rep.eps == 0.0) {
        rep.message = "hypotheses not met: eps outside (0, eps0]";
        return rep;
    }
    rep.hypotheses_ok = true;

    constexpr double shrink = 5.0 / 6.0 - 1.0 / (80.0 * kE);
    const BnfConstants k = constants(params, rep.eps / shrink);
    rep.horizon = k.T0 * k.mu * std::pow(rep.eps, -4.0);

    int n_weight = params.n_trunc;
    try {
        n_weight = std::min(params.n_trunc, choose_truncation(init.u, params.s + 2.0, 0.01));
    } catch (const std::runtime_error&) {
        // no certified crossover; fall back to the full truncation
    }
    rep.n_weight = n_weight;

    const std::int64_t horizon_steps =
        static_cast<std::int64_t>(std::ceil(rep.horizon / cfg.dt));
    const std::int64_t n_steps = std::min(budget_steps, horizon_steps);
    rep.covered_time = static_cast<double>(n_steps) * cfg.dt;
    if (n_steps == horizon_steps) rep.covered_time = rep.horizon;
    rep.certified_fraction = std::min(1.0, rep.covered_time / rep.horizon);

    ModeState z = to_modes(from_fields(init, params.m));
    z.resize(static_cast<std::size_t>(params.n_trunc), {0.0, 0.0});
    BeamStepper stepper(params, cfg);

    std::vector<double> u_now(static_cast<std::size_t>(params.n_trunc));
    auto check = [&]() {
        rep.max_sup_ratio =
            std::max(rep.max_sup_ratio, u_sup_bound(z, params.m) / (2.0 * rep.eps));
        for (std::size_t t = 0; t < z.size(); ++t)  // u_j = q_j / sqrt(omega_j), q_j = sqrt(2) Re z_j
            u_now[t] = std::sqrt(2.0 / frequency(static_cast<int>(t + 1), params.m)) * z[t].real();
        const SobolevNorms nt = sobolev_norms(u_now, params.s + 2.0, n_weight, params.m);
        rep.max_hsN_ratio = std::max(rep.max_hsN_ratio, nt.hsN / (1.9 * rep.eps));
    };

    check();
    for (std::int64_t n = 1; n <= n_steps; ++n) {
        stepper.step(z);
        check();
    }
    rep.pass = rep.max_sup_ratio <= 1.0;
    rep.message = rep.certified_fraction >= 1.0
                      ? "full horizon integrated"
                      : "budgeted prefix only; certified_fraction reports the checked share";
    return rep;
}

}  // namespace beambnf
