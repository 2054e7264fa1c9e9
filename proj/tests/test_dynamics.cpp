#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "beambnf/dynamics.hpp"
#include "beambnf/physical.hpp"

using namespace beambnf;

namespace {
constexpr double kE = 2.71828182845904523536;
constexpr double kPi = 3.14159265358979323846;

ModeState random_state(int n, unsigned seed, double amplitude) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    ModeState z(static_cast<std::size_t>(n));
    for (auto& c : z) c = {amplitude * unif(rng), amplitude * unif(rng)};
    return z;
}
}  // namespace

TEST_CASE("linear regime: rotation and conserved actions") {
    // At amplitude 1e-7 the quartic term acts at 1e-28 and the dynamics is the
    // linear rotation to machine precision.
    ModelParams params{0.3, 4, 1.0, 4};
    const WeightSequence w = WeightSequence::wsN(4, params.m, 1.0, 4);
    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 2.0;
    cfg.sample_stride = 200;
    cfg.fixedpoint_tol = 1e-14;

    const ModeState z0 = random_state(4, 1, 1e-7);
    const double amplitude = 1e-7;

    // the splitting scheme rotates exactly
    IntegratorConfig split = cfg;
    split.scheme = Scheme::splitting;
    const Trajectory ts = integrate(z0, params, split, w);
    for (std::size_t t = 0; t < 4; ++t) {
        const std::complex<double> expect =
            z0[t] * std::exp(std::complex<double>{
                        0.0, frequency(static_cast<int>(t + 1), params.m) * ts.t.back()});
        CHECK(std::abs(ts.states.back()[t] - expect) <= 1e-12 * amplitude);
    }
    CHECK(action_drift(ts, w).weighted_action_drift <= 1e-12 * amplitude * amplitude);

    // implicit midpoint conserves the linear actions to fixed-point tolerance
    const Trajectory tm = integrate(z0, params, cfg, w);
    const double steps = cfg.t_end / cfg.dt;
    CHECK(action_drift(tm, w).weighted_action_drift <=
          50.0 * steps * cfg.fixedpoint_tol * amplitude);
    // and its phase error is second order: t omega^3 dt^2 / 12 at worst
    const double om4 = frequency(4, params.m);
    for (std::size_t t = 0; t < 4; ++t) {
        const std::complex<double> expect =
            z0[t] * std::exp(std::complex<double>{
                        0.0, frequency(static_cast<int>(t + 1), params.m) * tm.t.back()});
        CHECK(std::abs(tm.states.back()[t] - expect) <=
              amplitude * cfg.t_end * om4 * om4 * om4 * cfg.dt * cfg.dt);
    }
}

TEST_CASE("single-mode run: support invariance and energy conservation") {
    ModelParams params{0.0, 8, 1.0, 8};
    const WeightSequence w = WeightSequence::wsN(8, params.m, 1.0, 8);
    IntegratorConfig cfg;
    cfg.dt = 2e-4;
    cfg.t_end = 20.0;  // 1e5 steps
    cfg.sample_stride = 100;
    cfg.fixedpoint_tol = 1e-14;

    ModeState z0(8, {0.0, 0.0});
    z0[0] = {0.2 / std::sqrt(2.0), 0.0};  // q_1 = 0.2
    const Trajectory traj = integrate(z0, params, cfg, w);

    const double e0 = traj.energy.front();
    for (double e : traj.energy) CHECK(std::fabs(e - e0) <= 1e-10 * std::fabs(e0));
    for (const auto& z : traj.states)
        for (std::size_t t = 1; t < z.size(); ++t) {
            CHECK(z[t].real() == 0.0);  // support stays exactly {1}
            CHECK(z[t].imag() == 0.0);
        }
}

TEST_CASE("splitting and implicit midpoint converge together at second order") {
    ModelParams params{0.5, 6, 1.0, 6};
    const WeightSequence w = WeightSequence::wsN(6, params.m, 1.0, 6);
    const ModeState z0 = random_state(6, 9, 0.05);

    auto endpoint_gap = [&](double dt) {
        IntegratorConfig mid, split;
        mid.dt = split.dt = dt;
        mid.t_end = split.t_end = 1.0;
        mid.sample_stride = split.sample_stride = 1 << 20;
        split.scheme = Scheme::splitting;
        const Trajectory a = integrate(z0, params, mid, w);
        const Trajectory b = integrate(z0, params, split, w);
        double diff = 0.0;
        for (std::size_t t = 0; t < 6; ++t)
            diff = std::max(diff, std::abs(a.states.back()[t] - b.states.back()[t]));
        return diff;
    };
    // both schemes are O(dt^2), so their gap shrinks by ~4 when dt halves
    const double gap = endpoint_gap(2e-3), gap_half = endpoint_gap(1e-3);
    CHECK(gap / gap_half == doctest::Approx(4.0).epsilon(0.2));

    // the splitting kick leaves Re z (hence the stretching sum) invariant,
    // so its energy error stays bounded and small
    IntegratorConfig split;
    split.dt = 1e-3;
    split.t_end = 1.0;
    split.scheme = Scheme::splitting;
    split.sample_stride = 100;
    const Trajectory b = integrate(z0, params, split, w);
    for (double e : b.energy) CHECK(std::fabs(e - b.energy.front()) <= 1e-6 * b.energy.front());
}

TEST_CASE("time reversal returns to the initial state") {
    ModelParams params{0.2, 6, 1.0, 6};
    const WeightSequence w = WeightSequence::wsN(6, params.m, 1.0, 6);
    const ModeState z0 = random_state(6, 21, 0.05);
    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.t_end = 1.0;
    cfg.sample_stride = 1000;
    cfg.fixedpoint_tol = 1e-14;
    const Trajectory fwd = integrate(z0, params, cfg, w);
    // midpoint with negated dt retraces the trajectory exactly up to the
    // accumulated fixed-point residuals
    ModeState back = fwd.states.back();
    for (auto& c : back) c = std::conj(c);  // conjugation reverses time for this H
    const Trajectory rev = integrate(back, params, cfg, w);
    double err = 0.0;
    for (std::size_t t = 0; t < 6; ++t)
        err = std::max(err, std::abs(std::conj(rev.states.back()[t]) - z0[t]));
    CHECK(err <= 10.0 * cfg.fixedpoint_tol * (2.0 * cfg.t_end / cfg.dt));
}

TEST_CASE("fixed point diverges for absurd dt") {
    ModelParams params{0.0, 16, 1.0, 16};
    const WeightSequence w = WeightSequence::wsN(16, params.m, 1.0, 16);
    IntegratorConfig cfg;
    cfg.dt = 1.0;  // dt * max omega = 256
    cfg.t_end = 1.0;
    const ModeState z0 = random_state(16, 4, 0.1);
    CHECK_THROWS_WITH_AS(integrate(z0, params, cfg, w), doctest::Contains("fixed point diverged"),
                         std::runtime_error);
}

TEST_CASE("flow_generating: fixed origin, round trip, displacement bound") {
    ModelParams params{0.0, 8, 1.0, 8};
    const GeneratingFunction S = build_S4(params);
    const WeightSequence w = WeightSequence::wsN(8, params.m, 1.0, 8);

    ModeState zero(8, {0.0, 0.0});
    const ModeState fzero = flow_generating(zero, S, +1, w);
    for (const auto& c : fzero) CHECK(std::abs(c) == 0.0);

    // r at the certified boundary: displacement <= r / (80 e)
    const double r = 5.0 / 11.0 * std::sqrt(kPi * mu(params.m) / (22.0 * kE * frak_c(params.m)));
    for (int trial = 0; trial < 10; ++trial) {
        ModeState z0 = random_state(8, 40 + trial, 1.0);
        const double nz = weighted_norm(z0, w);
        for (auto& c : z0) c *= r / nz;
        const ModeState fz = flow_generating(z0, S, +1, w, 100, 1e-14);
        ModeState disp(8);
        for (std::size_t t = 0; t < 8; ++t) disp[t] = fz[t] - z0[t];
        CHECK(weighted_norm(disp, w) <= r / (80.0 * kE));

        const ModeState back = flow_generating(fz, S, -1, w, 100, 1e-14);
        double err = 0.0;
        for (std::size_t t = 0; t < 8; ++t) err = std::max(err, std::abs(back[t] - z0[t]));
        CHECK(err <= 1e-10);
    }

    // half-radius states satisfy the same round-trip contract
    ModeState half = random_state(8, 99, 1.0);
    const double nz = weighted_norm(half, w);
    for (auto& c : half) c *= 0.5 * r / nz;
    const ModeState rt = flow_generating(flow_generating(half, S, +1, w), S, -1, w);
    double err = 0.0;
    for (std::size_t t = 0; t < 8; ++t) err = std::max(err, std::abs(rt[t] - half[t]));
    CHECK(err <= 1e-10);
}

TEST_CASE("action drift scales like eps^4 raw and eps^6 after conjugation") {
    ModelParams params{1.0, 8, 1.0, 8};
    const WeightSequence w = WeightSequence::wsN(8, params.m, 1.0, 8);
    const GeneratingFunction S = build_S4(params);

    const ModeState dir = random_state(8, 777, 1.0);
    const double ndir = weighted_norm(dir, w);

    // The exact splitting scheme keeps the integrator noise floor at pure
    // rounding; the eps^6 drift at eps = 0.04 would drown in the fixed-point
    // termination noise of the implicit scheme over this many steps.
    auto run_drift = [&](double eps, bool conjugated) {
        ModeState z0 = dir;
        for (auto& c : z0) c *= eps / ndir;
        if (conjugated) z0 = flow_generating(z0, S, +1, w, 200, 1e-14);
        IntegratorConfig cfg;
        cfg.dt = 5e-4;
        cfg.t_end = 50.0;  // short horizon keeps the unit test quick
        cfg.scheme = Scheme::splitting;
        cfg.sample_stride = 2000;
        const Trajectory traj = integrate(z0, params, cfg, w);
        if (!conjugated) return action_drift(traj, w).weighted_action_drift;
        double worst = 0.0;
        std::vector<double> i0;
        for (std::size_t s = 0; s < traj.states.size(); ++s) {
            const ModeState zeta = flow_generating(traj.states[s], S, -1, w, 200, 1e-14);
            std::vector<double> acts(zeta.size());
            for (std::size_t t = 0; t < zeta.size(); ++t) acts[t] = std::norm(zeta[t]);
            if (s == 0) {
                i0 = acts;
                continue;
            }
            double acc = 0.0;
            for (std::size_t t = 0; t < acts.size(); ++t)
                acc += w.values[t] * w.values[t] * std::fabs(acts[t] - i0[t]);
            worst = std::max(worst, acc);
        }
        return worst;
    };

    const double raw_ratio = run_drift(0.08, false) / run_drift(0.04, false);
    CHECK(raw_ratio >= 10.0);
    CHECK(raw_ratio <= 24.0);
    const double bnf_ratio = run_drift(0.08, true) / run_drift(0.04, true);
    CHECK(bnf_ratio >= 40.0);
    CHECK(bnf_ratio <= 100.0);

    // conjugation flattens the drift outright at eps = 0.05: factor >= 4
    CHECK(run_drift(0.05, true) <= run_drift(0.05, false) / 4.0);
}

TEST_CASE("verify_stability_bound: pass, hypotheses, profile eps") {
    ModelParams params{0.0, 8, 1.0, 8};
    IntegratorConfig cfg;
    cfg.dt = 2e-3;
    cfg.fixedpoint_tol = 1e-13;

    // mode-1 data at eps = 0.05: run a budgeted prefix
    FieldPair init;
    init.u.assign(8, 0.0);
    init.v.assign(8, 0.0);
    init.u[0] = 0.05;
    const StabilityCheckReport rep = verify_stability_bound(init, params, 20000, cfg);
    CHECK(rep.hypotheses_ok);
    CHECK(rep.eps == doctest::Approx(0.05));
    CHECK(rep.pass);
    CHECK(rep.max_sup_ratio <= 1.0);
    CHECK(rep.certified_fraction > 0.0);
    CHECK(rep.certified_fraction <= 1.0);

    // eps above the threshold is reported, not thrown
    FieldPair big = init;
    big.u[0] = 0.3;
    const StabilityCheckReport bad = verify_stability_bound(big, params, 100, cfg);
    CHECK(!bad.hypotheses_ok);
    CHECK(!bad.pass);
    CHECK(bad.message.find("hypotheses not met") != std::string::npos);

    // profile initial data: eps tracks 436 delta
    PhysicalBeam beam{200e9, 7500, 2.0, Section::square(0.02), 0.0};
    const InitialData data = initial_data_from_profile(1e-4, beam, 8);
    CHECK(data.eps / 1e-4 == doctest::Approx(436.0).epsilon(2.5e-3));
}
