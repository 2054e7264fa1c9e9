#include "beambnf/bnf.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "beambnf/hamiltonian.hpp"

namespace beambnf {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;
constexpr std::complex<double> kImagUnit{0.0, 1.0};

std::vector<double> frequency_table(const ModelParams& params) {
    std::vector<double> omega(static_cast<std::size_t>(params.n_trunc));
    for (int j = 1; j <= params.n_trunc; ++j)
        omega[static_cast<std::size_t>(j - 1)] = frequency(j, params.m);
    return omega;
}
}  // namespace

GeneratingFunction build_S4(const ModelParams& params) {
    params.validate();
    if (params.m < -0.5) throw std::domain_error("build_S4: require m >= -1/2");
    const auto omega = frequency_table(params);
    const double mu_m = mu(params.m);
    const PairedPolynomial G = build_G_poly(params);

    GeneratingFunction out;
    out.order = BnfOrder::fourth;
    out.min_abs_divisor = std::numeric_limits<double>::infinity();
    for (const auto& [mono, c] : G.sorted_terms()) {
        if (mono.is_action()) continue;  // integrable support stays in Gbar
        const double divisor = mono.small_divisor(omega);
        if (std::fabs(divisor) < mu_m * (1.0 - 1e-9))
            throw std::logic_error("build_S4: divisor below the certified fourth-order bound");
        out.min_abs_divisor = std::min(out.min_abs_divisor, std::fabs(divisor));
        out.S.add(mono, kImagUnit * c / divisor);
    }
    return out;
}

double homological_residual4(const GeneratingFunction& S, const ModelParams& params) {
    if (S.order != BnfOrder::fourth)
        throw std::invalid_argument("homological_residual4: fourth-order S expected");
    const PairedPolynomial G = build_G_poly(params);
    const PairedPolynomial lambda = build_lambda_poly(params);
    const PairedPolynomial residual = G + bracket(S.S, lambda) - project_integrable4(G);
    return residual.max_abs_coefficient();
}

PairedPolynomial r6_from_S4(const GeneratingFunction& S, const ModelParams& params) {
    if (S.order != BnfOrder::fourth)
        throw std::invalid_argument("r6_from_S4: fourth-order S expected");
    const PairedPolynomial G = build_G_poly(params);
    const PairedPolynomial Gbar = project_integrable4(G);
    return bracket(S.S, Gbar + G) * 0.5;
}

GeneratingFunction build_S6(const PairedPolynomial& r6, const ModelParams& params) {
    params.validate();
    if (params.m == 0.0)
        throw std::domain_error(
            "build_S6: sixth-order resonances present at m = 0 (Pythagorean triples)");
    if (params.m < -0.5 || params.m > 1.0)
        throw std::domain_error("build_S6: require -1/2 <= m <= 1");
    const auto omega = frequency_table(params);
    const double bound = 7.0 / 8.0 * std::fabs(params.m);

    GeneratingFunction out;
    out.order = BnfOrder::sixth;
    out.min_abs_divisor = std::numeric_limits<double>::infinity();
    for (const auto& [mono, c] : r6.sorted_terms()) {
        if (mono.degree() != 6)
            throw std::invalid_argument("build_S6: remainder not homogeneous of degree 6");
        if (mono.net_signs_zero()) continue;  // resonant support stays in Rbar
        const double divisor = mono.small_divisor(omega);
        if (std::fabs(divisor) < bound * (1.0 - 1e-9))
            throw std::logic_error("build_S6: divisor below the certified sixth-order bound");
        out.min_abs_divisor = std::min(out.min_abs_divisor, std::fabs(divisor));
        out.S.add(mono, kImagUnit * c / divisor);
    }
    return out;
}

double homological_residual6(const GeneratingFunction& S6, const PairedPolynomial& r6,
                             const ModelParams& params) {
    if (S6.order != BnfOrder::sixth)
        throw std::invalid_argument("homological_residual6: sixth-order S expected");
    const PairedPolynomial lambda = build_lambda_poly(params);
    const PairedPolynomial residual =
        r6 + bracket(S6.S, lambda) - project_integrable6(r6, params.m);
    return residual.max_abs_coefficient();
}

BnfConstants constants(const ModelParams& params, double r) {
    params.validate();
    if (!(r > 0.0)) throw std::invalid_argument("constants: require r > 0");
    if (params.m < -0.5) throw std::domain_error("constants: require m >= -1/2");

    BnfConstants k;
    k.m = params.m;
    k.mu = mu(params.m);
    k.frak_c = frak_c(params.m);
    k.r = r;

    // gamma_r = r sup_j (w0_j / w_j) for the active weight family
    const WeightSequence w0 = WeightSequence::w0(params.n_trunc, params.m);
    const WeightSequence w = WeightSequence::wsN(params.n_trunc, params.m, params.s, params.n_weight);
    double sup_ratio = 0.0;
    for (int j = 1; j <= params.n_trunc; ++j) sup_ratio = std::max(sup_ratio, w0.at(j) / w.at(j));
    k.gamma_r = r * sup_ratio;

    k.c_star = std::pow(11.0 / 10.0, 2.0) * std::pow(5.0 / 6.0 - 1.0 / (80.0 * kE), -2.0);
    k.c_dagger = 44.0 * kE / kPi;

    const double g11 = 11.0 * k.gamma_r / 10.0;
    k.eta_r = 44.0 * kE * k.frak_c / (kPi * k.mu) * g11 * g11;
    k.smallness_4th_ok =
        k.gamma_r <= 5.0 / 11.0 * std::sqrt(kPi * k.mu / (22.0 * kE * k.frak_c)) && k.eta_r < 1.0;
    k.C_r = (k.eta_r < 1.0)
                ? 3.0 * k.frak_c / (2.0 * kPi * kE) * k.eta_r / (1.0 - k.eta_r) * g11 * g11
                : std::numeric_limits<double>::infinity();
    k.r8_bound = 16.0 * k.frak_c / (3.0 * kE * kE * kPi * kPi * kPi) *
                 std::pow(k.gamma_r, 6.0) / (k.mu * k.mu);

    if (params.m != 0.0) {
        k.eta6 = 352.0 * kE * k.C_r / (7.0 * std::fabs(params.m));
        k.smallness_6th_ok = k.eta6 <= 0.5;
        k.C6 = k.eta6 * k.eta6 / (44.0 * kE * kE) +
               2.0 / kE * k.eta6 * (k.frak_c / kPi * k.gamma_r * k.gamma_r + k.C_r) +
               k.r8_bound * (1.0 + 2.0 * k.eta6 / kE);
    } else {
        k.eta6 = std::numeric_limits<double>::infinity();
        k.smallness_6th_ok = false;
        k.C6 = std::numeric_limits<double>::infinity();
    }

    k.eps0 = 0.08 * std::sqrt(k.mu);
    k.eps1 = (params.m != 0.0)
                 ? std::min(k.eps0, std::pow(std::fabs(params.m) * k.mu /
                                                 (3222.0 * k.frak_c * k.frak_c),
                                             0.25))
                 : 0.0;

    k.eps_of_r = (5.0 / 6.0 - 1.0 / (80.0 * kE)) * r;
    const double eps2 = k.eps_of_r * k.eps_of_r;
    k.T0 = 0.948 * (1.0 - k.c_dagger * k.c_star * eps2 / k.mu) / (k.c_dagger * k.c_star * k.c_star);
    if (params.m != 0.0) {
        const double am = std::fabs(params.m);
        k.T1 = am * k.mu /
               (6595.0 * std::pow(k.frak_c, 3.0) *
                (1.0 + 30.0 * k.frak_c / (am * k.mu) * eps2 + 90.0 * k.frak_c / k.mu * eps2));
    } else {
        k.T1 = 0.0;
    }
    return k;
}

StabilityCertificate stability_certificate(double eps, const ModelParams& params) {
    params.validate();
    if (!(eps > 0.0)) throw std::invalid_argument("stability_certificate: require eps > 0");
    constexpr double shrink = 5.0 / 6.0 - 1.0 / (80.0 * kE);
    const double r = eps / shrink;
    const BnfConstants k = constants(params, r);

    StabilityCertificate cert;
    cert.eps = eps;
    cert.eps0 = k.eps0;
    cert.eps1 = k.eps1;
    cert.sup_bound_4th = 2.0 * eps;
    cert.sup_bound_6th = 2.1 * eps;
    if (eps <= k.eps0) cert.horizon_4th = k.T0 * k.mu * std::pow(eps, -4.0);
    const bool sixth_hypotheses =
        params.m != 0.0 && params.m >= -0.5 && params.m <= 1.0 && eps <= k.eps1;
    if (eps <= k.eps0 && sixth_hypotheses) cert.horizon_6th = k.T1 * std::pow(eps, -6.0);
    return cert;
}

NormalFormHamiltonian build_normal_form(const ModelParams& params, double r) {
    params.validate();
    NormalFormHamiltonian nf;
    nf.omega = frequency_table(params);

    const PairedPolynomial G = build_G_poly(params);
    const double g_scale = G.max_abs_coefficient();
    nf.G_bar = project_integrable4(G);

    const GeneratingFunction S4 = build_S4(params);
    nf.residual4 = homological_residual4(S4, params) / g_scale;

    const WeightSequence w =
        WeightSequence::wsN(params.n_trunc, params.m, params.s, params.n_weight);
    nf.S4_norm_bound = norm_upper_bound(S4.S, r, w);

    for (const auto& [mono, c] : nf.G_bar.sorted_terms()) {
        if (mono.n_slots() == 1) {
            nf.A4.push_back({static_cast<int>(mono.slot(0).index),
                             static_cast<int>(mono.slot(0).index), c.real()});
        } else {
            nf.A4.push_back({static_cast<int>(mono.slot(0).index),
                             static_cast<int>(mono.slot(1).index), c.real()});
        }
    }

    nf.sixth_available = params.m != 0.0 && params.m >= -0.5 && params.m <= 1.0;
    if (nf.sixth_available) {
        const PairedPolynomial r6 = r6_from_S4(S4, params);
        nf.R_bar = project_integrable6(r6, params.m);
        const GeneratingFunction S6 = build_S6(r6, params);
        nf.residual6 = homological_residual6(S6, r6, params) /
                       std::max(r6.max_abs_coefficient(), 1e-300);
        nf.S6_norm_bound = norm_upper_bound(S6.S, r, w);
        for (const auto& [mono, c] : nf.R_bar.sorted_terms()) {
            int idx[3] = {0, 0, 0};
            int pos = 0;
            for (int t = 0; t < mono.n_slots(); ++t)
                for (int e = 0; e < mono.slot(t).up; ++e) idx[pos++] = static_cast<int>(mono.slot(t).index);
            nf.A6.push_back({idx[0], idx[1], idx[2], c.real()});
        }
    }

    nf.constants = constants(params, r);
    return nf;
}

}  // namespace beambnf
