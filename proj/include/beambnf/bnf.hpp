#pragma once

#include <optional>
#include <vector>

#include "beambnf/poisson.hpp"
#include "beambnf/spectrum.hpp"

namespace beambnf {

/// Fourth- and sixth-order normal forms: generating functions solving the
/// homological equations, the degree-6 remainder in closed form, and every
/// explicit constant and stability threshold.

enum class BnfOrder { fourth, sixth };

struct GeneratingFunction {
    PairedPolynomial S;
    BnfOrder order = BnfOrder::fourth;
    double min_abs_divisor = 0;  // smallest |Delta| actually divided by
};

struct BnfConstants {
    double m = 0, mu = 0, frak_c = 0;
    double r = 0, gamma_r = 0;
    double eta_r = 0, C_r = 0;        // fourth-order smallness and remainder bound
    double eta6 = 0, C6 = 0;          // sixth-order analogues
    double r8_bound = 0;              // bound on the degree >= 8 part of the remainder
    double eps0 = 0, eps1 = 0;
    double eps_of_r = 0;              // (5/6 - 1/(80e)) r, the amplitude tied to r
    double T0 = 0, T1 = 0;            // evaluated at eps_of_r
    double c_star = 0, c_dagger = 0;
    bool smallness_4th_ok = false;    // gamma_r within the certified range (eta_r <= 1/2)
    bool smallness_6th_ok = false;    // eta6 <= 1/2
};

// S with coefficients i G_M / Delta_M on the non-integrable support of the
// truncated G.  Throws if any divisor falls below mu (1 - 1e-9).
GeneratingFunction build_S4(const ModelParams& params);

// Max |coefficient| of G + {S, Lambda} - Gbar over the truncated monomials
// (pure rounding by construction; contract <= 1e-12 max|G coeff|).
double homological_residual4(const GeneratingFunction& S, const ModelParams& params);

// Degree-6 remainder of the fourth-order step in closed form,
// (1/2) {S, Gbar + G}.
PairedPolynomial r6_from_S4(const GeneratingFunction& S, const ModelParams& params);

// Sixth-order generating function i R6_M / Delta_M on the non-resonant
// support; requires -1/2 <= m <= 1, m != 0 (Pythagorean resonances at m = 0).
GeneratingFunction build_S6(const PairedPolynomial& r6, const ModelParams& params);

// Max |coefficient| of R6 + {S6, Lambda} - Rbar.
double homological_residual6(const GeneratingFunction& S6, const PairedPolynomial& r6,
                             const ModelParams& params);

// The full constant bundle at radius r (gamma_r from the active w^s_N weight).
BnfConstants constants(const ModelParams& params, double r);

struct StabilityCertificate {
    double eps = 0, eps0 = 0, eps1 = 0;
    std::optional<double> horizon_4th;  // T0 mu eps^-4 when eps <= eps0
    std::optional<double> horizon_6th;  // T1 eps^-6 when the sixth-order hypotheses hold
    double sup_bound_4th = 0;           // 2 eps
    double sup_bound_6th = 0;           // 2.1 eps, meaningful with horizon_6th
};
StabilityCertificate stability_certificate(double eps, const ModelParams& params);

struct ActionTerm4 { int i, j; double coeff; };
struct ActionTerm6 { int i, j, k; double coeff; };

struct NormalFormHamiltonian {
    std::vector<double> omega;          // linear part
    PairedPolynomial G_bar;             // integrable quartic part
    PairedPolynomial R_bar;             // integrable sextic part (empty if unavailable)
    std::vector<ActionTerm4> A4;        // coefficients of |z_i|^2 |z_j|^2, i <= j
    std::vector<ActionTerm6> A6;        // coefficients of |z_i|^2 |z_j|^2 |z_k|^2, i <= j <= k
    double residual4 = 0, residual6 = 0;  // relative homological residuals
    double S4_norm_bound = 0, S6_norm_bound = 0;
    bool sixth_available = false;
    BnfConstants constants;
};

// Convenience bundle running the whole construction at radius r.
NormalFormHamiltonian build_normal_form(const ModelParams& params, double r);

}  // namespace beambnf
