#pragma once

#include <complex>
#include <vector>

#include "beambnf/poisson.hpp"
#include "beambnf/spectrum.hpp"

namespace beambnf {

/// The beam Hamiltonian H = Lambda + G in complex mode coordinates,
/// its coefficient tables, vector field and observables.
///
///   Lambda(z) = sum_j omega_j |z_j|^2
///   G(z)      = (1/32 pi) ( sum_j (j^2/omega_j) (z_j + conj z_j)^2 )^2

struct RealState {
    std::vector<double> q, p;
};

struct FieldPair {
    std::vector<double> u;  // coefficients of u in the phi_j basis
    std::vector<double> v;  // coefficients of u_t
};

// z_j = (q_j + i p_j) / sqrt(2) and back.
ModeState to_modes(const RealState& s);
RealState to_real(const ModeState& z);

// q_j = sqrt(omega_j) u_j, p_j = v_j / sqrt(omega_j) and back.
RealState from_fields(const FieldPair& f, double m);
FieldPair to_fields(const RealState& s, double m);

// G_ij = (1/32 pi) i^2 j^2 / (omega_i omega_j), symmetric, <= frak_c^2/(32 pi)
double g_coeff(int i, int j, double m);

// Integrable-part table: (1/8 pi) i^2 j^2/(omega_i omega_j) off the diagonal,
// (3/16 pi) i^4/omega_i^2 on it.
double a_coeff(int i, int j, double m);

double eval_lambda(const ModeState& z, double m);
double eval_G(const ModeState& z, double m);
double eval_H(const ModeState& z, double m);  // Lambda + G

// X^(h) = i omega_h z_h + (i/8 pi)(h^2/omega_h)(z_h + conj z_h) Q with the
// scalar Q = sum_j (j^2/omega_j)(z_j + conj z_j)^2 shared across components
// (O(N) total).
ModeState vector_field(const ModeState& z, double m);

// Energy of the (u, v) fields; equals eval_H of the converted state.
double energy_of_fields(const FieldPair& f, double m);

// |u(t)|_1 of the state's u-field and the certified sup bound sqrt(pi/3)|u|_1.
double u_h1_norm(const ModeState& z, double m);
double u_sup_bound(const ModeState& z, double m);

// Model polynomials over indices <= params.n_trunc for the symbolic stage.
PairedPolynomial build_lambda_poly(const ModelParams& params);
PairedPolynomial build_G_poly(const ModelParams& params);

}  // namespace beambnf
