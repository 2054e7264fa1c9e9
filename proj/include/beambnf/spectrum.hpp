#pragma once

#include <complex>
#include <vector>

namespace beambnf {

/// Linear frequencies, weight sequences and the norms used throughout the
/// library.  Mode indices are 1-based everywhere.

struct ModelParams {
    double m = 0.0;       // dimensionless axial force, must satisfy m > -1
    int n_trunc = 12;     // Galerkin truncation
    double s = 1.0;       // Sobolev index, >= 0
    int n_weight = 12;    // crossover index of the H^s_N family, <= n_trunc

    void validate() const;  // throws std::invalid_argument on violation
};

using ModeState = std::vector<std::complex<double>>;  // z_1..z_N, 1-based mode j at [j-1]

// omega_j = sqrt(j^4 + m j^2); strictly increasing in j for m >= -1/2.
double frequency(int j, double m);

// min{2 sqrt(1+m), (3/2) sqrt(4+m)}, the uniform fourth-order divisor bound.
double mu(double m);

// sup_j j^2/omega_j: 1 for m >= 0, (1+m)^{-1/2} for -1/2 <= m < 0.
double frak_c(double m);

enum class WeightKind { w0, wsN, custom };

struct WeightSequence {
    std::vector<double> values;  // w_1..w_n, all > 0
    WeightKind kind = WeightKind::custom;

    static WeightSequence w0(int n, double m);  // w_j = j / sqrt(omega_j)
    // w_j = j omega_j^{-1/2} for j <= n_weight, j^{s+2} omega_j^{-1/2} above.
    static WeightSequence wsN(int n, double m, double s, int n_weight);
    static WeightSequence custom(std::vector<double> v);

    double at(int j) const { return values.at(static_cast<std::size_t>(j - 1)); }
    int size() const { return static_cast<int>(values.size()); }
};

// sqrt(sum_j w_j^2 |z_j|^2)
double weighted_norm(const ModeState& z, const WeightSequence& w);

struct SobolevNorms {
    double h1;         // (sum j^2 u_j^2)^{1/2}
    double hsN;        // H^s_N norm: j^2 below N, j^{2s} above
    double tilde_hm1;  // (sum (j/omega_j)^2 u_j^2)^{1/2}
    double tilde_hsN;  // j^2/omega^2 below N, j^{2s+4}/omega^2 above
};
SobolevNorms sobolev_norms(const std::vector<double>& u, double s, int N, double m);

// Plain H^s norm of the coefficient vector.
double sobolev_h_s(const std::vector<double>& u, double s);

// Smallest N with |u|_{H^s_N} <= (1+delta) |u|_1, scanning upward from 1.
// Coefficients with trailing zeros are taken as an exact trigonometric
// polynomial.  Without trailing zeros a geometric tail bound is added; if the
// top decade of H^s mass shows no decay the scan aborts with
// "insufficient tail decay".
int choose_truncation(const std::vector<double>& u, double s, double delta);

// sqrt(pi/3) |u|_1, a certified bound on max_x |u(x)| (c_1^2 = pi/3).
double sup_norm_bound(const std::vector<double>& u);

// Certified upper bound on c_s^2 = (2/pi) sum_j j^{-2s}: partial sum over
// `terms` modes plus the integral tail bound.  Requires s > 1/2.
double cs_squared_upper(double s, int terms);

// Partial sum (2/pi) sum_{j<=J} j^{-2} (used by the c_1 convergence check).
double c1_squared_partial(int J);

}  // namespace beambnf
