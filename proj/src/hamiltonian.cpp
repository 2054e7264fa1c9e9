#include "beambnf/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

namespace beambnf {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.41421356237309504880;
}  // namespace

ModeState to_modes(const RealState& s) {
    if (s.q.size() != s.p.size()) throw std::invalid_argument("to_modes: q/p size mismatch");
    ModeState z(s.q.size());
    for (std::size_t t = 0; t < z.size(); ++t) z[t] = {s.q[t] / kSqrt2, s.p[t] / kSqrt2};
    return z;
}

RealState to_real(const ModeState& z) {
    RealState s;
    s.q.resize(z.size());
    s.p.resize(z.size());
    for (std::size_t t = 0; t < z.size(); ++t) {
        s.q[t] = kSqrt2 * z[t].real();
        s.p[t] = kSqrt2 * z[t].imag();
    }
    return s;
}

RealState from_fields(const FieldPair& f, double m) {
    if (f.u.size() != f.v.size()) throw std::invalid_argument("from_fields: u/v size mismatch");
    RealState s;
    s.q.resize(f.u.size());
    s.p.resize(f.u.size());
    for (std::size_t t = 0; t < f.u.size(); ++t) {
        const double root = std::sqrt(frequency(static_cast<int>(t + 1), m));
        s.q[t] = root * f.u[t];
        s.p[t] = f.v[t] / root;
    }
    return s;
}

FieldPair to_fields(const RealState& s, double m) {
    FieldPair f;
    f.u.resize(s.q.size());
    f.v.resize(s.q.size());
    for (std::size_t t = 0; t < s.q.size(); ++t) {
        const double root = std::sqrt(frequency(static_cast<int>(t + 1), m));
        f.u[t] = s.q[t] / root;
        f.v[t] = s.p[t] * root;
    }
    return f;
}

double g_coeff(int i, int j, double m) {
    const double ci = static_cast<double>(i) * i / frequency(i, m);
    const double cj = static_cast<double>(j) * j / frequency(j, m);
    return ci * cj / (32.0 * kPi);
}

double a_coeff(int i, int j, double m) {
    const double ci = static_cast<double>(i) * i / frequency(i, m);
    const double cj = static_cast<double>(j) * j / frequency(j, m);
    if (i == j) return 3.0 / (16.0 * kPi) * ci * ci;
    return ci * cj / (8.0 * kPi);
}

namespace {
// Q = sum_j (j^2/omega_j) (z_j + conj z_j)^2, the shared scalar of G.
double stretching_sum(const ModeState& z, double m) {
    double q = 0.0;
    for (std::size_t t = 0; t < z.size(); ++t) {
        const int j = static_cast<int>(t + 1);
        const double x = 2.0 * z[t].real();
        q += static_cast<double>(j) * j / frequency(j, m) * x * x;
    }
    return q;
}
}  // namespace

double eval_lambda(const ModeState& z, double m) {
    double acc = 0.0;
    for (std::size_t t = 0; t < z.size(); ++t)
        acc += frequency(static_cast<int>(t + 1), m) * std::norm(z[t]);
    return acc;
}

double eval_G(const ModeState& z, double m) {
    const double q = stretching_sum(z, m);
    return q * q / (32.0 * kPi);
}

double eval_H(const ModeState& z, double m) { return eval_lambda(z, m) + eval_G(z, m); }

ModeState vector_field(const ModeState& z, double m) {
    const double q = stretching_sum(z, m);
    ModeState out(z.size());
    for (std::size_t t = 0; t < z.size(); ++t) {
        const int h = static_cast<int>(t + 1);
        const double om = frequency(h, m);
        const double ch = static_cast<double>(h) * h / om;
        const double x = 2.0 * z[t].real();
        const std::complex<double> val = om * z[t] + ch / (8.0 * kPi) * x * q;
        out[t] = {-val.imag(), val.real()};  // multiply by i
    }
    return out;
}

double energy_of_fields(const FieldPair& f, double m) {
    if (f.u.size() != f.v.size())
        throw std::invalid_argument("energy_of_fields: u/v size mismatch");
    double quad = 0.0, stretch = 0.0;
    for (std::size_t t = 0; t < f.u.size(); ++t) {
        const int j = static_cast<int>(t + 1);
        const double om = frequency(j, m);
        quad += 0.5 * (f.v[t] * f.v[t] + om * om * f.u[t] * f.u[t]);
        stretch += static_cast<double>(j) * j * f.u[t] * f.u[t];
    }
    return quad + stretch * stretch / (8.0 * kPi);
}

double u_h1_norm(const ModeState& z, double m) {
    // |u|_1^2 = 2 sum (j^2/omega_j) (Re z_j)^2
    double acc = 0.0;
    for (std::size_t t = 0; t < z.size(); ++t) {
        const int j = static_cast<int>(t + 1);
        const double re = z[t].real();
        acc += static_cast<double>(j) * j / frequency(j, m) * re * re;
    }
    return std::sqrt(2.0 * acc);
}

double u_sup_bound(const ModeState& z, double m) {
    return std::sqrt(kPi / 3.0) * u_h1_norm(z, m);
}

PairedPolynomial build_lambda_poly(const ModelParams& params) {
    params.validate();
    PairedPolynomial out;
    for (int j = 1; j <= params.n_trunc; ++j) {
        PairedMonomial mono;
        mono.push_pair(j, +1, -1);
        out.add(mono, frequency(j, params.m));
    }
    return out;
}

PairedPolynomial build_G_poly(const ModelParams& params) {
    params.validate();
    PairedPolynomial out;
    const int signs[2] = {+1, -1};
    for (int i = 1; i <= params.n_trunc; ++i) {
        for (int j = 1; j <= params.n_trunc; ++j) {
            const double gij = g_coeff(i, j, params.m);
            for (int a1 : signs)
                for (int b1 : signs)
                    for (int a2 : signs)
                        for (int b2 : signs) {
                            PairedMonomial mono;
                            mono.push_pair(i, a1, b1);
                            mono.push_pair(j, a2, b2);
                            out.add(mono, gij);
                        }
        }
    }
    return out;
}

}  // namespace beambnf
