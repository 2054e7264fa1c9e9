#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "beambnf/hamiltonian.hpp"

using namespace beambnf;

namespace {
constexpr double kPi = 3.14159265358979323846;

ModeState random_state(int n, unsigned seed, double amplitude) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    ModeState z(static_cast<std::size_t>(n));
    for (auto& c : z) c = {amplitude * unif(rng), amplitude * unif(rng)};
    return z;
}
}  // namespace

TEST_CASE("g_coeff and a_coeff tables") {
    CHECK(g_coeff(1, 1, 0.0) == doctest::Approx(1.0 / (32.0 * kPi)));
    CHECK(g_coeff(2, 3, 0.0) == doctest::Approx(1.0 / (32.0 * kPi)));  // m=0 makes j^2/omega_j = 1
    CHECK(g_coeff(1, 1, 1.0) == doctest::Approx(1.0 / (64.0 * kPi)));
    CHECK(a_coeff(1, 1, 0.0) == doctest::Approx(3.0 / (16.0 * kPi)));
    CHECK(a_coeff(1, 2, 0.0) == doctest::Approx(1.0 / (8.0 * kPi)));
    CHECK(a_coeff(1, 1, 1.0) == doctest::Approx(3.0 / (32.0 * kPi)));
    for (int i = 1; i <= 6; ++i)
        for (int j = 1; j <= 6; ++j) {
            CHECK(g_coeff(i, j, -0.25) == g_coeff(j, i, -0.25));
            CHECK(a_coeff(i, j, -0.25) == a_coeff(j, i, -0.25));
            CHECK(g_coeff(i, j, -0.25) > 0.0);
            CHECK(g_coeff(i, j, -0.25) <=
                  frak_c(-0.25) * frak_c(-0.25) / (32.0 * kPi) * (1 + 1e-12));
        }
}

TEST_CASE("eval_H: hand values") {
    ModeState zero(3, {0.0, 0.0});
    CHECK(eval_H(zero, 0.0) == 0.0);

    ModeState e1(3, {0.0, 0.0});
    e1[0] = {1.0, 0.0};  // q_1 = sqrt(2), p_1 = 0
    CHECK(eval_H(e1, 0.0) == doctest::Approx(1.0 + 1.0 / (2.0 * kPi)));

    ModeState i1(3, {0.0, 0.0});
    i1[0] = {0.0, 1.0};  // purely imaginary: G vanishes
    CHECK(eval_H(i1, 0.0) == doctest::Approx(1.0));
    CHECK(eval_G(i1, 0.0) == 0.0);
}

TEST_CASE("G is nonnegative and vanishes on imaginary states") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        ModeState z = random_state(6, 100 + trial, 0.7);
        CHECK(eval_G(z, 0.5) >= 0.0);
        for (auto& c : z) c = {0.0, c.imag()};
        CHECK(eval_G(z, 0.5) == 0.0);
    }
}

TEST_CASE("vector_field matches central finite differences of eval_H") {
    const double h = 1e-6;
    for (int trial = 0; trial < 100; ++trial) {
        const double m = (trial % 2) ? 0.0 : 0.8;
        ModeState z = random_state(6, 500 + trial, 0.5);
        const ModeState x = vector_field(z, m);
        for (std::size_t t = 0; t < z.size(); ++t) {
            ModeState zp = z, zm = z;
            zp[t] += h;
            zm[t] -= h;
            const double dre = (eval_H(zp, m) - eval_H(zm, m)) / (2 * h);
            zp = z;
            zm = z;
            zp[t] += std::complex<double>{0.0, h};
            zm[t] -= std::complex<double>{0.0, h};
            const double dim = (eval_H(zp, m) - eval_H(zm, m)) / (2 * h);
            // X^h = i d/dconj z_h H = (i dRe - dIm) H / 2
            const std::complex<double> expected{-0.5 * dim, 0.5 * dre};
            CHECK(std::abs(x[t] - expected) <= 1e-6 * std::max(1.0, std::abs(expected)));
        }
    }
}

TEST_CASE("vector_field: support invariance and single-mode value") {
    ModeState z(8, {0.0, 0.0});
    z[2] = {0.3, -0.1};
    z[5] = {-0.2, 0.4};
    const ModeState x = vector_field(z, 0.3);
    for (std::size_t t = 0; t < z.size(); ++t)
        if (z[t] == std::complex<double>{0.0, 0.0}) CHECK(x[t] == std::complex<double>{0.0, 0.0});

    ModeState e1(1, {1.0, 0.0});
    const ModeState xe = vector_field(e1, 0.0);
    // i (omega_1 + (1/8pi) c_1 (z+conj z) Q) with Q = 4: i (1 + 1/pi)
    CHECK(xe[0].real() == doctest::Approx(0.0));
    CHECK(xe[0].imag() == doctest::Approx(1.0 + 1.0 / kPi));
}

TEST_CASE("conversions round-trip") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    RealState s;
    for (int t = 0; t < 8; ++t) {
        s.q.push_back(unif(rng));
        s.p.push_back(unif(rng));
    }
    const ModeState z = to_modes(s);
    const RealState back = to_real(z);
    for (std::size_t t = 0; t < s.q.size(); ++t) {
        CHECK(back.q[t] == doctest::Approx(s.q[t]).epsilon(1e-15));
        CHECK(back.p[t] == doctest::Approx(s.p[t]).epsilon(1e-15));
    }
    const FieldPair f = to_fields(s, 0.5);
    const RealState s2 = from_fields(f, 0.5);
    for (std::size_t t = 0; t < s.q.size(); ++t) {
        CHECK(s2.q[t] == doctest::Approx(s.q[t]).epsilon(1e-14));
        CHECK(s2.p[t] == doctest::Approx(s.p[t]).epsilon(1e-14));
    }
}

TEST_CASE("energy_of_fields") {
    FieldPair zero{{0, 0, 0}, {0, 0, 0}};
    CHECK(energy_of_fields(zero, 0.0) == 0.0);

    FieldPair phi1{{1, 0, 0}, {0, 0, 0}};
    CHECK(energy_of_fields(phi1, 0.0) == doctest::Approx(0.5 + 1.0 / (8.0 * kPi)));

    // agreement with eval_H through the coordinate chain, random 8-mode data
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> unif(-0.3, 0.3);
    FieldPair f;
    for (int t = 0; t < 8; ++t) {
        f.u.push_back(unif(rng));
        f.v.push_back(unif(rng));
    }
    const double direct = energy_of_fields(f, 0.5);
    const double via_modes = eval_H(to_modes(from_fields(f, 0.5)), 0.5);
    CHECK(std::fabs(direct - via_modes) <= 1e-12 * std::fabs(direct));
}

TEST_CASE("model polynomials match the closed-form evaluations") {
    ModelParams params{0.0, 6, 1.0, 6};
    const PairedPolynomial G = build_G_poly(params);
    const PairedPolynomial L = build_lambda_poly(params);
    CHECK(G.is_paired());
    CHECK(G.is_real_valued());
    CHECK(G.min_degree() == 4);
    CHECK(G.max_degree() == 4);

    ModeState e1(6, {0.0, 0.0});
    e1[0] = {1.0, 0.0};
    CHECK(evaluate(G, e1).real() == doctest::Approx(1.0 / (2.0 * kPi)));
    CHECK(evaluate(G, e1).imag() == doctest::Approx(0.0));

    for (int trial = 0; trial < 20; ++trial) {
        const ModeState z = random_state(6, 900 + trial, 0.6);
        CHECK(evaluate(G, z).real() == doctest::Approx(eval_G(z, params.m)).epsilon(1e-12));
        CHECK(evaluate(L, z).real() == doctest::Approx(eval_lambda(z, params.m)).epsilon(1e-12));
        CHECK(std::fabs(evaluate(G, z).imag()) <= 1e-14);
    }

    // integrable projection reproduces the a_coeff table:
    // Gbar(z) = sum over ordered pairs A_ij |z_i|^2 |z_j|^2
    const PairedPolynomial Gbar = project_integrable4(G);
    for (int trial = 0; trial < 20; ++trial) {
        const ModeState z = random_state(6, 1900 + trial, 0.6);
        double expected = 0.0;
        for (int i = 1; i <= 6; ++i)
            for (int j = 1; j <= 6; ++j)
                expected += a_coeff(i, j, params.m) * std::norm(z[static_cast<std::size_t>(i - 1)]) *
                            std::norm(z[static_cast<std::size_t>(j - 1)]);
        CHECK(evaluate(Gbar, z).real() == doctest::Approx(expected).epsilon(1e-12));
    }
}
