#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "beambnf/resonance.hpp"
#include "beambnf/spectrum.hpp"

using namespace beambnf;

namespace {
const SignPair kPP{+1, +1};
const SignPair kMM{-1, -1};
const SignPair kPM{+1, -1};
}  // namespace

TEST_CASE("delta4: direct values") {
    CHECK(delta4(1, 1, kPM, kPM, 0.7) == 0.0);
    CHECK(delta4(2, 1, kPP, kPP, 0.0) == doctest::Approx(10.0));   // 2(omega_2 + omega_1)
    CHECK(delta4(2, 1, kPP, kMM, 0.0) == doctest::Approx(6.0));    // 2(omega_2 - omega_1)
}

TEST_CASE("delta6: direct values") {
    // Pythagorean relation 5^2 = 4^2 + 3^2 at m = 0
    CHECK(delta6(5, 4, 3, kPP, kMM, kMM, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(delta6(1, 1, 1, kPM, kPP, kMM, 0.3) == doctest::Approx(0.0));
    const double v = delta6(5, 4, 3, kPP, kMM, kMM, 1.0);
    CHECK(v == doctest::Approx(2.0 * (std::sqrt(650.0) - std::sqrt(272.0) - std::sqrt(90.0))));
    CHECK(v == doctest::Approx(-0.9683).epsilon(1e-4));
}

TEST_CASE("delta antisymmetry under global sign flip") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> idx(1, 40);
    std::uniform_int_distribution<int> sgn(0, 1);
    auto flip = [](SignPair s) { return SignPair{-s.a, -s.b}; };
    for (int trial = 0; trial < 200; ++trial) {
        const int i = idx(rng), j = idx(rng), k = idx(rng);
        const SignPair si{sgn(rng) ? 1 : -1, sgn(rng) ? 1 : -1};
        const SignPair sj{sgn(rng) ? 1 : -1, sgn(rng) ? 1 : -1};
        const SignPair sk{sgn(rng) ? 1 : -1, sgn(rng) ? 1 : -1};
        CHECK(delta4(i, j, flip(si), flip(sj), 0.5) == doctest::Approx(-delta4(i, j, si, sj, 0.5)));
        CHECK(delta6(i, j, k, flip(si), flip(sj), flip(sk), 0.5) ==
              doctest::Approx(-delta6(i, j, k, si, sj, sk, 0.5)));
    }
}

TEST_CASE("classify4") {
    CHECK(classify4(3, 3, kPM, SignPair{-1, +1}) == Class4::I);
    CHECK(classify4(2, 1, kPP, kMM) == Class4::Ic);
    CHECK(classify4(2, 1, kPM, kPM) == Class4::I);
    CHECK(classify4(2, 1, kPM, kPP) == Class4::Ic);
    // members of I have exactly vanishing divisor
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> idx(1, 30);
    std::uniform_int_distribution<int> sgn(0, 1);
    for (int trial = 0; trial < 500; ++trial) {
        const int i = idx(rng), j = idx(rng);
        const SignPair si{sgn(rng) ? 1 : -1, sgn(rng) ? 1 : -1};
        const SignPair sj{sgn(rng) ? 1 : -1, sgn(rng) ? 1 : -1};
        if (classify4(i, j, si, sj) == Class4::I)
            CHECK(delta4(i, j, si, sj, 0.77) == 0.0);
    }
}

TEST_CASE("classify6: structural decisions") {
    // Pythagorean pattern resonant exactly at m = 0
    CHECK(classify6(3, 4, 5, kPP, kPP, kMM, 0.0) == Class6::Upsilon);
    CHECK(classify6(3, 4, 5, kPP, kPP, kMM, 0.5) == Class6::UpsilonC);
    // balanced patterns resonant for every m
    CHECK(classify6(2, 2, 9, kPP, kMM, kPM, 0.5) == Class6::Upsilon);
    CHECK(classify6(7, 7, 7, kPM, kPP, kMM, -0.3) == Class6::Upsilon);
    // non-Pythagorean integer combination at m = 0
    CHECK(classify6(2, 3, 4, kPP, kPP, kMM, 0.0) == Class6::UpsilonC);
}

TEST_CASE("certify 4th order: small range equals raw enumeration") {
    for (double m : {-0.5, 0.0, 1.0}) {
        const auto rep = certify_prop_4th(25, m);
        CHECK(rep.min_abs_delta == doctest::Approx(raw_min_enumeration4(25, m)).epsilon(1e-14));
    }
}

TEST_CASE("certify 6th order: small range equals raw enumeration") {
    for (double m : {-0.5, 0.3, 1.0}) {
        const auto rep = certify_prop_6th(12, m);
        CHECK(rep.min_abs_delta == doctest::Approx(raw_min_enumeration6(12, m)).epsilon(1e-14));
    }
}

TEST_CASE("certify 4th order passes at moderate range") {
    for (double m : {-0.5, 0.0, 1.0}) {
        const auto rep = certify_prop_4th(400, m);
        CHECK(rep.pass);
        CHECK(rep.min_abs_delta >= mu(m) * (1 - 1e-9));
        CHECK(rep.min_top_decade >= rep.min_abs_delta);
        CHECK(rep.rigorous);
    }
    // at m = 0 the bound is attained: min = 2 omega_1 = mu
    const auto rep0 = certify_prop_4th(400, 0.0);
    CHECK(rep0.min_abs_delta == doctest::Approx(2.0));
}

TEST_CASE("certify 6th order passes at moderate range and rejects bad m") {
    for (double m : {-0.5, 0.5, 1.0}) {
        const auto rep = certify_prop_6th(60, m);
        CHECK(rep.pass);
        CHECK(rep.min_abs_delta >= 7.0 / 8.0 * std::fabs(m) * (1 - 1e-9));
        CHECK(rep.ratio_to_threshold >= 1.0);
        CHECK(rep.rigorous);
    }
    CHECK_THROWS_AS(certify_prop_6th(60, 0.0), std::domain_error);
    CHECK_THROWS_AS(certify_prop_6th(60, 1.5), std::domain_error);
    CHECK_THROWS_AS(certify_prop_6th(60, -0.7), std::domain_error);
}

TEST_CASE("certify 6th order: threads agree with single-threaded run") {
    CertifyOptions opt;
    opt.threads = 4;
    const auto par = certify_prop_6th(50, 1.0, opt);
    const auto seq = certify_prop_6th(50, 1.0);
    CHECK(par.min_abs_delta == seq.min_abs_delta);
    CHECK(par.argmin.i == seq.argmin.i);
    CHECK(par.argmin.j == seq.argmin.j);
    CHECK(par.argmin.k == seq.argmin.k);
}

TEST_CASE("near-Pythagorean triples dominate the sixth-order minimum at m=1") {
    const auto rep = certify_prop_6th(80, 1.0);
    CHECK(rep.argmin.i == 3);
    CHECK(rep.argmin.j == 4);
    CHECK(rep.argmin.k == 5);
    CHECK(rep.min_abs_delta == doctest::Approx(0.968316).epsilon(1e-5));
}

TEST_CASE("Pythagorean triple generator vs classify6 scan") {
    const auto gen = pythagorean_triples(100);
    const auto scan = resonant_triples_at_m0(100);
    REQUIRE(gen.size() == scan.size());
    CHECK(gen == scan);
    // (5,4,3) is the smallest
    REQUIRE(!gen.empty());
    CHECK(gen.front() == std::array<int, 3>{5, 4, 3});
    for (const auto& t : gen) {
        CHECK(static_cast<long long>(t[0]) * t[0] ==
              static_cast<long long>(t[1]) * t[1] + static_cast<long long>(t[2]) * t[2]);
        CHECK(std::fabs(delta6(t[2], t[1], t[0], kPP, kPP, kMM, 0.0)) <= 1e-9);
    }
}

TEST_CASE("report CSV has one row per canonical class") {
    const auto rep4 = certify_prop_4th(50, 0.5);
    const std::string csv4 = certify_report_csv(rep4);
    CHECK(std::count(csv4.begin(), csv4.end(), '\n') == 4);  // header + 3 classes
    const auto rep6 = certify_prop_6th(20, 0.5);
    const std::string csv6 = certify_report_csv(rep6);
    CHECK(std::count(csv6.begin(), csv6.end(), '\n') == 8);  // header + 7 classes
}
