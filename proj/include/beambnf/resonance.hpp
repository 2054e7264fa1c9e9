#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace beambnf {

/// Small divisors Delta and exhaustive certification of their lower bounds.

// The two conjugation signs attached to one index slot: z_l^a z_l^b with
// a, b in {+1, -1} (+1 = z, -1 = conjugate).
struct SignPair {
    int a = +1;
    int b = +1;
    int sum() const { return a + b; }          // in {-2, 0, 2}
    bool balanced() const { return a + b == 0; }
};

// (si.sum()) omega_i + (sj.sum()) omega_j
double delta4(int i, int j, SignPair si, SignPair sj, double m);
// three-slot version
double delta6(int i, int j, int k, SignPair si, SignPair sj, SignPair sk, double m);

enum class Class4 { I, Ic };
enum class Class6 { Upsilon, UpsilonC };

// Membership in the integrable set: both slots balanced when i != j,
// total sign sum zero when i == j.
Class4 classify4(int i, int j, SignPair si, SignPair sj);

// Decides Delta = 0 structurally: per-index net signs all zero, or m == 0
// with the integer combination sum (net_l) l^2 vanishing (Pythagorean-type
// relations).  Never compares floating-point values against zero.
Class6 classify6(int i, int j, int k, SignPair si, SignPair sj, SignPair sk, double m);

struct CaseRow {
    std::string label;      // canonical case class
    int i = 0, j = 0, k = 0;  // minimizer within the class (k = 0 for order 4)
    double min_abs_delta = 0;
    long long count = 0;    // enumerated members of the class
};

struct CertifyOptions {
    double tol_cert = 1e-9;  // relative slack absorbing sqrt rounding
    bool directed = true;    // recheck the minimizer with outward rounding
    int threads = 1;
};

struct CertifyReport {
    int order = 4;
    double m = 0;
    int i_max = 0;
    double threshold = 0;        // mu(m) or (7/8)|m|
    double min_abs_delta = 0;
    double min_top_decade = 0;   // min over cases with an index > 0.9 i_max
    double ratio_to_threshold = 0;
    CaseRow argmin;
    bool pass = false;
    // outward-rounded recheck of the minimizing case
    double argmin_delta_lower = 0;
    double threshold_upper = 0;
    bool rigorous = false;
    std::vector<CaseRow> case_rows;
};

// Enumerates every |Delta| value over I^c with indices <= i_max using the
// canonical sign classes; pass = min >= mu(m) (1 - tol_cert).
CertifyReport certify_prop_4th(int i_max, double m, const CertifyOptions& opt = {});

// Same over Upsilon^c; requires -1/2 <= m <= 1, m != 0
// ("proposition hypotheses violated" otherwise); threshold (7/8)|m|.
CertifyReport certify_prop_6th(int i_max, double m, const CertifyOptions& opt = {});

// Debug cross-checks: raw enumeration over all sign tuples (no case
// reduction), feasible only for small ranges.
double raw_min_enumeration4(int i_max, double m);
double raw_min_enumeration6(int i_max, double m);

// Triples (c, a, b), c^2 = a^2 + b^2, a >= b, c <= i_max: brute-force integer
// generator, the independent oracle.
std::vector<std::array<int, 3>> pythagorean_triples(int i_max);

// Same set produced by scanning classify6 at m = 0 over the resonant sign
// pattern; must agree with pythagorean_triples exactly.
std::vector<std::array<int, 3>> resonant_triples_at_m0(int i_max);

std::string certify_report_csv(const CertifyReport& rep);

}  // namespace beambnf
