#include "beambnf/resonance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "beambnf/spectrum.hpp"

namespace beambnf {

double delta4(int i, int j, SignPair si, SignPair sj, double m) {
    return si.sum() * frequency(i, m) + sj.sum() * frequency(j, m);
}

double delta6(int i, int j, int k, SignPair si, SignPair sj, SignPair sk, double m) {
    return si.sum() * frequency(i, m) + sj.sum() * frequency(j, m) + sk.sum() * frequency(k, m);
}

Class4 classify4(int i, int j, SignPair si, SignPair sj) {
    if (i != j) return (si.balanced() && sj.balanced()) ? Class4::I : Class4::Ic;
    return (si.sum() + sj.sum() == 0) ? Class4::I : Class4::Ic;
}

Class6 classify6(int i, int j, int k, SignPair si, SignPair sj, SignPair sk, double m) {
    // Net integer coefficient per distinct index value.
    struct Net { long long idx; long long c; };
    Net nets[3] = {{i, si.sum()}, {j, sj.sum()}, {k, sk.sum()}};
    long long merged_c[3] = {0, 0, 0};
    long long merged_idx[3] = {0, 0, 0};
    int n = 0;
    for (const auto& e : nets) {
        bool found = false;
        for (int t = 0; t < n; ++t)
            if (merged_idx[t] == e.idx) {
                merged_c[t] += e.c;
                found = true;
                break;
            }
        if (!found) {
            merged_idx[n] = e.idx;
            merged_c[n] = e.c;
            ++n;
        }
    }
    bool all_zero = true;
    long long combo = 0;  // sum c_l l^2, exact
    for (int t = 0; t < n; ++t) {
        if (merged_c[t] != 0) all_zero = false;
        combo += merged_c[t] * merged_idx[t] * merged_idx[t];
    }
    if (all_zero) return Class6::Upsilon;
    if (m == 0.0 && combo == 0) return Class6::Upsilon;  // omega_j = j^2 exactly
    return Class6::UpsilonC;
}

namespace {

// Minimal outward-rounded interval for the rigorous recheck of a minimizer.
// Every operation widens the result by one ulp on each side, which dominates
// the 1/2-ulp error of correctly rounded double arithmetic.
struct Interval {
    double lo, hi;
    static Interval point(double x) { return {x, x}; }
    static double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
    static double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
    Interval operator+(const Interval& o) const { return {down(lo + o.lo), up(hi + o.hi)}; }
    Interval operator-(const Interval& o) const { return {down(lo - o.hi), up(hi - o.lo)}; }
    Interval operator*(double c) const {
        return c >= 0 ? Interval{down(lo * c), up(hi * c)} : Interval{down(hi * c), up(lo * c)};
    }
    static Interval sqrt(const Interval& x) {
        return {down(std::sqrt(std::max(0.0, x.lo))), up(std::sqrt(x.hi))};
    }
    Interval abs() const {
        if (lo >= 0) return *this;
        if (hi <= 0) return {-hi, -lo};
        return {0.0, std::max(-lo, hi)};
    }
};

Interval omega_interval(int j, double m) {
    const double jd = static_cast<double>(j);
    const Interval j2 = Interval::point(jd * jd);  // exact for j <= 2^26
    const Interval inner = j2 * (jd * jd) + Interval::point(m) * (jd * jd);
    return Interval::sqrt(inner);
}

Interval mu_interval(double m) {
    const Interval a = Interval::sqrt(Interval::point(1.0 + m)) * 2.0;
    const Interval b = Interval::sqrt(Interval::point(4.0 + m)) * 1.5;
    return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}

struct MinTracker {
    double value = std::numeric_limits<double>::infinity();
    CaseRow row;
    void offer(double v, const std::string& label, int i, int j, int k) {
        if (v < value) {
            value = v;
            row = {label, i, j, k, v, 0};
        }
    }
};

}  // namespace

CertifyReport certify_prop_4th(int i_max, double m, const CertifyOptions& opt) {
    if (i_max < 2) throw std::invalid_argument("certify_prop_4th: require i_max >= 2");
    if (m < -0.5) throw std::domain_error("certify_prop_4th: require m >= -1/2");

    std::vector<double> omega(static_cast<std::size_t>(i_max) + 1, 0.0);
    for (int j = 1; j <= i_max; ++j) omega[static_cast<std::size_t>(j)] = frequency(j, m);
    const int decade = std::max(1, i_max - i_max / 10);

    // Canonical case classes over i >= j (values are symmetric under i <-> j):
    //   one balanced slot  -> 2 omega_i
    //   opposite full slots-> 2 (omega_i - omega_j), i > j
    //   equal full slots   -> 2 (omega_i + omega_j), and 4 omega_i on the diagonal
    MinTracker global, top;
    CaseRow row1{"2|omega_i|", 0, 0, 0, std::numeric_limits<double>::infinity(), 0};
    CaseRow row2{"2|omega_i - omega_j|", 0, 0, 0, std::numeric_limits<double>::infinity(), 0};
    CaseRow row3{"2(omega_i + omega_j)", 0, 0, 0, std::numeric_limits<double>::infinity(), 0};

    auto offer_row = [](CaseRow& row, double v, int i, int j) {
        ++row.count;
        if (v < row.min_abs_delta) {
            row.min_abs_delta = v;
            row.i = i;
            row.j = j;
        }
    };

    for (int i = 1; i <= i_max; ++i) {
        const double v1 = 2.0 * omega[static_cast<std::size_t>(i)];
        offer_row(row1, v1, i, 1);
        global.offer(v1, row1.label, i, 1, 0);
        if (i >= decade) top.offer(v1, row1.label, i, 1, 0);
        for (int j = 1; j <= i; ++j) {
            const double sum = 2.0 * (omega[static_cast<std::size_t>(i)] + omega[static_cast<std::size_t>(j)]);
            offer_row(row3, sum, i, j);
            global.offer(sum, row3.label, i, j, 0);
            if (i >= decade) top.offer(sum, row3.label, i, j, 0);
            if (j < i) {
                const double diff = 2.0 * (omega[static_cast<std::size_t>(i)] - omega[static_cast<std::size_t>(j)]);
                offer_row(row2, diff, i, j);
                global.offer(diff, row2.label, i, j, 0);
                if (i >= decade) top.offer(diff, row2.label, i, j, 0);
            }
        }
    }

    CertifyReport rep;
    rep.order = 4;
    rep.m = m;
    rep.i_max = i_max;
    rep.threshold = mu(m);
    rep.min_abs_delta = global.value;
    rep.min_top_decade = top.value;
    rep.ratio_to_threshold = global.value / rep.threshold;
    rep.argmin = global.row;
    rep.pass = global.value >= rep.threshold * (1.0 - opt.tol_cert);
    rep.case_rows = {row1, row2, row3};

    if (opt.directed) {
        const auto& a = rep.argmin;
        Interval d{0, 0};
        if (a.label == row1.label)
            d = omega_interval(a.i, m) * 2.0;
        else if (a.label == row2.label)
            d = (omega_interval(a.i, m) - omega_interval(a.j, m)) * 2.0;
        else
            d = (omega_interval(a.i, m) + omega_interval(a.j, m)) * 2.0;
        rep.argmin_delta_lower = d.abs().lo;
        rep.threshold_upper = mu_interval(m).hi;
        // Rigorous version of the slacked pass condition: a certified lower
        // bound of |Delta| against a certified upper bound of the threshold.
        rep.rigorous = rep.argmin_delta_lower >= rep.threshold_upper * (1.0 - opt.tol_cert);
    }
    return rep;
}

CertifyReport certify_prop_6th(int i_max, double m, const CertifyOptions& opt) {
    if (m == 0.0 || m < -0.5 || m > 1.0)
        throw std::domain_error("certify_prop_6th: proposition hypotheses violated (need -1/2 <= m <= 1, m != 0)");
    if (i_max < 2) throw std::invalid_argument("certify_prop_6th: require i_max >= 2");

    std::vector<double> omega(static_cast<std::size_t>(i_max) + 1, 0.0);
    for (int j = 1; j <= i_max; ++j) omega[static_cast<std::size_t>(j)] = frequency(j, m);
    const int decade = std::max(1, i_max - i_max / 10);

    // The seven canonical case classes of the sixth-order divisor; merged
    // equal indices are carried by the closed (<=) index constraints.
    std::vector<CaseRow> rows = {
        {"2(omega_i + omega_j + omega_k)", 0, 0, 0, std::numeric_limits<double>::infinity(), 0},
        {"2|omega_i - omega_j + omega_k|", 0, 0, 0, std::numeric_limits<double>::infinity(), 0},
        {"2|omega_i + omega_j - omega_k|", 0, 0, 0, std::numeric_limits<double>::infinity(), 0},
        {"2|omega_i - omega_j - omega_k|", 0, 0, 0, std::numeric_limits<double>::infinity(), 0},
        {"2(omega_i + omega_j)", 0, 0, 0, std::numeric_limits<double>::infinity(), 0},
        {"2|omega_i - omega_j|", 0, 0, 0, std::numeric_limits<double>::infinity(), 0},
        {"2|omega_i|", 0, 0, 0, std::numeric_limits<double>::infinity(), 0},
    };

    struct Best {
        double value = std::numeric_limits<double>::infinity();
        int cls = 0, i = 0, j = 0, k = 0;
    };

    const int n_threads = std::max(1, opt.threads);
    std::vector<Best> best_global(static_cast<std::size_t>(n_threads));
    std::vector<Best> best_top(static_cast<std::size_t>(n_threads));
    std::vector<std::vector<CaseRow>> rows_per(static_cast<std::size_t>(n_threads), rows);

    auto worker = [&](int tid) {
        Best& g = best_global[static_cast<std::size_t>(tid)];
        Best& t = best_top[static_cast<std::size_t>(tid)];
        auto& rw = rows_per[static_cast<std::size_t>(tid)];
        auto offer = [&](int cls, double v, int i, int j, int k) {
            if (v == 0.0) return;  // resonant member, not in the complement
            CaseRow& row = rw[static_cast<std::size_t>(cls)];
            ++row.count;
            if (v < row.min_abs_delta) {
                row.min_abs_delta = v;
                row.i = i;
                row.j = j;
                row.k = k;
            }
            if (v < g.value) g = {v, cls, i, j, k};
            if (std::max({i, j, k}) >= decade && v < t.value) t = {v, cls, i, j, k};
        };
        for (int i = 1 + tid; i <= i_max; i += n_threads) {
            const double oi = omega[static_cast<std::size_t>(i)];
            for (int j = i; j <= i_max; ++j) {
                const double oj = omega[static_cast<std::size_t>(j)];
                for (int k = j; k <= i_max; ++k) {
                    const double ok = omega[static_cast<std::size_t>(k)];
                    offer(0, 2.0 * (oi + oj + ok), i, j, k);
                    if (i < j && j < k) offer(1, 2.0 * std::fabs(oi - oj + ok), i, j, k);
                    if (j < k) offer(2, 2.0 * std::fabs(oi + oj - ok), i, j, k);
                    if (i < j) offer(3, 2.0 * std::fabs(oi - oj - ok), i, j, k);
                }
            }
        }
        if (tid == 0) {
            for (int i = 1; i <= i_max; ++i) {
                const double oi = omega[static_cast<std::size_t>(i)];
                offer(6, 2.0 * oi, i, 0, 0);
                for (int j = i; j <= i_max; ++j) {
                    const double oj = omega[static_cast<std::size_t>(j)];
                    offer(4, 2.0 * (oi + oj), i, j, 0);
                    if (i < j) offer(5, 2.0 * (oj - oi), i, j, 0);
                }
            }
        }
    };

    if (n_threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(n_threads));
        for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker, t);
        for (auto& th : pool) th.join();
    }

    // Deterministic reduction: by value, ties broken lexicographically.
    auto reduce = [](const std::vector<Best>& parts) {
        Best out;
        for (const auto& b : parts) {
            if (b.value < out.value ||
                (b.value == out.value && std::array{b.cls, b.i, b.j, b.k} <
                                             std::array{out.cls, out.i, out.j, out.k}))
                out = b;
        }
        return out;
    };
    const Best g = reduce(best_global);
    const Best t = reduce(best_top);
    for (std::size_t c = 0; c < rows.size(); ++c) {
        for (const auto& rp : rows_per) {
            rows[c].count += rp[c].count;
            if (rp[c].min_abs_delta < rows[c].min_abs_delta) {
                rows[c].min_abs_delta = rp[c].min_abs_delta;
                rows[c].i = rp[c].i;
                rows[c].j = rp[c].j;
                rows[c].k = rp[c].k;
            }
        }
    }

    CertifyReport rep;
    rep.order = 6;
    rep.m = m;
    rep.i_max = i_max;
    rep.threshold = 7.0 / 8.0 * std::fabs(m);
    rep.min_abs_delta = g.value;
    rep.min_top_decade = t.value;
    rep.ratio_to_threshold = g.value / rep.threshold;
    rep.argmin = {rows[static_cast<std::size_t>(g.cls)].label, g.i, g.j, g.k, g.value, 0};
    rep.pass = g.value >= rep.threshold * (1.0 - opt.tol_cert);
    rep.case_rows = rows;

    if (opt.directed) {
        Interval oi = g.i ? omega_interval(g.i, m) : Interval::point(0.0);
        Interval oj = g.j ? omega_interval(g.j, m) : Interval::point(0.0);
        Interval ok = g.k ? omega_interval(g.k, m) : Interval::point(0.0);
        Interval d{0, 0};
        switch (g.cls) {
            case 0: d = (oi + oj + ok) * 2.0; break;
            case 1: d = (oi - oj + ok) * 2.0; break;
            case 2: d = (oi + oj - ok) * 2.0; break;
            case 3: d = (oi - oj - ok) * 2.0; break;
            case 4: d = (oi + oj) * 2.0; break;
            case 5: d = (oi - oj) * 2.0; break;
            default: d = oi * 2.0; break;
        }
        rep.argmin_delta_lower = d.abs().lo;
        // 0.875 is exact in binary, so one outward step covers the product.
        rep.threshold_upper = Interval::up(0.875 * std::fabs(m));
        rep.rigorous = rep.argmin_delta_lower >= rep.threshold_upper * (1.0 - opt.tol_cert);
    }
    return rep;
}

double raw_min_enumeration4(int i_max, double m) {
    double best = std::numeric_limits<double>::infinity();
    const int signs[2] = {+1, -1};
    for (int i = 1; i <= i_max; ++i)
        for (int j = 1; j <= i_max; ++j)
            for (int a1 : signs)
                for (int b1 : signs)
                    for (int a2 : signs)
                        for (int b2 : signs) {
                            const SignPair si{a1, b1}, sj{a2, b2};
                            if (classify4(i, j, si, sj) == Class4::I) continue;
                            best = std::min(best, std::fabs(delta4(i, j, si, sj, m)));
                        }
    return best;
}

double raw_min_enumeration6(int i_max, double m) {
    double best = std::numeric_limits<double>::infinity();
    const int signs[2] = {+1, -1};
    for (int i = 1; i <= i_max; ++i)
        for (int j = 1; j <= i_max; ++j)
            for (int k = 1; k <= i_max; ++k)
                for (int a1 : signs)
                    for (int b1 : signs)
                        for (int a2 : signs)
                            for (int b2 : signs)
                                for (int a3 : signs)
                                    for (int b3 : signs) {
                                        const SignPair si{a1, b1}, sj{a2, b2}, sk{a3, b3};
                                        if (classify6(i, j, k, si, sj, sk, m) == Class6::Upsilon)
                                            continue;
                                        best = std::min(
                                            best, std::fabs(delta6(i, j, k, si, sj, sk, m)));
                                    }
    return best;
}

std::vector<std::array<int, 3>> pythagorean_triples(int i_max) {
    std::vector<std::array<int, 3>> out;
    for (int c = 2; c <= i_max; ++c)
        for (int b = 1; b < c; ++b) {
            const long long a2 = static_cast<long long>(c) * c - static_cast<long long>(b) * b;
            const int a = static_cast<int>(std::llround(std::sqrt(static_cast<double>(a2))));
            if (static_cast<long long>(a) * a == a2 && a >= 1 && a <= b)
                out.push_back({c, b, a});
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::array<int, 3>> resonant_triples_at_m0(int i_max) {
    std::vector<std::array<int, 3>> out;
    const SignPair plus{+1, +1}, minus{-1, -1};
    for (int k = 2; k <= i_max; ++k)
        for (int j = 1; j < k; ++j)
            for (int i = 1; i <= j; ++i)
                if (classify6(i, j, k, plus, plus, minus, 0.0) == Class6::Upsilon)
                    out.push_back({k, j, i});
    std::sort(out.begin(), out.end());
    return out;
}

std::string certify_report_csv(const CertifyReport& rep) {
    std::ostringstream os;
    os << "class,i,j,k,min_abs_delta,count\n";
    os.precision(17);
    for (const auto& row : rep.case_rows) {
        os << '"' << row.label << '"' << ',' << row.i << ',' << row.j << ',' << row.k << ','
           << row.min_abs_delta << ',' << row.count << '\n';
    }
    return os.str();
}

}  // namespace beambnf
