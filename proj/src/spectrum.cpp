#include "beambnf/spectrum.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace beambnf {

void ModelParams::validate() const {
    if (!(m > -1.0)) throw std::invalid_argument("ModelParams: require m > -1");
    if (n_trunc < 1) throw std::invalid_argument("ModelParams: require n_trunc >= 1");
    if (!(s >= 0.0)) throw std::invalid_argument("ModelParams: require s >= 0");
    if (n_weight < 1 || n_weight > n_trunc)
        throw std::invalid_argument("ModelParams: require 1 <= n_weight <= n_trunc");
}

double frequency(int j, double m) {
    if (j < 1) throw std::domain_error("frequency: mode index must be >= 1");
    const double jd = static_cast<double>(j);
    const double val = jd * jd * (jd * jd + m);
    if (!(val > 0.0))
        throw std::domain_error("frequency: j^4 + m j^2 <= 0 for j=" + std::to_string(j));
    return std::sqrt(val);
}

double mu(double m) {
    if (m < -0.5) throw std::domain_error("mu: require m >= -1/2");
    return std::min(2.0 * std::sqrt(1.0 + m), 1.5 * std::sqrt(4.0 + m));
}

double frak_c(double m) {
    if (m < -0.5) throw std::domain_error("frak_c: require m >= -1/2");
    if (m >= 0.0) return 1.0;
    return 1.0 / std::sqrt(1.0 + m);
}

WeightSequence WeightSequence::w0(int n, double m) {
    WeightSequence w;
    w.kind = WeightKind::w0;
    w.values.resize(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j)
        w.values[static_cast<std::size_t>(j - 1)] = j / std::sqrt(frequency(j, m));
    return w;
}

WeightSequence WeightSequence::wsN(int n, double m, double s, int n_weight) {
    if (n_weight < 1 || n_weight > n)
        throw std::invalid_argument("WeightSequence::wsN: require 1 <= n_weight <= n");
    WeightSequence w;
    w.kind = WeightKind::wsN;
    w.values.resize(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const double root = std::sqrt(frequency(j, m));
        w.values[static_cast<std::size_t>(j - 1)] =
            (j <= n_weight) ? j / root : std::pow(j, s + 2.0) / root;
    }
    return w;
}

WeightSequence WeightSequence::custom(std::vector<double> v) {
    for (double x : v)
        if (!(x > 0.0)) throw std::invalid_argument("WeightSequence: weights must be positive");
    WeightSequence w;
    w.kind = WeightKind::custom;
    w.values = std::move(v);
    return w;
}

double weighted_norm(const ModeState& z, const WeightSequence& w) {
    if (z.size() != w.values.size())
        throw std::invalid_argument("weighted_norm: dimension mismatch");
    double acc = 0.0;
    for (std::size_t t = 0; t < z.size(); ++t) acc += w.values[t] * w.values[t] * std::norm(z[t]);
    return std::sqrt(acc);
}

double sobolev_h_s(const std::vector<double>& u, double s) {
    double acc = 0.0;
    for (std::size_t t = 0; t < u.size(); ++t) {
        const double j = static_cast<double>(t + 1);
        acc += std::pow(j, 2.0 * s) * u[t] * u[t];
    }
    return std::sqrt(acc);
}

SobolevNorms sobolev_norms(const std::vector<double>& u, double s, int N, double m) {
    SobolevNorms out{0, 0, 0, 0};
    double h1 = 0, hsN = 0, tm1 = 0, tsN = 0;
    for (std::size_t t = 0; t < u.size(); ++t) {
        const int j = static_cast<int>(t + 1);
        const double jd = static_cast<double>(j);
        const double u2 = u[t] * u[t];
        const double om = frequency(j, m);
        h1 += jd * jd * u2;
        tm1 += jd * jd / (om * om) * u2;
        if (j <= N) {
            hsN += jd * jd * u2;
            tsN += jd * jd / (om * om) * u2;
        } else {
            hsN += std::pow(jd, 2.0 * s) * u2;
            tsN += std::pow(jd, 2.0 * s + 4.0) / (om * om) * u2;
        }
    }
    out.h1 = std::sqrt(h1);
    out.hsN = std::sqrt(hsN);
    out.tilde_hm1 = std::sqrt(tm1);
    out.tilde_hsN = std::sqrt(tsN);
    return out;
}

namespace {

// H^s mass per mode, j^{2s} u_j^2.
double hs_mass(const std::vector<double>& u, double s, std::size_t t) {
    const double j = static_cast<double>(t + 1);
    return std::pow(j, 2.0 * s) * u[t] * u[t];
}

}  // namespace

int choose_truncation(const std::vector<double>& u, double s, double delta) {
    if (!(delta > 0.0)) throw std::invalid_argument("choose_truncation: require delta > 0");
    if (u.empty()) throw std::invalid_argument("choose_truncation: empty coefficient vector");

    std::size_t d = u.size();  // index of last nonzero coefficient
    while (d > 0 && u[d - 1] == 0.0) --d;
    if (d == 0) return 1;  // zero function

    // Tail beyond the data.  Trailing zeros declare an exact trigonometric
    // polynomial; otherwise we demand geometric decay of the H^s mass over
    // the last decade and extend it into a certified tail bound.
    double tail_beyond_data = 0.0;
    if (d == u.size() && d >= 2) {
        const std::size_t decade = std::max<std::size_t>(1, d / 10);
        double top = 0.0, prev = 0.0;
        for (std::size_t t = d - decade; t < d; ++t) top += hs_mass(u, s, t);
        for (std::size_t t = (d >= 2 * decade ? d - 2 * decade : 0); t < d - decade; ++t)
            prev += hs_mass(u, s, t);
        const double rho = (prev > 0.0) ? top / prev : 1.0;
        if (!(rho <= 0.5))
            throw std::runtime_error("choose_truncation: insufficient tail decay");
        tail_beyond_data = top * rho / (1.0 - rho);
    }

    double h1_sq = 0.0;
    for (std::size_t t = 0; t < d; ++t) {
        const double j = static_cast<double>(t + 1);
        h1_sq += j * j * u[t] * u[t];
    }
    const double target = (1.0 + delta) * (1.0 + delta) * h1_sq;

    // |u|_{H^s_N}^2 is non-increasing in N for s >= 1, so the first N that
    // satisfies the bound is the minimizer.
    for (int N = 1; N <= static_cast<int>(d); ++N) {
        double hsN_sq = tail_beyond_data;
        for (std::size_t t = 0; t < d; ++t) {
            const int j = static_cast<int>(t + 1);
            const double jd = static_cast<double>(j);
            hsN_sq += (j <= N) ? jd * jd * u[t] * u[t] : std::pow(jd, 2.0 * s) * u[t] * u[t];
        }
        if (hsN_sq <= target) return N;
    }
    throw std::runtime_error("choose_truncation: insufficient tail decay");
}

double sup_norm_bound(const std::vector<double>& u) {
    constexpr double pi = 3.14159265358979323846;
    return std::sqrt(pi / 3.0) * sobolev_h_s(u, 1.0);
}

double cs_squared_upper(double s, int terms) {
    if (!(s > 0.5)) throw std::domain_error("cs_squared_upper: require s > 1/2");
    if (terms < 1) throw std::invalid_argument("cs_squared_upper: require terms >= 1");
    constexpr double pi = 3.14159265358979323846;
    double partial = 0.0;
    for (int j = 1; j <= terms; ++j) partial += std::pow(j, -2.0 * s);
    // sum_{j > J} j^{-2s} <= J^{1-2s} / (2s - 1)
    const double tail = std::pow(static_cast<double>(terms), 1.0 - 2.0 * s) / (2.0 * s - 1.0);
    return (2.0 / pi) * (partial + tail);
}

double c1_squared_partial(int J) {
    constexpr double pi = 3.14159265358979323846;
    double partial = 0.0;
    for (int j = 1; j <= J; ++j) partial += 1.0 / (static_cast<double>(j) * j);
    return (2.0 / pi) * partial;
}

}  // namespace beambnf
