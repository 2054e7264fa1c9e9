#include "beambnf/physical.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "beambnf/bnf.hpp"

namespace beambnf {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kE = 2.71828182845904523536;
// p(x) = a (x - pi/2)^4 + b (x - pi/2)^2 - 1
constexpr double kProfileA = -16.0 / (5.0 * kPi * kPi * kPi * kPi);
constexpr double kProfileB = 24.0 / (5.0 * kPi * kPi);
}  // namespace

void PhysicalBeam::validate() const {
    if (!(E > 0.0) || !(rho > 0.0) || !(L > 0.0))
        throw std::invalid_argument("PhysicalBeam: E, rho, L must be positive");
    if (!(section.A > 0.0) || !(section.I > 0.0))
        throw std::invalid_argument("PhysicalBeam: section A, I must be positive");
}

Nondimensional nondimensionalize(const PhysicalBeam& beam) {
    beam.validate();
    Nondimensional out;
    out.m = beam.L * beam.L * beam.P / (kPi * kPi * beam.E * beam.section.I);
    if (out.m <= -1.0) throw std::domain_error("nondimensionalize: buckling regime, model invalid");
    out.nu = std::sqrt(std::pow(kPi, 4.0) * beam.E * beam.section.I /
                       (std::pow(beam.L, 4.0) * beam.rho * beam.section.A));
    return out;
}

double force_for_m(const PhysicalBeam& beam, double m) {
    beam.validate();
    return m * kPi * kPi * beam.E * beam.section.I / (beam.L * beam.L);
}

double profile_value(double x) {
    const double y = x - kPi / 2.0;
    return kProfileA * y * y * y * y + kProfileB * y * y - 1.0;
}

std::vector<double> profile_coefficients(int n_modes) {
    if (n_modes < 1) throw std::invalid_argument("profile_coefficients: require n_modes >= 1");
    // Integration by parts of polynomial x sine over [0, pi]: the boundary
    // conditions kill the 1/j and 1/j^3 terms, leaving p_j = 48 a sqrt(2/pi)/j^5
    // for odd j and 0 for even j.
    std::vector<double> p(static_cast<std::size_t>(n_modes), 0.0);
    const double lead = 48.0 * kProfileA * std::sqrt(2.0 / kPi);
    for (int j = 1; j <= n_modes; j += 2)
        p[static_cast<std::size_t>(j - 1)] = lead / std::pow(static_cast<double>(j), 5.0);
    return p;
}

double profile_h1_closed_form() {
    // int p'^2 with p' = a (x-pi/2)^3 + b (x-pi/2), a = 4 kProfileA, b = 2 kProfileB
    const double a = 4.0 * kProfileA, b = 2.0 * kProfileB, c = kPi / 2.0;
    const double val = 2.0 * (a * a * std::pow(c, 7.0) / 7.0 + 2.0 * a * b * std::pow(c, 5.0) / 5.0 +
                              b * b * std::pow(c, 3.0) / 3.0);
    return std::sqrt(val);
}

InitialData initial_data_from_profile(double delta, const PhysicalBeam& beam, int n_modes) {
    if (!(delta > 0.0)) throw std::invalid_argument("initial_data_from_profile: require delta > 0");
    beam.validate();
    InitialData out;
    out.amplitude = std::sqrt(beam.section.A / beam.section.I) * delta * beam.L;
    out.fields.u = profile_coefficients(n_modes);
    for (double& c : out.fields.u) c *= out.amplitude;
    out.fields.v.assign(static_cast<std::size_t>(n_modes), 0.0);
    out.eps = sobolev_h_s(out.fields.u, 1.0);
    return out;
}

std::vector<Fig1Result> fig1_table(const std::vector<Fig1Row>& rows, double delta) {
    std::vector<Fig1Result> out;
    out.reserve(rows.size());
    for (const auto& row : rows) {
        PhysicalBeam beam;
        beam.E = row.E;
        beam.rho = row.rho;
        beam.L = row.L;
        beam.section = Section::square(row.h_over_L * row.L);
        beam.P = force_for_m(beam, row.m);

        Fig1Result res;
        res.row = row;
        res.P_kN = beam.P / 1e3;
        res.nu = nondimensionalize(beam).nu;

        const InitialData init = initial_data_from_profile(delta, beam, 64);
        res.eps = init.eps;

        ModelParams params;
        params.m = row.m;
        params.n_trunc = 8;
        params.s = 1.0;
        params.n_weight = 8;
        const StabilityCertificate cert = stability_certificate(init.eps, params);
        if (cert.horizon_6th) {
            res.order = 6;
            res.T_seconds = *cert.horizon_6th / res.nu;
        } else if (cert.horizon_4th) {
            res.order = 4;
            res.T_seconds = *cert.horizon_4th / res.nu;
        } else {
            res.order = 0;
            res.T_seconds = 0.0;
        }

        if (row.has_ref) {
            auto rel = [](double computed, double ref) {
                return ref == 0.0 ? std::fabs(computed) : std::fabs(computed - ref) / std::fabs(ref);
            };
            res.dev_P = rel(res.P_kN, row.ref_P_kN);
            res.dev_nu = rel(res.nu, row.ref_nu);
            res.dev_T = rel(res.T_seconds, row.ref_T);
            res.flagged = res.dev_P > 0.05 || res.dev_nu > 0.05 || res.dev_T > 0.05;
        }
        out.push_back(res);
    }
    return out;
}

std::vector<Fig1Row> fig1_default_rows() {
    // Square section, h/L = 1e-2; reference values from the published
    // material table for comparison.
    return {
        {"Steel", 200e9, 7500, 2.0, 1e-2, 0.0, true, 0.0, 74, 56},
        {"Steel", 200e9, 7500, 2.0, 1e-2, 1.0, true, 6.6, 74, 1556},
        {"Steel", 200e9, 7500, 2.0, 1e-2, -0.5, true, -3.3, 74, 58},
        {"Al 7075", 70e9, 2810, 2.0, 1e-2, 0.0, true, 0.0, 71, 59},
        {"Al 7075", 70e9, 2810, 2.0, 1e-2, 1.0, true, 2.3, 71, 1621},
        {"Al 7075", 70e9, 2810, 2.0, 1e-2, -0.5, true, -1.15, 71, 60},
        {"Al 7075", 70e9, 2810, 1.0, 1e-2, 1.0, true, 0.56, 142, 811},
        {"Rubber", 0.004e9, 1000, 0.1, 1e-2, 0.0, true, 0.0, 18, 232},
        {"Rubber", 0.004e9, 1000, 0.1, 1e-2, 1.0, true, 3e-4, 18, 6396},
        {"Rubber", 0.004e9, 1000, 0.1, 1e-2, -0.5, true, -1.5e-4, 18, 238},
    };
}

std::string fig1_text_table(const std::vector<Fig1Result>& results) {
    std::ostringstream os;
    os << std::left << std::setw(10) << "Material" << std::right << std::setw(12) << "E[GPa]"
       << std::setw(12) << "rho" << std::setw(8) << "L[m]" << std::setw(8) << "m" << std::setw(14)
       << "P[kN]" << std::setw(12) << "nu[1/s]" << std::setw(14) << "T[s]" << std::setw(7)
       << "order" << '\n';
    for (const auto& r : results) {
        os << std::left << std::setw(10) << r.row.material << std::right << std::setw(12)
           << std::setprecision(6) << r.row.E / 1e9 << std::setw(12) << r.row.rho << std::setw(8)
           << r.row.L << std::setw(8) << r.row.m << std::setw(14) << std::setprecision(6)
           << r.P_kN << std::setw(12) << r.nu << std::setw(14) << r.T_seconds << std::setw(7)
           << r.order;
        if (r.row.has_ref && r.flagged) os << "  [deviates >5% from reference]";
        os << '\n';
    }
    return os.str();
}

std::string fig1_csv(const std::vector<Fig1Result>& results) {
    std::ostringstream os;
    os.precision(17);
    os << "material,E,rho,L,m,P_kN,nu,eps,T_seconds,order,dev_P,dev_nu,dev_T,flagged\n";
    for (const auto& r : results) {
        os << r.row.material << ',' << r.row.E << ',' << r.row.rho << ',' << r.row.L << ','
           << r.row.m << ',' << r.P_kN << ',' << r.nu << ',' << r.eps << ',' << r.T_seconds << ','
           << r.order << ',' << r.dev_P << ',' << r.dev_nu << ',' << r.dev_T << ','
           << (r.flagged ? 1 : 0) << '\n';
    }
    return os.str();
}

}  // namespace beambnf
