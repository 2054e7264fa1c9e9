#pragma once

#include <string>
#include <vector>

#include "beambnf/hamiltonian.hpp"

namespace beambnf {

/// Dimensional beam parameters, the conversion to the dimensionless model
/// and the stability-time table for physical materials.

struct Section {
    double A = 0;  // cross-section area [m^2]
    double I = 0;  // second moment of area [m^4]
    static Section square(double h) { return {h * h, h * h * h * h / 12.0}; }
};

struct PhysicalBeam {
    double E = 0;    // Young modulus [N m^-2]
    double rho = 0;  // density [kg m^-3]
    double L = 0;    // length [m]
    Section section;
    double P = 0;    // axial force [N], negative = compression

    void validate() const;
};

struct Nondimensional {
    double m;   // L^2 P / (pi^2 E I)
    double nu;  // sqrt(pi^4 E I / (L^4 rho A)) [1/s]; dimensionless time t = nu tau
};

// Throws "buckling regime, model invalid" when m <= -1.
Nondimensional nondimensionalize(const PhysicalBeam& beam);

// P = m pi^2 E I / L^2 (beam.P is ignored).
double force_for_m(const PhysicalBeam& beam, double m);

// Built-in initial shape: the minimal-degree even polynomial satisfying the
// hinged boundary conditions with max |p| = 1,
//   p(x) = -16/(5 pi^4) (x-pi/2)^4 + 24/(5 pi^2) (x-pi/2)^2 - 1.
double profile_value(double x);
// Sine coefficients of p: p_j = 48 a sqrt(2/pi) / j^5 for odd j (a = -16/(5 pi^4)),
// zero for even j.  Exact integration of polynomial x sine.
std::vector<double> profile_coefficients(int n_modes);
// |p|_1 from the closed-form integral of p'^2.
double profile_h1_closed_form();

struct InitialData {
    FieldPair fields;        // u0 coefficients, v0 = 0
    double eps = 0;          // |u0|_1
    double amplitude = 0;    // sqrt(A/I) delta L, the u-space scale of the profile
};

// u0(x) = sqrt(A/I) delta L p(x) expanded over n_modes sine modes.
InitialData initial_data_from_profile(double delta, const PhysicalBeam& beam, int n_modes);

struct Fig1Row {
    std::string material;
    double E = 0, rho = 0, L = 0;
    double h_over_L = 1e-2;
    double m = 0;
    // reference values for comparison (optional)
    bool has_ref = false;
    double ref_P_kN = 0, ref_nu = 0, ref_T = 0;
};

struct Fig1Result {
    Fig1Row row;
    double P_kN = 0, nu = 0, eps = 0, T_seconds = 0;
    int order = 4;  // stability order used for T (4 or 6)
    double dev_P = 0, dev_nu = 0, dev_T = 0;  // relative deviations vs reference
    bool flagged = false;                     // any deviation beyond 5%
};

// Recomputes each row from first principles: P from m, nu, eps from the
// profile at the given delta, and the stability time T = horizon / nu.
std::vector<Fig1Result> fig1_table(const std::vector<Fig1Row>& rows, double delta);

// The ten built-in material rows with their reference values.
std::vector<Fig1Row> fig1_default_rows();

std::string fig1_text_table(const std::vector<Fig1Result>& results);
std::string fig1_csv(const std::vector<Fig1Result>& results);

}  // namespace beambnf
