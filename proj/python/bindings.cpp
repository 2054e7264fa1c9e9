#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "beambnf/bnf.hpp"
#include "beambnf/dynamics.hpp"
#include "beambnf/hamiltonian.hpp"
#include "beambnf/physical.hpp"
#include "beambnf/resonance.hpp"
#include "beambnf/spectrum.hpp"

namespace py = pybind11;
using namespace beambnf;

namespace {

ModelParams make_params(double m, int n_trunc, double s, int n_weight) {
    ModelParams params{m, n_trunc, s, n_weight > 0 ? n_weight : n_trunc};
    params.validate();
    return params;
}

py::dict report_dict(const CertifyReport& rep) {
    py::dict d;
    d["order"] = rep.order;
    d["m"] = rep.m;
    d["i_max"] = rep.i_max;
    d["threshold"] = rep.threshold;
    d["min_abs_delta"] = rep.min_abs_delta;
    d["min_top_decade"] = rep.min_top_decade;
    d["ratio_to_threshold"] = rep.ratio_to_threshold;
    d["argmin"] = py::make_tuple(rep.argmin.i, rep.argmin.j, rep.argmin.k);
    d["argmin_class"] = rep.argmin.label;
    d["pass"] = rep.pass;
    d["rigorous"] = rep.rigorous;
    return d;
}

py::dict constants_dict(const BnfConstants& k) {
    py::dict d;
    d["m"] = k.m;
    d["mu"] = k.mu;
    d["frak_c"] = k.frak_c;
    d["r"] = k.r;
    d["gamma_r"] = k.gamma_r;
    d["eta_r"] = k.eta_r;
    d["C_r"] = k.C_r;
    d["eta6"] = k.eta6;
    d["C6"] = k.C6;
    d["r8_bound"] = k.r8_bound;
    d["eps0"] = k.eps0;
    d["eps1"] = k.eps1;
    d["eps_of_r"] = k.eps_of_r;
    d["T0"] = k.T0;
    d["T1"] = k.T1;
    d["c_star"] = k.c_star;
    d["c_dagger"] = k.c_dagger;
    d["smallness_4th_ok"] = k.smallness_4th_ok;
    d["smallness_6th_ok"] = k.smallness_6th_ok;
    return d;
}

}  // namespace

PYBIND11_MODULE(_beambnf, m) {
    m.doc() = "Normal forms and long-time stability for the hinged beam with stretching "
              "nonlinearity";

    // spectrum
    m.def("frequency", &frequency, py::arg("j"), py::arg("m"),
          "sqrt(j^4 + m j^2), the linear frequency of mode j");
    m.def("mu", &mu, py::arg("m"));
    m.def("frak_c", &frak_c, py::arg("m"));
    m.def(
        "weights_wsN",
        [](int n, double m_, double s, int n_weight) {
            return WeightSequence::wsN(n, m_, s, n_weight > 0 ? n_weight : n).values;
        },
        py::arg("n"), py::arg("m"), py::arg("s") = 1.0, py::arg("n_weight") = 0);
    m.def("sup_norm_bound", &sup_norm_bound, py::arg("u_coeffs"));
    m.def(
        "sobolev_norms",
        [](const std::vector<double>& u, double s, int N, double m_) {
            const SobolevNorms n = sobolev_norms(u, s, N, m_);
            py::dict d;
            d["h1"] = n.h1;
            d["hsN"] = n.hsN;
            d["tilde_hm1"] = n.tilde_hm1;
            d["tilde_hsN"] = n.tilde_hsN;
            return d;
        },
        py::arg("u_coeffs"), py::arg("s"), py::arg("N"), py::arg("m"));
    m.def("choose_truncation", &choose_truncation, py::arg("u_coeffs"), py::arg("s"),
          py::arg("delta"));

    // resonances
    m.def(
        "delta4",
        [](int i, int j, std::pair<int, int> si, std::pair<int, int> sj, double m_) {
            return delta4(i, j, {si.first, si.second}, {sj.first, sj.second}, m_);
        },
        py::arg("i"), py::arg("j"), py::arg("si"), py::arg("sj"), py::arg("m"));
    m.def(
        "delta6",
        [](int i, int j, int k, std::pair<int, int> si, std::pair<int, int> sj,
           std::pair<int, int> sk, double m_) {
            return delta6(i, j, k, {si.first, si.second}, {sj.first, sj.second},
                          {sk.first, sk.second}, m_);
        },
        py::arg("i"), py::arg("j"), py::arg("k"), py::arg("si"), py::arg("sj"), py::arg("sk"),
        py::arg("m"));
    m.def(
        "certify_resonances",
        [](int order, int i_max, double m_, int threads) {
            CertifyOptions opt;
            opt.threads = threads;
            return report_dict(order == 4 ? certify_prop_4th(i_max, m_, opt)
                                          : certify_prop_6th(i_max, m_, opt));
        },
        py::arg("order"), py::arg("i_max"), py::arg("m"), py::arg("threads") = 1);
    m.def("pythagorean_triples", &pythagorean_triples, py::arg("i_max"));

    // hamiltonian
    m.def("g_coeff", &g_coeff, py::arg("i"), py::arg("j"), py::arg("m"));
    m.def("a_coeff", &a_coeff, py::arg("i"), py::arg("j"), py::arg("m"));
    m.def("eval_H", &eval_H, py::arg("z"), py::arg("m"));
    m.def("vector_field", &vector_field, py::arg("z"), py::arg("m"));
    m.def(
        "energy_of_fields",
        [](const std::vector<double>& u, const std::vector<double>& v, double m_) {
            return energy_of_fields({u, v}, m_);
        },
        py::arg("u_coeffs"), py::arg("v_coeffs"), py::arg("m"));

    // normal form
    m.def(
        "bnf_constants",
        [](double m_, double r, int n_trunc, double s) {
            return constants_dict(constants(make_params(m_, n_trunc, s, n_trunc), r));
        },
        py::arg("m"), py::arg("r"), py::arg("n_trunc") = 12, py::arg("s") = 1.0);
    m.def(
        "bnf_build",
        [](double m_, int n_trunc, double r) {
            const NormalFormHamiltonian nf =
                build_normal_form(make_params(m_, n_trunc, 1.0, n_trunc), r);
            py::dict d;
            d["omega"] = nf.omega;
            d["residual4_rel"] = nf.residual4;
            d["residual6_rel"] = nf.residual6;
            d["sixth_available"] = nf.sixth_available;
            d["S4_norm_bound"] = nf.S4_norm_bound;
            d["S6_norm_bound"] = nf.S6_norm_bound;
            py::list a4;
            for (const auto& t : nf.A4) a4.append(py::make_tuple(t.i, t.j, t.coeff));
            d["G_bar"] = a4;
            py::list a6;
            for (const auto& t : nf.A6) a6.append(py::make_tuple(t.i, t.j, t.k, t.coeff));
            d["R_bar"] = a6;
            d["constants"] = constants_dict(nf.constants);
            return d;
        },
        py::arg("m"), py::arg("n_trunc") = 12, py::arg("r") = 0.1);
    m.def(
        "stability_horizons",
        [](double eps, double m_) {
            const StabilityCertificate c = stability_certificate(eps, make_params(m_, 8, 1.0, 8));
            py::dict d;
            d["eps"] = c.eps;
            d["eps0"] = c.eps0;
            d["eps1"] = c.eps1;
            d["horizon_4th"] =
                c.horizon_4th ? py::object(py::float_(*c.horizon_4th)) : py::object(py::none());
            d["horizon_6th"] =
                c.horizon_6th ? py::object(py::float_(*c.horizon_6th)) : py::object(py::none());
            d["sup_bound_4th"] = c.sup_bound_4th;
            d["sup_bound_6th"] = c.sup_bound_6th;
            return d;
        },
        py::arg("eps"), py::arg("m"));

    // dynamics
    m.def(
        "integrate",
        [](const ModeState& z0, double m_, double dt, double t_end, const std::string& scheme,
           int stride) {
            ModelParams params =
                make_params(m_, static_cast<int>(z0.size()), 1.0, static_cast<int>(z0.size()));
            IntegratorConfig cfg;
            cfg.dt = dt;
            cfg.t_end = t_end;
            cfg.sample_stride = stride;
            cfg.scheme = scheme == "splitting" ? Scheme::splitting : Scheme::implicit_midpoint;
            const WeightSequence w =
                WeightSequence::wsN(params.n_trunc, m_, 1.0, params.n_trunc);
            const Trajectory traj = integrate(z0, params, cfg, w);
            py::dict d;
            d["t"] = traj.t;
            d["energy"] = traj.energy;
            d["w_norm"] = traj.w_norm;
            d["sup_bound"] = traj.sup_bound;
            d["actions"] = traj.actions;
            d["states"] = traj.states;
            return d;
        },
        py::arg("z0"), py::arg("m"), py::arg("dt") = 1e-3, py::arg("t_end") = 1.0,
        py::arg("scheme") = "implicit_midpoint", py::arg("stride") = 1);

    // physical pipeline
    m.def("profile_coefficients", &profile_coefficients, py::arg("n_modes"));
    m.def("profile_h1", &profile_h1_closed_form);
    m.def(
        "nondimensionalize",
        [](double E, double rho, double L, double h, double P) {
            const PhysicalBeam beam{E, rho, L, Section::square(h), P};
            const Nondimensional nd = nondimensionalize(beam);
            return py::make_tuple(nd.m, nd.nu);
        },
        py::arg("E"), py::arg("rho"), py::arg("L"), py::arg("h"), py::arg("P"));
    m.def(
        "force_for_m",
        [](double E, double rho, double L, double h, double m_) {
            return force_for_m({E, rho, L, Section::square(h), 0.0}, m_);
        },
        py::arg("E"), py::arg("rho"), py::arg("L"), py::arg("h"), py::arg("m"));
    m.def(
        "stability_table",
        [](double delta) {
            py::list rows;
            for (const auto& r : fig1_table(fig1_default_rows(), delta)) {
                py::dict d;
                d["material"] = r.row.material;
                d["L"] = r.row.L;
                d["m"] = r.row.m;
                d["P_kN"] = r.P_kN;
                d["nu"] = r.nu;
                d["eps"] = r.eps;
                d["T_seconds"] = r.T_seconds;
                d["order"] = r.order;
                d["flagged"] = r.flagged;
                rows.append(d);
            }
            return rows;
        },
        py::arg("delta") = 1e-4);

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "0.1.0";
#endif
}
