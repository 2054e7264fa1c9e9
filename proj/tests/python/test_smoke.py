"""Smoke tests for the python bindings."""

import math

import pytest

import beambnf


def test_spectrum():
    assert beambnf.frequency(1, 0.0) == pytest.approx(1.0)
    assert beambnf.frequency(2, -0.5) == pytest.approx(math.sqrt(14.0))
    assert beambnf.mu(1.0) == pytest.approx(2.0 * math.sqrt(2.0))
    assert beambnf.frak_c(-0.5) == pytest.approx(math.sqrt(2.0))
    w = beambnf.weights_wsN(8, 0.0, s=1.0)
    assert w[0] == pytest.approx(1.0)


def test_resonance_certification():
    rep = beambnf.certify_resonances(4, 100, 0.0)
    assert rep["pass"]
    assert rep["min_abs_delta"] >= rep["threshold"] * (1 - 1e-9)
    rep6 = beambnf.certify_resonances(6, 40, 1.0)
    assert rep6["pass"]
    with pytest.raises(Exception):
        beambnf.certify_resonances(6, 40, 0.0)
    triples = beambnf.pythagorean_triples(30)
    assert [5, 4, 3] in [list(t) for t in triples]


def test_hamiltonian_values():
    assert beambnf.g_coeff(1, 1, 0.0) == pytest.approx(1.0 / (32.0 * math.pi))
    z = [0j] * 4
    z[0] = 1.0 + 0j
    assert beambnf.eval_H(z, 0.0) == pytest.approx(1.0 + 1.0 / (2.0 * math.pi))


def test_normal_form():
    nf = beambnf.bnf_build(1.0, n_trunc=8, r=0.1)
    assert nf["residual4_rel"] <= 1e-12
    assert nf["sixth_available"]
    assert nf["residual6_rel"] <= 1e-12
    k = nf["constants"]
    assert k["eps0"] == pytest.approx(0.13454, abs=1e-4)

    hz = beambnf.stability_horizons(0.13, 1.0)
    assert hz["horizon_4th"] is not None
    assert hz["horizon_6th"] is not None
    hz0 = beambnf.stability_horizons(0.5, 1.0)
    assert hz0["horizon_4th"] is None


def test_integrate_conserves_energy():
    z0 = [0j] * 8
    z0[0] = 0.05 + 0j
    traj = beambnf.integrate(z0, 0.0, dt=1e-3, t_end=5.0, stride=100)
    e = traj["energy"]
    assert max(abs(x - e[0]) for x in e) <= 1e-9 * e[0]


def test_physical_pipeline():
    m, nu = beambnf.nondimensionalize(200e9, 7500, 2.0, 0.02, 6.6e3)
    assert m == pytest.approx(1.0, rel=5e-3)
    assert nu == pytest.approx(74.0, rel=1e-2)
    assert beambnf.profile_h1() == pytest.approx(1.2583, abs=1e-3)
    rows = beambnf.stability_table(1e-4)
    assert len(rows) == 10
    steel_m1 = [r for r in rows if r["material"] == "Steel" and r["m"] == 1.0][0]
    assert steel_m1["P_kN"] == pytest.approx(6.58, rel=1e-2)
    assert steel_m1["order"] == 6
