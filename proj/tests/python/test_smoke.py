"""Smoke tests for the python bindings."""

import math

import plapclaw as pc


def test_signed_pow():
    assert pc.signed_pow(2.0, 2.0) == 4.0
    assert pc.signed_pow(-2.0, 2.0) == -4.0
    assert pc.signed_pow(0.0, 1.5) == 0.0


def test_identity_residual_small():
    assert abs(pc.identity_45_residual(1.7, -0.3, 2.5)) < 1e-12


def test_flux_and_waves():
    fx = pc.FluxModel.burgers()
    assert abs(fx.f(0.7) - 0.245) < 1e-15
    ws = pc.WaveState(fx, pc.FarField(0.0, 1.0))
    assert pc.exact_rarefaction(0.5, ws) == 0.5
    assert pc.exact_rarefaction(2.0, ws) == 1.0
    w, x0 = pc.smoothed_burgers(1.0, 1.0, -1.0, 1.0)
    assert abs(x0 + math.tanh(x0) - 1.0) < 1e-11


def test_barenblatt_oracle():
    params = pc.BarenblattParams(2.0, 1.0)
    assert params.alpha == 0.25
    assert pc.barenblatt(1.0, 0.0, params) == 1.0
    assert pc.barenblatt(1.0, 2.0 * params.xi_max, params) == 0.0
    assert pc.barenblatt_residual(params, 3000) <= 1e-3


def test_norms_and_fit():
    grid = pc.Grid(0.0, 1.0, 100)
    field = pc.Field(grid, [2.0] * 100)
    assert abs(pc.lq_norm(field, 2.0) - 2.0) < 1e-12
    assert pc.lq_norm(field, pc.inf) == 2.0

    times = [1.0, 3.0, 9.0, 27.0, 81.0, 243.0]
    values = [(1.0 + t) ** -0.5 for t in times]
    fit = pc.decay_fit(times, values, -0.5, 1.0, 243.0, 0.1)
    assert abs(fit.exponent + 0.5) < 1e-9
    assert fit.pass_


def test_reference_exponents():
    assert pc.reference_exponent_lq("Thm7.2", 2.0, pc.inf) == -0.25
    assert abs(pc.reference_exponent_gradient("Thm7.2", 2.0, 3.0) + 5.0 / 12.0) < 1e-15


def test_simulation_roundtrip():
    config = """
problem.flux = none
problem.p = 2
problem.u_minus = 0
problem.u_plus = 0
problem.initial = constant:0
problem.bump = gaussian:0.4,0,0.7
problem.grid = -12,12,240
problem.t_end = 1
problem.observations = list:0.5,1
"""
    out = pc.simulate(config)
    assert out["columns"][:3] == ["t", "dt", "mass"]
    assert len(out["rows"]) == 3
    mass0 = out["rows"][0][2]
    mass1 = out["rows"][-1][2]
    assert abs(mass1 - mass0) <= 1e-11 * abs(mass0)
    assert out["max_principle_slack"] <= 1e-12
