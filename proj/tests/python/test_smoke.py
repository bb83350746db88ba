"""Smoke tests for the python bindings: one touch per main operation."""

import math

import numpy as np
import pytest

import respole as rp


@pytest.fixture
def model():
    return rp.ResonanceModel(1.0, 0.2, 2)


@pytest.fixture
def pair():
    psi = rp.HardyFunction([1.0], [(2j, 2)])
    phi = rp.HardyFunction([1.0], [(0.5 + 3j, 2)])
    return psi, phi


def test_smatrix_unimodular_on_real_axis(model):
    for e in np.linspace(-5.0, 5.0, 41):
        assert abs(abs(rp.smatrix_eval(model, complex(e))) - 1.0) < 1e-12


def test_laurent_principal_closed_form(model):
    a = rp.laurent_principal(model)
    assert a[0] == pytest.approx(-0.4j)
    assert a[1] == pytest.approx(-0.04)


def test_pole_term_first_order_reduction(pair):
    m = rp.ResonanceModel(1.0, 0.2, 1)
    psi, phi = pair
    total = rp.pole_term(m, psi, phi).total
    expected = -2.0 * math.pi * m.Gamma * psi.eval(m.z_R) * phi.eval(m.z_R)
    assert total == pytest.approx(expected, rel=1e-12)


def test_contour_identity(model, pair):
    rep = rp.contour_identity_check(model, *pair, rp.QuadratureSpec(), 1e-8)
    assert rep.ok
    assert rep.defect < 1e-8 * (1.0 + abs(rep.direct))


def test_evolution_semigroup(model):
    e1 = rp.evolution_matrix(model, 0.7).entries
    e2 = rp.evolution_matrix(model, 1.9).entries
    e12 = rp.evolution_matrix(model, 2.6).entries
    assert np.max(np.abs(e1 @ e2 - e12)) < 1e-13
    assert np.allclose(rp.evolution_matrix(model, 0.0).entries, np.eye(2))


def test_evolution_matches_series_oracle():
    m = rp.ResonanceModel(1.0, 0.4, 5)
    t = 20.0 / m.Gamma
    dev = np.max(np.abs(rp.evolution_matrix(m, t).entries - rp.matrix_exp_oracle(m, t).entries))
    assert dev < 1e-10


def test_negative_time_rejected(model):
    with pytest.raises(ValueError):
        rp.evolution_matrix(model, -1.0)


def test_state_evolution_is_exponential():
    m = rp.ResonanceModel(1.0, 0.3, 4)
    for n in range(4):
        for tg in (0.3, 2.0, 7.0):
            t = tg / m.Gamma
            triple = rp.evolve_state_triple_sum(m, n, t).c
            closed = rp.evolve_state_closed(m, n, t).c
            assert np.max(np.abs(triple - closed)) < 1e-12


def test_survival_ratio(model, pair):
    psi = rp.gamow_components(model, pair[0]).to(rp.Normalization.JORDAN)
    w0 = rp.full_state_operator(model)
    p0 = rp.pair_with_observable(w0, psi)
    t = 5.0
    pt = rp.pair_with_observable(rp.evolve_coefficients(w0, t), psi)
    assert pt / p0 == pytest.approx(math.exp(-model.Gamma * t), rel=1e-10)


def test_exact_identities():
    assert rp.binom_product_identity(3, 2, 1, 1)
    assert rp.reorder_check(15)
    assert rp.binom_cancellation_ok(4, 1, 0)
    assert rp.symbolic_evolution_matches(8)


def test_hardy_validation_reports():
    bad = rp.HardyFunction([1.0], [(-2j, 2)])
    assert rp.hardy_validate(bad)
    good = rp.HardyFunction([1.0], [(2j, 2)])
    assert not rp.hardy_validate(good)


def test_pole_evaluation_is_an_error(model):
    with pytest.raises(ArithmeticError):
        rp.smatrix_eval(model, model.z_R)
