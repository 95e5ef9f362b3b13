import json
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from srgwalk.gf import prime_power
from srgwalk.dynamics import lift_basis, apply_hamiltonian, HamiltonianSpec
from srgwalk.graphs import build_complete
from srgwalk.srg import SrgParams, latin_params, paley_params, triangular_params
from srgwalk.theory import (
    Case,
    c_approx,
    case1_leading_order,
    case1_pair_hamiltonian,
    case2_leading_order,
    case2_pair_hamiltonian,
    case2_vector_c,
    complete_graph_hamiltonian_2d,
    complete_graph_reference,
    critical_gamma,
    hamiltonian_wre3,
    k_lambda_mu,
    klm_identity_holds,
    predict,
)

PALEY101 = SrgParams(101, 50, 24, 25)
LATIN2500 = SrgParams(2500, 147, 50, 6)

FAMILY_PARAMS = (
    [paley_params(t) for t in range(1, 60) if prime_power(4 * t + 1)]
    + [latin_params(t, d) for t in range(3, 40, 3) for d in (2, 3)]
    + [triangular_params(m) for m in range(5, 30, 4)]
)


def test_critical_gamma_examples():
    assert critical_gamma(PALEY101, Case.CASE1) == pytest.approx(0.02, abs=1e-17)
    assert critical_gamma(LATIN2500, Case.CASE2) == pytest.approx(0.00686941, abs=5e-9)
    assert critical_gamma(LATIN2500, Case.CASE2) == pytest.approx(1 / 147 + 1 / (2499 * 6), rel=1e-15)
    assert critical_gamma(PALEY101, Case.CASE2) == pytest.approx(0.0204, rel=1e-14)


@pytest.mark.parametrize("params", FAMILY_PARAMS, ids=str)
def test_gamma_c2_minus_c1(params):
    g1 = critical_gamma(params, Case.CASE1)
    g2 = critical_gamma(params, Case.CASE2)
    assert g2 > g1 > 0
    assert (g2 - g1) == pytest.approx(1 / ((params.N - 1) * params.mu), rel=1e-12)


def test_klm_latin2500():
    assert k_lambda_mu(LATIN2500) == 103
    assert Fraction(14112, 147) + 7 == 103
    assert klm_identity_holds(LATIN2500)


@pytest.mark.parametrize("params", FAMILY_PARAMS, ids=str)
def test_klm_identity_and_unit_c(params):
    assert klm_identity_holds(params)
    c, vec = case2_vector_c(params)
    assert 0 < c <= 1
    assert np.linalg.norm(vec) == pytest.approx(1, abs=1e-14)
    assert vec[1] == 0


def test_c_values_latin2500():
    c, _ = case2_vector_c(LATIN2500)
    assert c == pytest.approx((1 + 103**2 / 147) ** -0.5, rel=1e-15)
    assert c == pytest.approx(0.11691, abs=5e-6)
    assert c_approx(LATIN2500) == pytest.approx(0.11882, abs=5e-6)


def test_c_ratio_converges_monotonically_for_latin_d3():
    ratios = [case2_vector_c(latin_params(t, 3))[0] / c_approx(latin_params(t, 3)) for t in (5, 10, 20, 50)]
    assert all(a < b for a, b in zip(ratios, ratios[1:]))
    assert all(abs(1 - r) > abs(1 - s) for r, s in zip(ratios, ratios[1:]))
    assert abs(1 - ratios[-1]) < 0.02


@pytest.mark.parametrize("params", FAMILY_PARAMS, ids=str)
def test_case2_leading_order_degeneracy(params):
    gamma = critical_gamma(params, Case.CASE2)
    h0, h1 = case2_leading_order(params, gamma)
    r = np.array([0.0, 1.0, 0.0])
    _, c = case2_vector_c(params)
    target = -gamma * params.k
    assert np.abs(h0 @ r - target * r).max() <= 1e-10
    assert np.abs(h0 @ c - target * c).max() <= 1e-10
    assert np.allclose(h1, h1.T)


def test_case2_leading_order_matches_full_rotation_to_leading_order():
    # H0 + H1 differs from the exact rotated matrix by terms that vanish as N grows
    gamma = critical_gamma(LATIN2500, Case.CASE2)
    h0, h1 = case2_leading_order(LATIN2500, gamma)
    exact = hamiltonian_wre3(LATIN2500, gamma)
    assert np.abs(exact - (h0 + h1)).max() < 0.01


def test_case1_split():
    gamma = critical_gamma(PALEY101, Case.CASE1)
    h0, h1 = case1_leading_order(PALEY101, gamma)
    assert h0[0, 0] == h0[1, 1] == -1.0
    pair = case1_pair_hamiltonian(PALEY101, gamma)
    evals = np.linalg.eigvalsh(pair)
    assert evals[1] - evals[0] == pytest.approx(2 / math.sqrt(100), rel=1e-12)
    assert np.mean(evals) == pytest.approx(-1.0, abs=1e-15)


def test_case2_pair_eigenvalues():
    gamma = critical_gamma(LATIN2500, Case.CASE2)
    c, _ = case2_vector_c(LATIN2500)
    evals = np.linalg.eigvalsh(case2_pair_hamiltonian(LATIN2500, gamma))
    split = gamma * c * 6 * math.sqrt(2500 / 147)
    assert evals == pytest.approx([-gamma * 147 - split, -gamma * 147 + split], rel=1e-13)


def test_predict_latin2500():
    rep = predict(LATIN2500, Case.CASE2)
    assert rep.t_star_asymptotic == pytest.approx(78.54, abs=5e-3)
    assert rep.predicted_peak_probability == pytest.approx(0.968, abs=5e-4)
    assert rep.k_lm == 103
    assert rep.gamma == rep.gamma_c2
    # the curve peaks at t_star with the predicted height
    assert rep.curve(rep.t_star) == pytest.approx(rep.predicted_peak_probability, rel=1e-14)


def test_predict_paley101():
    rep = predict(PALEY101, Case.CASE1)
    assert rep.gamma == pytest.approx(0.02)
    assert rep.t_star_asymptotic == pytest.approx(15.79, abs=5e-3)
    assert rep.predicted_peak_probability == 1.0
    assert rep.t_star == pytest.approx(math.pi * math.sqrt(100) / 2, rel=1e-14)


def test_prediction_record_roundtrip():
    rep = predict(LATIN2500, Case.CASE2)
    doc = json.loads(rep.to_json())
    assert doc["gamma_c2"] == rep.gamma_c2
    assert doc["C_exact"] == rep.C_exact
    assert set(doc) >= {"gamma_c1", "gamma_c2", "C_exact", "C_approx", "k_lm", "t_star", "predicted_peak_probability"}


@given(st.sampled_from(FAMILY_PARAMS), st.sampled_from([Case.CASE1, Case.CASE2]))
def test_prediction_invariants(params, case):
    rep = predict(params, case)
    assert rep.gamma_c2 > rep.gamma_c1 > 0
    assert 0 < rep.C_exact <= 1
    assert 0 < rep.predicted_peak_probability <= 1
    assert rep.t_star == pytest.approx(math.pi / (2 * rep.frequency))


@pytest.mark.parametrize("N, evals, t_star", [(100, (-1.1, -0.9), 5 * math.pi), (4, (-1.5, -0.5), math.pi)])
def test_complete_graph_reference(N, evals, t_star):
    got, ts = complete_graph_reference(N)
    assert got == pytest.approx(evals, abs=1e-15)
    assert ts == pytest.approx(t_star, rel=1e-15)


@pytest.mark.parametrize("N", [4, 16, 64, 100, 256])
def test_complete_graph_numeric_2x2(N):
    ref, _ = complete_graph_reference(N)
    assert np.abs(np.linalg.eigvalsh(complete_graph_hamiltonian_2d(N, 1 / N)) - ref).max() <= 1e-12
    # projecting the vertex-space Hamiltonian gives the same matrix up to gamma*I
    g = build_complete(N)
    spec = HamiltonianSpec(1 / N, graph=g)
    q = lift_basis(g, 0)[:, :2]
    hq = np.column_stack([apply_hamiltonian(spec, q[:, j].astype(complex)) for j in range(2)])
    projected = (q.T @ hq).real - np.eye(2) / N
    assert np.abs(projected - complete_graph_hamiltonian_2d(N, 1 / N)).max() <= 1e-12
