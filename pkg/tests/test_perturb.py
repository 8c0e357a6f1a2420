"""Perturbation generation and the exact rank-one law."""

import numpy as np
import pytest

from confed import (
    Perturbation,
    apply_perturbation,
    assemble_dense,
    backward_error,
    basis_from_tag,
    build_companion_unitary,
    build_confederate,
    delta_p_values,
    make_basis,
    phi_ascending,
    random_perturbation,
    random_unbalanced_poly,
    symmetrize,
    trial_rng,
)
from confed.ddouble import DD


def test_zero_norms_give_zero_perturbation():
    pert = random_perturbation(trial_rng(1), 6, 0.0, 0.0, 0.0)
    assert not pert.deltaH.any() and not pert.deltaU.any() and not pert.deltaW.any()
    s = make_basis("chebyshev", 6)
    parts = symmetrize(build_confederate(s, np.ones(6)))
    _, _, dp = backward_error(parts, pert)
    assert np.array_equal(dp.coeffs, np.zeros(6))
    assert dp.residual == 0.0


def test_norms_hit_exactly():
    rng = trial_rng(2)
    pert = random_perturbation(rng, 8, 1e-6, 3e-4, 0.25)
    assert np.linalg.norm(pert.deltaH, 2) == pytest.approx(1e-6, rel=1e-12)
    assert np.linalg.norm(pert.deltaU) == pytest.approx(3e-4, rel=1e-12)
    assert np.linalg.norm(pert.deltaW) == pytest.approx(0.25, rel=1e-12)


def test_symmetric_structure():
    pert = random_perturbation(trial_rng(3), 7, 1e-3, 0.0, 0.0, structure="symmetric")
    assert np.array_equal(pert.deltaH, pert.deltaH.T)


def test_match_h_structure():
    pert = random_perturbation(trial_rng(4), 7, 1e-3, 0.0, 0.0, structure="matchH")
    i, j = np.indices((7, 7))
    assert not pert.deltaH[np.abs(i - j) > 1].any()
    assert np.linalg.norm(pert.deltaH, 2) == pytest.approx(1e-3, rel=1e-12)


def test_determinism_bitwise():
    a = random_perturbation(trial_rng(42, 3), 6, 1e-6, 1e-7, 1e-8)
    b = random_perturbation(trial_rng(42, 3), 6, 1e-6, 1e-7, 1e-8)
    assert np.array_equal(a.deltaH, b.deltaH)
    assert np.array_equal(a.deltaU, b.deltaU)
    assert np.array_equal(a.deltaW, b.deltaW)
    c = random_perturbation(trial_rng(42, 4), 6, 1e-6, 1e-7, 1e-8)
    assert not np.array_equal(a.deltaH, c.deltaH)


def test_apply_composition():
    s = make_basis("chebyshev", 5)
    parts = symmetrize(build_confederate(s, np.arange(1.0, 6.0)))
    zero = random_perturbation(trial_rng(5), 5, 0.0, 0.0, 0.0)
    assert np.array_equal(apply_perturbation(parts, zero), assemble_dense(parts))
    dw = np.zeros(5)
    dw[2] = 1e-3
    pert = Perturbation(np.zeros((5, 5)), np.zeros(5), dw, 0.0, 0.0, 1e-3)
    want = assemble_dense(parts) + np.outer(parts.u, dw)
    assert np.array_equal(apply_perturbation(parts, pert), want)


def test_apply_triangle_inequality():
    rng = trial_rng(6)
    s = make_basis("chebyshev", 6)
    parts = symmetrize(build_confederate(s, rng.standard_normal(6)))
    pert = random_perturbation(rng, 6, 1e-3, 1e-4, 1e-2)
    diff = apply_perturbation(parts, pert) - assemble_dense(parts)
    bound = (pert.epsH + pert.eps1 * np.linalg.norm(parts.w)
             + pert.epsC * np.linalg.norm(parts.u + pert.deltaU)
             + pert.eps1 * pert.epsC)
    assert np.linalg.norm(diff, 2) <= bound * (1 + 1e-12)


def test_unbalanced_poly_reproducible_and_monic_convention():
    a = random_unbalanced_poly(trial_rng(7, 0), 5)
    b = random_unbalanced_poly(trial_rng(7, 0), 5)
    assert np.array_equal(a, b)
    assert a.shape == (5,)  # n non-leading coefficients; leading 1 implicit


def test_unbalanced_poly_median_spread():
    # Monte-Carlo bracket on the log3 of the max coefficient magnitude
    rng = trial_rng(8)
    logs = np.empty(10_000)
    for i in range(10_000):
        c = random_unbalanced_poly(rng, 5)
        logs[i] = np.log(np.max(np.abs(c))) / np.log(3.0)
    med = float(np.median(logs))
    assert 2.0 <= med <= 14.0


def _dd_dot(chi_eff, dw, phis_high_first):
    acc = DD(0.0)
    for a, b in zip(dw, phis_high_first):
        acc = acc + DD(float(a)) * float(b)
    return float(-(DD(chi_eff) * acc))


@pytest.mark.parametrize("tag,n", [
    ("chebyshev", 6), ("chebyshev", 20), ("jacobi:0:0", 12),
    ("jacobi:0.5:-0.25", 9), ("monomial", 8), ("monomial-shifted", 10),
])
def test_exact_rank_one_law(tag, n):
    # with deltaH = deltaU = 0: dp(x) = -chi_eff * deltaW^T Phi(x), exactly
    rng = trial_rng(9, n)
    spec = basis_from_tag(tag, n)
    c = rng.standard_normal(n)
    if tag == "monomial-shifted":
        parts = build_companion_unitary(c)
    elif spec.is_orthogonal:
        parts = symmetrize(build_confederate(spec, c))
    else:
        parts = build_confederate(spec, c)
    dw = rng.standard_normal(n)
    dw *= 1e-3 / np.linalg.norm(dw)
    pert = Perturbation(np.zeros((n, n)), np.zeros(n), dw, 0.0, 0.0, 1e-3)
    xs = rng.uniform(1.5, 2.5, 20)
    vals = delta_p_values(parts, pert, xs)
    for xi, v in zip(xs, vals):
        phis = phi_ascending(parts.basis, xi, scaled=parts.scaled)
        want = _dd_dot(parts.chi_eff, dw, phis[:n][::-1])
        assert abs(v - want) / abs(want) < 1e-11
