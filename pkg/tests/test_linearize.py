"""Confederate construction, symmetrization, companion rewrite, adjugate."""

import math

import numpy as np
import pytest

from confed import (
    adjugate,
    assemble_dense,
    build_companion_unitary,
    build_confederate,
    char_value,
    eval_phi,
    eval_poly,
    hessenberg_qr,
    make_basis,
    basis_from_tag,
    symmetrize,
)


def test_companion_2x2():
    s = make_basis("monomial", 2)
    parts = build_confederate(s, [0.0, -1.0])
    c = assemble_dense(parts)
    assert np.array_equal(c, [[0.0, 1.0], [1.0, 0.0]])
    vals = hessenberg_qr(c).values
    assert np.allclose(np.sort(vals.real), [-1.0, 1.0], atol=1e-14)
    assert np.all(vals.imag == 0.0)


def test_colleague_eigenvalues_are_chebyshev_roots():
    n = 7
    s = make_basis("chebyshev", n)
    c = assemble_dense(build_confederate(s, np.zeros(n)))
    vals = np.sort(hessenberg_qr(c).values.real)
    want = np.sort(np.cos((2 * np.arange(n) + 1) * np.pi / (2 * n)))
    assert np.max(np.abs(vals - want)) < 1e-13


def test_determinant_identity_extended_precision():
    # nu_n det(xI - C) = p(x), for scaled and unscaled forms
    rng = np.random.default_rng(6)
    for tag in ("monomial", "chebyshev", "jacobi:0.4:-0.3"):
        for n in (2, 7, 14, 20):
            s = basis_from_tag(tag, n)
            c = rng.standard_normal(n)
            variants = [build_confederate(s, c)]
            if s.is_orthogonal:
                variants.append(symmetrize(variants[0]))
            for parts in variants:
                m = assemble_dense(parts)
                for x in rng.uniform(-2.0, 2.0, 20):
                    lhs = float(char_value(m, x, s.nu[n]))
                    rhs = eval_poly(s, c, x)
                    assert lhs == pytest.approx(rhs, rel=1e-10, abs=1e-10)


def test_adjugate_identity():
    # adj(xI - C) e_1 = nu_{n-1}^{-1} Phi(x), componentwise
    rng = np.random.default_rng(7)
    for tag in ("monomial", "chebyshev", "jacobi:0:0"):
        for n in (2, 5, 9, 12):
            s = basis_from_tag(tag, n)
            c = rng.standard_normal(n)
            m = assemble_dense(build_confederate(s, c))
            for x in rng.uniform(1.5, 2.5, 10):
                got = adjugate(x * np.eye(n) - m)[:, 0]
                phi, _ = eval_phi(s, x)
                want = phi / s.nu[n - 1]
                assert np.max(np.abs(got - want) / np.abs(want)) < 1e-9


def test_adjugate_cofactor_fallback_near_eigenvalue():
    s = make_basis("monomial", 3)
    m = assemble_dense(build_confederate(s, np.array([-2.0, -1.0, 2.0])))  # roots -1,1,2
    x = 1.0 + 1e-14
    got = adjugate(x * np.eye(3) - m)[:, 0]
    phi, _ = eval_phi(s, x)
    assert np.max(np.abs(got - phi)) < 1e-9


def test_symmetrize_chebyshev_structure():
    n = 5
    s = make_basis("chebyshev", n)
    c = np.array([3.0, -1.0, 2.0, 0.5, 4.0])  # c_i = p_{n-i}, so c = [p4 p3 p2 p1 p0]
    parts = symmetrize(build_confederate(s, c))
    h = parts.H
    assert np.array_equal(h, h.T)  # defect exactly zero by construction
    assert np.all(np.diag(h) == 0.0)
    off = np.diag(h, 1)
    assert np.allclose(off[:-1], 0.5, rtol=0, atol=0)
    assert off[-1] == pytest.approx(math.sqrt(2.0) / 2.0, rel=1e-16)
    # rank-one row: -(1/2) [p4 p3 p2 p1 sqrt(2) p0]
    row = np.outer(parts.u, parts.w)[0]
    want = -0.5 * np.array([c[0], c[1], c[2], c[3], math.sqrt(2.0) * c[4]])
    assert np.max(np.abs(row - want)) < 1e-15
    assert parts.chi_eff == pytest.approx(math.sqrt(2.0), rel=1e-15)


def test_symmetrize_jacobi_half_half_is_chebyshev_u_comrade():
    n = 6
    parts = symmetrize(build_confederate(make_basis("jacobi", n, 0.5, 0.5), np.zeros(n)))
    assert np.allclose(np.diag(parts.H), 0.0, atol=1e-16)
    assert np.allclose(np.diag(parts.H, 1), 0.5, atol=1e-15)


def test_symmetrize_jacobi_matches_chebyshev_H():
    n = 9
    hj = symmetrize(build_confederate(make_basis("jacobi", n, -0.5, -0.5), np.zeros(n))).H
    hc = symmetrize(build_confederate(make_basis("chebyshev", n), np.zeros(n))).H
    assert np.max(np.abs(hj - hc)) < 1e-13


def test_symmetrize_rejects_monomial():
    with pytest.raises(ValueError):
        symmetrize(build_confederate(make_basis("monomial", 3), np.zeros(3)))


def test_companion_unitary_roots_of_xn_plus_1():
    parts = build_companion_unitary(np.zeros(6))
    vals = hessenberg_qr(parts.H).values
    want = np.sort_complex(np.exp(1j * np.pi * (2 * np.arange(6) + 1) / 6))
    assert np.max(np.abs(np.sort_complex(vals) - want)) < 1e-13


def test_companion_unitary_is_orthogonal():
    parts = build_companion_unitary(np.zeros(3))
    assert np.array_equal(parts.H.T @ parts.H, np.eye(3))


def test_companion_unitary_equals_classical_companion():
    rng = np.random.default_rng(8)
    c = rng.standard_normal(5)
    parts = build_companion_unitary(c)
    classic = assemble_dense(build_confederate(make_basis("monomial", 5), c))
    assert np.max(np.abs(assemble_dense(parts) - classic)) < 1e-16
    # p = x^n - 2 at x = 2 gives 2^n - 2, via the oracle determinant
    for n in (4, 6):
        cc = np.zeros(n)
        cc[-1] = -2.0
        pu = build_companion_unitary(cc)
        val = float(char_value(assemble_dense(pu), 2.0, 1.0))
        assert val == pytest.approx(2.0**n - 2.0, rel=1e-14)


def test_assemble_dense_with_zero_w_is_h():
    s = make_basis("chebyshev", 4)
    parts = build_confederate(s, np.zeros(4))
    assert np.array_equal(assemble_dense(parts), parts.H)


def test_colleague_t2():
    parts = symmetrize(build_confederate(make_basis("chebyshev", 2), np.zeros(2)))
    c = assemble_dense(parts)
    r = math.sqrt(2.0) / 2.0
    assert np.allclose(c, [[0.0, r], [r, 0.0]], atol=1e-16)
    vals = np.sort(hessenberg_qr(c).values.real)
    assert np.allclose(vals, [math.cos(3 * math.pi / 4), math.cos(math.pi / 4)], atol=1e-15)


def test_scaled_and_unscaled_eigenvalues_agree():
    rng = np.random.default_rng(9)
    for n in (5, 14, 30):
        s = make_basis("chebyshev", n)
        c = rng.standard_normal(n) * 2.0
        e1 = hessenberg_qr(assemble_dense(build_confederate(s, c))).values
        e2 = hessenberg_qr(assemble_dense(symmetrize(build_confederate(s, c)))).values
        assert np.max(np.abs(np.sort_complex(e1) - np.sort_complex(e2))) < 1e-10


def test_dimension_mismatch():
    s = make_basis("chebyshev", 4)
    with pytest.raises(ValueError):
        build_confederate(s, np.zeros(3))
