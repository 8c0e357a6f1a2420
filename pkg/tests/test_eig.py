"""Eigensolver and Golub-Welsch quadrature."""

import math

import numpy as np
import pytest
from conftest import jacobi_moments

from confed import (
    EigNonConvergence,
    basis_from_tag,
    golub_welsch,
    hessenberg_qr,
    make_basis,
    roots_of_poly,
)


def test_swap_matrix():
    r = hessenberg_qr(np.array([[0.0, 1.0], [1.0, 0.0]]))
    assert r.converged
    assert np.allclose(r.values, [-1.0, 1.0], atol=1e-15)


def test_colleague_t8():
    r = roots_of_poly(make_basis("chebyshev", 8), np.zeros(8))
    want = np.sort(np.cos((2 * np.arange(8) + 1) * np.pi / 16))
    assert r.converged
    assert np.max(np.abs(np.sort(r.values.real) - want)) < 1e-12
    assert np.max(np.abs(r.values.imag)) < 1e-12


def test_cubic_with_integer_roots():
    # x^3 - 2x^2 - x + 2 = (x-1)(x+1)(x-2)
    r = roots_of_poly(make_basis("monomial", 3), np.array([-2.0, -1.0, 2.0]))
    assert np.max(np.abs(np.sort(r.values.real) - [-1.0, 1.0, 2.0])) < 1e-12


def test_wilkinson_5():
    coef = np.array([1.0])
    for k in range(1, 6):
        coef = np.convolve(coef, [-float(k), 1.0])
    c = coef[:-1][::-1]  # highest non-leading first
    r = roots_of_poly(make_basis("monomial", 5), c)
    assert np.max(np.abs(np.sort(r.values.real) - np.arange(1.0, 6.0))) < 1e-9


def test_monomial_quartic_roots_of_unity():
    r = roots_of_poly(make_basis("monomial", 4), np.array([0.0, 0.0, 0.0, -1.0]))
    want = np.sort_complex(np.array([1.0, -1.0, 1j, -1j]))
    assert np.max(np.abs(np.sort_complex(r.values) - want)) < 1e-12


def test_chebyshev_t5_roots():
    r = roots_of_poly(make_basis("chebyshev", 5), np.zeros(5))
    want = np.sort(np.cos((2 * np.arange(5) + 1) * np.pi / 10))
    assert np.max(np.abs(np.sort(r.values.real) - want)) < 1e-13


def test_legendre_p3_roots():
    r = roots_of_poly(make_basis("jacobi", 3, 0.0, 0.0), np.zeros(3))
    want = np.sort([-math.sqrt(0.6), 0.0, math.sqrt(0.6)])
    assert np.max(np.abs(np.sort(r.values.real) - want)) < 1e-11


def test_against_numpy_on_random_matrices():
    rng = np.random.default_rng(20)
    for _ in range(120):
        n = int(rng.integers(1, 22))
        a = rng.standard_normal((n, n))
        r = hessenberg_qr(a)
        assert r.converged
        got = np.sort_complex(r.values)
        want = np.sort_complex(np.linalg.eigvals(a))
        scale = max(1.0, float(np.max(np.abs(want))))
        assert np.max(np.abs(got - want)) / scale < 5e-12


def test_trace_and_symmetry_invariants():
    rng = np.random.default_rng(21)
    for n in (3, 8, 17):
        a = rng.standard_normal((n, n))
        r = hessenberg_qr(a)
        assert abs(np.sum(r.values).real - np.trace(a)) <= 1e-11 * (1 + abs(np.trace(a)))
        assert abs(np.sum(r.values).imag) <= 1e-11
        sym = a + a.T
        rs = hessenberg_qr(sym)
        assert np.max(np.abs(rs.values.imag)) <= 1e-12 * np.linalg.norm(sym)


def test_values_sorted_deterministically():
    rng = np.random.default_rng(22)
    a = rng.standard_normal((9, 9))
    v = hessenberg_qr(a).values
    key = sorted(zip(v.real, v.imag))
    assert [complex(re, im) for re, im in key] == list(v)


def test_gw_chebyshev_t():
    x, w = golub_welsch(make_basis("chebyshev", 5), 5)
    assert np.max(np.abs(x - np.sort(np.cos((2 * np.arange(5) + 1) * np.pi / 10)))) < 1e-14
    assert np.allclose(w, np.pi / 5, rtol=1e-14)


@pytest.mark.parametrize("m", [5, 20])
def test_gw_chebyshev_u_weights(m):
    # Gauss rule of the (1/2, 1/2) family: w_s = (pi/(m+1))(1 - x_s^2)
    x, w = golub_welsch(make_basis("jacobi", 4, 0.5, 0.5), m)
    want = (np.pi / (m + 1)) * (1.0 - x * x)
    assert np.max(np.abs(w - want)) < 1e-12


def test_gw_legendre_midpoint():
    x, w = golub_welsch(make_basis("jacobi", 2, 0.0, 0.0), 1)
    assert abs(x[0]) < 1e-15 and w[0] == pytest.approx(2.0, rel=1e-15)


@pytest.mark.parametrize("ab", [(0.0, 0.0), (0.5, 0.5), (-0.5, -0.5), (1.25, -0.4)])
def test_gw_quadrature_exactness(ab):
    # m nodes integrate x^k for k <= 2m - 1 against the weight
    a, b = ab
    for m in (3, 6, 10):
        x, w = golub_welsch(make_basis("jacobi", 4, a, b), m)
        assert np.all(w > 0)
        mom = jacobi_moments(a, b, 2 * m - 1)
        assert np.sum(w) == pytest.approx(mom[0], rel=1e-12)
        for k in range(2 * m):
            got = float(w @ x**k)
            assert got == pytest.approx(mom[k], rel=1e-11, abs=1e-11 * mom[0])


def test_gw_rejects_monomial():
    with pytest.raises(ValueError):
        golub_welsch(make_basis("monomial", 4), 3)


def test_nonconvergence_is_flagged_not_silent():
    # NaNs can never satisfy the deflation test; the solver must flag failure
    a = np.full((4, 4), np.nan)
    r = hessenberg_qr(a)
    assert not r.converged
