"""Shared independent oracles for the test suite.

These deliberately avoid the code paths they check: determinants by cofactor
expansion, characteristic polynomials by polynomial-arithmetic cofactors,
Jacobi weight moments by the Pearson recurrence, and a small rank
correlation.
"""

import math

import numpy as np


def det_cofactor(m: np.ndarray):
    """Determinant by recursive cofactor expansion (exact for small integers)."""
    m = np.asarray(m)
    n = m.shape[0]
    if n == 1:
        return m[0, 0]
    total = m[0, 0] * 0
    for j in range(n):
        minor = np.delete(np.delete(m, 0, axis=0), j, axis=1)
        total = total + (-1) ** j * m[0, j] * det_cofactor(minor)
    return total


def charpoly_cofactor(m: np.ndarray) -> np.ndarray:
    """Coefficients of det(xI - M), ascending degree, by polynomial cofactors.

    Entries of xI - M are degree-1 polynomials stored as ascending coefficient
    arrays; practical for n <= 8.
    """
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    poly = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            poly[i, j] = np.array([-m[i, j], 1.0]) if i == j else np.array([-m[i, j]])
    return _det_poly(poly)


def _det_poly(p):
    n = p.shape[0]
    if n == 1:
        return p[0, 0]
    acc = np.zeros(1)
    for j in range(n):
        minor = np.delete(np.delete(p, 0, axis=0), j, axis=1)
        term = np.convolve(p[0, j], _det_poly(minor))
        if j % 2:
            term = -term
        width = max(acc.shape[0], term.shape[0])
        acc = np.pad(acc, (0, width - acc.shape[0]))
        acc = acc + np.pad(term, (0, width - term.shape[0]))
    return acc


def jacobi_moments(a: float, b: float, kmax: int) -> np.ndarray:
    """Moments of (1-x)^a (1+x)^b on [-1, 1] via the stable Pearson recurrence.

    m_{k+1} = ((b - a) m_k + k m_{k-1}) / (a + b + 2 + k), seeded with the
    Beta-integral zeroth moment.
    """
    m = np.empty(kmax + 1)
    m[0] = 2.0 ** (a + b + 1.0) * math.exp(
        math.lgamma(a + 1.0) + math.lgamma(b + 1.0) - math.lgamma(a + b + 2.0)
    )
    if kmax >= 1:
        m[1] = (b - a) * m[0] / (a + b + 2.0)
    for k in range(1, kmax):
        m[k + 1] = ((b - a) * m[k] + k * m[k - 1]) / (a + b + 2.0 + k)
    return m


def spearman(x, y) -> float:
    """Spearman rank correlation."""
    rx = np.argsort(np.argsort(x)).astype(float)
    ry = np.argsort(np.argsort(y)).astype(float)
    rx -= rx.mean()
    ry -= ry.mean()
    return float((rx @ ry) / math.sqrt((rx @ rx) * (ry @ ry)))
