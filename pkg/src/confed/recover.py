"""Exact backward-error measurement on the polynomial.

The perturbed polynomial is (p + dp)(x) = nu_n det(xI - C - dC).  Its values
are computed by LU elimination carried out entirely in double-double
arithmetic, differenced against the unperturbed values in double-double, and
rounded once.  Coefficients of dp are then recovered by an inverse DFT
(monomial kinds, nodes at the n-th roots of unity) or by solving the
(n+1) x (n+1) generalized Vandermonde system on the basis nodes by
column-pivoted double-double elimination.  dp has degree <= n-1 because both
p and p + dp are monic in the basis; the recovered degree-n coefficient is
reported as a consistency residual.
"""

from dataclasses import dataclass

import numpy as np

from ._dd_kernels import det_dd, det_zdd, solve_colpiv_dd
from .basis import BasisSpec, phi_ascending, phi_matrix
from .ddouble import DD, ComplexDD, two_sum
from .linearize import ConfederateParts, assemble_dense
from .perturb import Perturbation, apply_perturbation

_COND_LIMIT = 1e14


class ExactSingularityError(ArithmeticError):
    """All pivot candidates were exactly zero during elimination."""


class SingularSystemError(ArithmeticError):
    """Vandermonde system exactly or numerically singular."""


@dataclass(frozen=True)
class DeltaP:
    """Recovered perturbation polynomial in the working basis.

    ``coeffs[j]`` multiplies the degree-j working-basis element,
    j = 0..n-1.  ``residual`` is the magnitude of the recovered degree-n
    coefficient (a consistency check; for the DFT path it is the largest
    truncated imaginary part instead).
    """

    coeffs: np.ndarray
    residual: float
    norm_inf: float
    norm_2: float


def char_value(m: np.ndarray, xi, nu_n: float):
    """nu_n * det(xi I - M) as an extended-precision scalar.

    M must be real; xi may be real or complex (complex path used for the
    roots-of-unity nodes).  Pivoting is by largest |hi| with ties broken by
    lowest row index.
    """
    m = np.asarray(m, dtype=float)
    n = m.shape[0]
    if m.ndim != 2 or m.shape[1] != n:
        raise ValueError("need a square matrix")
    if np.iscomplexobj(xi) and complex(xi).imag != 0.0:
        xi = complex(xi)
        arh = -m.copy()
        arl = np.zeros((n, n))
        aih = np.zeros((n, n))
        ail = np.zeros((n, n))
        for i in range(n):
            arh[i, i], arl[i, i] = two_sum(xi.real, -m[i, i])
            aih[i, i] = xi.imag
        rh, rl, ih, il, bad = det_zdd(arh, arl, aih, ail)
        if bad:
            raise ExactSingularityError("xi I - M is exactly singular")
        re = DD(rh, rl) * nu_n
        im = DD(ih, il) * nu_n
        return ComplexDD(re, im)
    xi = float(np.real(xi))
    ah = -m.copy()
    al = np.zeros((n, n))
    for i in range(n):
        ah[i, i], al[i, i] = two_sum(xi, -m[i, i])
    dh, dl, bad = det_dd(ah, al)
    if bad:
        raise ExactSingularityError("xi I - M is exactly singular")
    return DD(dh, dl) * nu_n


def delta_p_values(parts: ConfederateParts, pert: Perturbation, nodes) -> np.ndarray:
    """dp(xi_j) = nu_n [det(xi_j I - C - dC) - det(xi_j I - C)], rounded once."""
    nodes = np.atleast_1d(np.asarray(nodes))
    if np.unique(nodes).shape[0] != nodes.shape[0]:
        raise ValueError("nodes must be distinct")
    nu_n = parts.basis.nu[parts.basis.n]
    c0 = assemble_dense(parts)
    c1 = apply_perturbation(parts, pert)
    complex_nodes = np.iscomplexobj(nodes)
    out = np.empty(nodes.shape[0], dtype=complex if complex_nodes else float)
    for j, xi in enumerate(nodes):
        v1 = char_value(c1, xi, nu_n)
        v0 = char_value(c0, xi, nu_n)
        d = v1 - v0
        out[j] = complex(d) if complex_nodes else float(d)
    return out


def recover_monomial(values) -> DeltaP:
    """Coefficients of dp from its values at the n-th roots of unity.

    Direct O(n^2) inverse DFT; dp is real so imaginary parts must fall below
    1e-10 * ||coeffs||_inf and are then truncated.  By unitarity of the
    scaled DFT, ||dp||_2 <= max_j |dp(xi_j)|.
    """
    values = np.asarray(values, dtype=complex)
    n = values.shape[0]
    j = np.arange(n)
    w = np.exp(-2j * np.pi * np.outer(j, j) / n) / n
    coeffs_c = w @ values
    real = coeffs_c.real.copy()
    imag_max = float(np.max(np.abs(coeffs_c.imag)))
    real_max = float(np.max(np.abs(real))) if n else 0.0
    if imag_max > 1e-10 * max(real_max, 1e-300):
        raise ValueError(
            f"recovered coefficients are not real: max imag {imag_max:.3e} "
            f"vs max real {real_max:.3e}"
        )
    return DeltaP(
        coeffs=real,
        residual=imag_max,
        norm_inf=real_max,
        norm_2=float(np.linalg.norm(real)),
    )


def recover_orthogonal(spec: BasisSpec, values, scaled: bool = True) -> DeltaP:
    """Coefficients of dp from its values at the n+1 basis nodes rho_0..rho_n.

    Solves the generalized Vandermonde system in double-double by
    column-pivoted elimination; the degree-n coefficient becomes the
    residual.  Values must be ordered like ``bounds.node_sets(spec)[0]``.
    """
    from .bounds import node_sets

    values = np.asarray(values, dtype=float)
    n = spec.n
    if values.shape != (n + 1,):
        raise ValueError(f"need {n + 1} node values, got {values.shape}")
    rho, _ = node_sets(spec)
    v = phi_matrix(spec, rho, scaled=scaled)
    ah = v.copy()
    al = np.zeros_like(ah)
    bh = values.copy()
    bl = np.zeros_like(bh)
    xh, xl, pivmax, pivmin, bad = solve_colpiv_dd(ah, al, bh, bl)
    if bad:
        raise SingularSystemError("Vandermonde system is exactly singular")
    if pivmin <= 0.0 or pivmax / pivmin > _COND_LIMIT:
        raise SingularSystemError(
            f"Vandermonde system numerically singular (pivot ratio {pivmax / pivmin:.3e})"
        )
    x = xh + xl
    coeffs = x[:n].copy()
    return DeltaP(
        coeffs=coeffs,
        residual=float(abs(x[n])),
        norm_inf=float(np.max(np.abs(coeffs))),
        norm_2=float(np.linalg.norm(coeffs)),
    )


def delta_p_at(spec: BasisSpec, coeffs, x, scaled: bool = True):
    """Evaluate a recovered dp (degree <= n-1, ascending coefficients) at x."""
    coeffs = np.asarray(coeffs)
    phis = phi_ascending(spec, x, scaled=scaled)
    return phis[: coeffs.shape[0]] @ coeffs


def backward_error(parts: ConfederateParts, pert: Perturbation):
    """Measure dp for a perturbed linearization: (norm_inf, norm_2, DeltaP).

    Dispatches on the basis kind to the right node set and recovery routine.
    """
    from .bounds import node_sets

    spec = parts.basis
    rho, _ = node_sets(spec)
    vals = delta_p_values(parts, pert, rho)
    if spec.is_orthogonal:
        dp = recover_orthogonal(spec, vals, scaled=parts.scaled)
    else:
        dp = recover_monomial(vals)
    return dp.norm_inf, dp.norm_2, dp
