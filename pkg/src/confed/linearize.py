"""Confederate matrices in decomposed form C = H + u w^T.

``H`` depends only on the basis; the rank-one factors carry the polynomial:
``u = e_1`` and ``w = -c / chi_eff`` in the working (possibly symmetrized)
basis.  ``symmetrize`` rescales a comrade matrix to symmetric tridiagonal
form; ``build_companion_unitary`` rewrites the companion matrix as an
orthogonal matrix plus rank one over the basis ``1, x, ..., x^{n-1},
x^n + 1``.
"""

import math
from dataclasses import dataclass

import numpy as np

from .basis import BasisKind, BasisSpec, make_basis

HESSENBERG = "hessenberg"
TRIDIAGONAL = "tridiagonal"
SYMMETRIC_TRIDIAGONAL = "symmetric-tridiagonal"
UNITARY_PLUS_RANK_ONE = "unitary-plus-rank-one"


@dataclass(frozen=True)
class ConfederateParts:
    """Decomposition C = H + u w^T with its basis context.

    ``c`` is the coefficient vector in the working basis (rescaled when
    ``scaled`` is set), ordered highest degree first; ``chi_eff`` is chi of
    the working basis and ``w == -c / chi_eff``.
    """

    H: np.ndarray
    u: np.ndarray
    w: np.ndarray
    chi_eff: float
    basis: BasisSpec
    scaled: bool
    c: np.ndarray
    structure: str

    def __post_init__(self):
        for a in (self.H, self.u, self.w, self.c):
            a.flags.writeable = False


def _basis_hessenberg(spec: BasisSpec) -> tuple:
    """H with H Phi(x) = x Phi(x) - chi^{-1} phi_n(x) e_1, plus a structure tag."""
    n = spec.n
    h = np.zeros((n, n))
    if spec.kind is BasisKind.MONOMIAL:
        h[np.arange(1, n), np.arange(n - 1)] = 1.0
        return h, HESSENBERG
    if spec.kind is BasisKind.MONOMIAL_SHIFTED:
        h[np.arange(1, n), np.arange(n - 1)] = 1.0
        h[0, n - 1] = -1.0
        return h, UNITARY_PLUS_RANK_ONE
    # comrade: row i (0-indexed) describes x*phi_{n-1-i}
    for i in range(n):
        j = n - i  # recurrence index
        h[i, i] = -spec.beta[j - 1] / spec.alpha[j - 1]
        if i + 1 < n:
            h[i, i + 1] = spec.gamma[j - 1] / spec.alpha[j - 1]
        if i > 0:
            h[i, i - 1] = 1.0 / spec.alpha[j - 1]
    return h, TRIDIAGONAL


def _symmetric_tridiagonal(spec: BasisSpec) -> np.ndarray:
    """The scaled comrade H: diagonal -beta_k/alpha_k, off-diagonal
    sqrt(gamma_{k+1}/(alpha_{k+1} alpha_k)), exactly symmetric by construction."""
    n = spec.n
    h = np.zeros((n, n))
    for i in range(n):
        k = n - i
        h[i, i] = -spec.beta[k - 1] / spec.alpha[k - 1]
    for i in range(n - 1):
        k = n - 1 - i  # off-diagonal index c_k, top to bottom c_{n-1}..c_1
        off = math.sqrt(spec.gamma[k] / (spec.alpha[k] * spec.alpha[k - 1]))
        h[i, i + 1] = off
        h[i + 1, i] = off
    return h


def build_confederate(spec: BasisSpec, c) -> ConfederateParts:
    """Unscaled confederate matrix of p = phi_n + c^T Phi as (H, e_1, -c/chi)."""
    c = np.asarray(c, dtype=float)
    n = spec.n
    if c.shape != (n,):
        raise ValueError(f"coefficient vector must have length {n}, got {c.shape}")
    h, structure = _basis_hessenberg(spec)
    u = np.zeros(n)
    u[0] = 1.0
    w = -c / spec.chi
    return ConfederateParts(H=h, u=u, w=w, chi_eff=spec.chi, basis=spec,
                            scaled=False, c=c.copy(), structure=structure)


def symmetrize(parts: ConfederateParts) -> ConfederateParts:
    """Rescale a comrade decomposition to the symmetric tridiagonal form.

    The coefficients move to the basis {phi_0, phi~_1, .., phi~_{n-1}, phi_n}
    with phi~_j = phi_j / d_{n-j}; chi_eff becomes
    chi~ = sqrt(alpha_1 alpha_n gamma_2 .. gamma_n).
    """
    spec = parts.basis
    if not spec.is_orthogonal:
        raise ValueError("symmetrization is defined for orthogonal kinds only")
    if parts.scaled:
        return parts
    h = _symmetric_tridiagonal(spec)
    chi_t = spec.chi_scaled
    c_t = spec.d[1:] * parts.c
    u = np.zeros(spec.n)
    u[0] = 1.0
    return ConfederateParts(H=h, u=u, w=-c_t / chi_t, chi_eff=chi_t, basis=spec,
                            scaled=True, c=c_t, structure=SYMMETRIC_TRIDIAGONAL)


def build_companion_unitary(c) -> ConfederateParts:
    """Companion matrix as orthogonal-plus-rank-one over 1, x, .., x^{n-1}, x^n+1.

    Input c holds monomial coefficients (c[0] multiplies x^{n-1}).  The
    trailing coefficient shifts by one: c~ = c - e_n, so that
    H~ + e_1 (-c~)^T equals the classical companion matrix of p.
    """
    c = np.asarray(c, dtype=float)
    n = c.shape[0]
    if n < 2:
        raise ValueError("need degree >= 2")
    spec = make_basis(BasisKind.MONOMIAL_SHIFTED, n)
    c_t = c.copy()
    c_t[n - 1] -= 1.0
    h, _ = _basis_hessenberg(spec)
    u = np.zeros(n)
    u[0] = 1.0
    return ConfederateParts(H=h, u=u, w=-c_t, chi_eff=1.0, basis=spec,
                            scaled=False, c=c_t, structure=UNITARY_PLUS_RANK_ONE)


def assemble_dense(parts: ConfederateParts) -> np.ndarray:
    """Dense C = H + u w^T."""
    return parts.H + np.outer(parts.u, parts.w)


def _cofactor_adjugate(a: np.ndarray) -> np.ndarray:
    n = a.shape[0]
    adj = np.empty((n, n))
    rows = np.arange(n)
    for i in range(n):
        for j in range(n):
            minor = a[np.ix_(rows != i, rows != j)]
            adj[j, i] = (-1.0) ** (i + j) * np.linalg.det(minor)
    return adj


def adjugate(a: np.ndarray) -> np.ndarray:
    """adj(A) = det(A) A^{-1}, falling back to cofactors near singularity (n <= 12).

    Testing helper; not performance critical.
    """
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    if n == 1:
        return np.ones((1, 1))
    det = np.linalg.det(a)
    scale = np.linalg.norm(a, np.inf)
    near_singular = det == 0.0 or (scale > 0 and abs(det) < 1e-8 * scale**n)
    if near_singular:
        if n > 12:
            raise np.linalg.LinAlgError(
                "matrix too close to singular for the det*inv adjugate and too "
                "large for cofactor expansion"
            )
        return _cofactor_adjugate(a)
    return det * np.linalg.inv(a)
