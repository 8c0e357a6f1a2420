"""Degree-graded polynomial bases and their three-term recurrences.

Supported bases: monomial ``x^j``, shifted monomial ``1, x, ..., x^{n-1},
x^n + 1``, Chebyshev first kind, and Jacobi(alpha, beta) with the standard
normalization ``P_k(1) = binom(k + alpha, k)``.

Coefficient ordering convention, used everywhere in this package: a degree-n
polynomial monic in the basis is ``p = phi_n + sum_i c[i-1] * phi_{n-i}``,
i.e. ``c[0]`` multiplies the degree-(n-1) element and ``c[n-1]`` the
constant.  ``eval_phi`` returns the basis vector in the same
highest-degree-first order.
"""

import enum
import math
import warnings
from dataclasses import dataclass, field

import numpy as np


class BasisKind(enum.Enum):
    MONOMIAL = "monomial"
    MONOMIAL_SHIFTED = "monomial-shifted"
    CHEBYSHEV1 = "chebyshev"
    JACOBI = "jacobi"


_MONOMIAL_KINDS = (BasisKind.MONOMIAL, BasisKind.MONOMIAL_SHIFTED)
_ORTHOGONAL_KINDS = (BasisKind.CHEBYSHEV1, BasisKind.JACOBI)


@dataclass(frozen=True)
class BasisSpec:
    """A degree-graded basis: recurrence triples, leading coefficients, scaling.

    ``alpha[j-1], beta[j-1], gamma[j-1]`` are the coefficients of
    ``phi_j = (alpha_j x + beta_j) phi_{j-1} - gamma_j phi_{j-2}`` for
    j = 1..n (``gamma_1`` is a placeholder, it multiplies ``phi_{-1} = 0``).
    ``nu[j]`` is the leading monomial coefficient of ``phi_j``; ``chi``
    equals ``nu_n / nu_{n-1}``.  ``d[k]`` is the symmetrizing scaling with
    ``d[0] = d[n] = 1`` (all ones for the monomial kinds, where no
    symmetrization is defined).
    """

    kind: BasisKind
    n: int
    alpha: np.ndarray
    beta: np.ndarray
    gamma: np.ndarray
    nu: np.ndarray
    chi: float
    d: np.ndarray
    jacobi_ab: tuple = field(default=None)

    def __post_init__(self):
        for a in (self.alpha, self.beta, self.gamma, self.nu, self.d):
            a.flags.writeable = False

    @property
    def is_orthogonal(self) -> bool:
        return self.kind in _ORTHOGONAL_KINDS

    @property
    def chi_scaled(self) -> float:
        """chi of the symmetrized basis: sqrt(alpha_1 alpha_n gamma_2..gamma_n)."""
        if not self.is_orthogonal:
            return self.chi
        return math.sqrt(self.alpha[0] * self.alpha[-1] * float(np.prod(self.gamma[1:])))

    def chi_eff(self, scaled: bool) -> float:
        return self.chi_scaled if scaled else self.chi

    def tag(self) -> str:
        if self.kind is BasisKind.JACOBI:
            a, b = self.jacobi_ab
            return f"jacobi:{a:g}:{b:g}"
        return self.kind.value


def _jacobi_triples(n: int, a: float, b: float):
    alpha = np.empty(n)
    beta = np.empty(n)
    gamma = np.empty(n)
    alpha[0] = 0.5 * (a + b + 2.0)
    beta[0] = 0.5 * (a - b)
    gamma[0] = 1.0  # unused placeholder, kept positive
    for k in range(2, n + 1):
        s = 2.0 * k + a + b
        alpha[k - 1] = s * (s - 1.0) / (2.0 * k * (k + a + b))
        beta[k - 1] = (a * a - b * b) * (s - 1.0) / (2.0 * k * (k + a + b) * (s - 2.0))
        gamma[k - 1] = (k + a - 1.0) * (k + b - 1.0) * s / (k * (k + a + b) * (s - 2.0))
    return alpha, beta, gamma


def make_basis(kind, n: int, alpha: float = None, beta: float = None) -> BasisSpec:
    """Build a BasisSpec of degree n (n >= 2).

    For the Jacobi kind both parameters must exceed -1; values below -1/2
    trigger a warning (endpoint coefficient bounds degrade there).
    """
    if isinstance(kind, str):
        kind = BasisKind(kind)
    if n < 2:
        raise ValueError(f"degree must be >= 2, got {n}")
    jab = None
    if kind in _MONOMIAL_KINDS:
        al = np.ones(n)
        be = np.zeros(n)
        ga = np.zeros(n)
    elif kind is BasisKind.CHEBYSHEV1:
        al = np.full(n, 2.0)
        al[0] = 1.0
        be = np.zeros(n)
        ga = np.ones(n)
    elif kind is BasisKind.JACOBI:
        if alpha is None or beta is None:
            raise ValueError("jacobi basis needs alpha and beta")
        if alpha <= -1.0 or beta <= -1.0:
            raise ValueError("jacobi parameters must be > -1")
        if alpha < -0.5 or beta < -0.5:
            warnings.warn(
                "jacobi parameters below -1/2: endpoint coefficient bounds are "
                "not guaranteed",
                stacklevel=2,
            )
        al, be, ga = _jacobi_triples(n, float(alpha), float(beta))
        jab = (float(alpha), float(beta))
    else:  # pragma: no cover
        raise ValueError(f"unknown basis kind {kind!r}")

    nu = np.empty(n + 1)
    nu[0] = 1.0
    for j in range(1, n + 1):
        nu[j] = nu[j - 1] * al[j - 1]
    chi = nu[n] / nu[n - 1]

    d = np.ones(n + 1)
    if kind in _ORTHOGONAL_KINDS:
        # product form: d_k = sqrt(alpha_1/alpha_{n-k+1} * prod_{i=2}^{n-k+1} gamma_i)
        prod = 1.0
        for k in range(n - 1, 0, -1):
            m = n - k + 1
            prod *= ga[m - 1]
            d[k] = math.sqrt(al[0] / al[m - 1] * prod)

    return BasisSpec(kind=kind, n=n, alpha=al, beta=be, gamma=ga, nu=nu, chi=chi,
                     d=d, jacobi_ab=jab)


def basis_from_tag(tag: str, n: int) -> BasisSpec:
    """Parse a CLI basis tag: monomial | monomial-shifted | chebyshev | jacobi:A:B."""
    tag = tag.strip().lower()
    if tag.startswith("jacobi:"):
        parts = tag.split(":")
        if len(parts) != 3:
            raise ValueError(f"bad jacobi tag {tag!r}, expected jacobi:ALPHA:BETA")
        a, b = float(parts[1]), float(parts[2])
        if not (-1.0 < a <= 5.0 and -1.0 < b <= 5.0):
            raise ValueError("jacobi parameters restricted to (-1, 5] in the CLI")
        return make_basis(BasisKind.JACOBI, n, a, b)
    return make_basis(BasisKind(tag), n)


def phi_matrix(spec: BasisSpec, xs, scaled: bool = False) -> np.ndarray:
    """Generalized Vandermonde: row i holds phi_0..phi_n evaluated at xs[i].

    With ``scaled=True`` the columns are divided by ``d[n-j]``, i.e. the
    symmetrized basis ``phi~_j = phi_j / d_{n-j}``.
    """
    xs = np.atleast_1d(np.asarray(xs))
    n = spec.n
    dtype = complex if np.iscomplexobj(xs) else float
    v = np.empty((xs.shape[0], n + 1), dtype=dtype)
    v[:, 0] = 1.0
    v[:, 1] = spec.alpha[0] * xs + spec.beta[0]
    for j in range(2, n + 1):
        v[:, j] = (spec.alpha[j - 1] * xs + spec.beta[j - 1]) * v[:, j - 1] \
            - spec.gamma[j - 1] * v[:, j - 2]
    if spec.kind is BasisKind.MONOMIAL_SHIFTED:
        v[:, n] += 1.0
    if scaled:
        v /= spec.d[::-1][None, :]
    return v


def phi_ascending(spec: BasisSpec, x, scaled: bool = False) -> np.ndarray:
    """phi_0(x)..phi_n(x) at a single point, lowest degree first."""
    return phi_matrix(spec, np.atleast_1d(x), scaled)[0]


def eval_phi(spec: BasisSpec, x):
    """Evaluate the basis vector Phi(x) = [phi_{n-1}, ..., phi_0] and phi_n(x)."""
    row = phi_ascending(spec, x)
    return row[spec.n - 1 :: -1].copy(), row[spec.n]


def eval_poly(spec: BasisSpec, c, x):
    """Evaluate p(x) = phi_n(x) + c^T Phi(x) (Clenshaw for orthogonal kinds)."""
    c = np.asarray(c, dtype=float)
    n = spec.n
    if c.shape != (n,):
        raise ValueError(f"coefficient vector must have length {n}, got {c.shape}")
    if spec.kind in _MONOMIAL_KINDS:
        acc = 1.0
        for i in range(1, n + 1):
            acc = acc * x + c[i - 1]
        if spec.kind is BasisKind.MONOMIAL_SHIFTED:
            acc = acc + 1.0
        return acc
    u1 = 0.0
    u2 = 0.0
    for j in range(n, -1, -1):
        t = 1.0 if j == n else c[n - 1 - j]
        if j + 1 <= n:
            t = t + (spec.alpha[j] * x + spec.beta[j]) * u1
        if j + 2 <= n:
            t = t - spec.gamma[j + 1] * u2
        u2 = u1
        u1 = t
    return u1


def scaling_vector(spec: BasisSpec) -> np.ndarray:
    """Symmetrizing scaling d_0..d_n (orthogonal kinds only; d_0 = d_n = 1)."""
    if not spec.is_orthogonal:
        raise ValueError("no symmetrizing scaling for monomial kinds")
    return spec.d.copy()


def jacobi_scaling_closed_form(a: float, b: float, n: int) -> np.ndarray:
    """Degree-indexed scaling ||P_k|| / ||P_0|| for k = 0..n, via log-Gamma.

    Relates to the product form by index reversal:
    ``scaling_vector(spec)[k] == jacobi_scaling_closed_form(a, b, n)[n - k]``.
    """
    lg = math.lgamma
    out = np.empty(n + 1)
    out[0] = 1.0
    for k in range(1, n + 1):
        # ||P_k||^2 / ||P_0||^2 from the weighted-norm formula
        logr = (
            lg(a + b + 2.0)
            + lg(k + a + 1.0)
            + lg(k + b + 1.0)
            - math.log(2.0 * k + a + b + 1.0)
            - lg(k + a + b + 1.0)
            - lg(k + 1.0)
            - lg(a + 1.0)
            - lg(b + 1.0)
        )
        out[k] = math.exp(0.5 * logr)
    return out


def jacobi_value_at_one(a: float, k: int) -> float:
    """P_k^{(a,b)}(1) = binom(k + a, k), computed via log-Gamma."""
    return math.exp(math.lgamma(k + a + 1.0) - math.lgamma(a + 1.0) - math.lgamma(k + 1.0))
