"""Closed-form backward-error bounds and their ingredients.

Per evaluation point xi, with r_j the roots of phi_n:

    M(xi) = max_j 1 / |xi - r_j|        S(xi) = sum_j 1 / |xi - r_j|
    Gamma_1 = M |phi_n(xi)| ||c||_2     Gamma_c = chi ||Phi(xi)||_2
    Gamma_H = S |phi_n(xi)| + Gamma_c (M + S) ||c||_2

and the first-order pointwise bound is
|dp(xi)| <= Gamma_1 eps_1 + Gamma_c eps_c + Gamma_H eps_H.  For orthogonal
bases the coefficient bound multiplies the worst node value by the infinity
norm of the truncated inverse Vandermonde L-hat; for the monomial kinds the
scaled DFT is unitary, so the coefficient 2-norm is bounded by the worst
node value directly (bridge constant 1).

eps_c conventions: the Gamma_c above bounds perturbations of the raw
rank-one factor w.  The Chebyshev/Jacobi closed-form bounds state their
eps_c for a perturbation of c with chi^{-1} kept outside, which is
chi_eff * ||delta w||; the closed-form evaluators here take the already
translated value and ``bound_structured`` performs the translation itself.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._dd_kernels import inv_dd
from .basis import BasisKind, BasisSpec, make_basis, phi_ascending, phi_matrix
from .eig import golub_welsch
from .recover import SingularSystemError


class CoincidentNodeError(ValueError):
    """Evaluation point coincides with a root of phi_n."""


@dataclass(frozen=True)
class BoundReport:
    """Per-node constants and the aggregate structured bound.

    ``per_node`` rows are (M, S, Gamma_1, Gamma_c, Gamma_H) per node;
    ``aggregate`` is lhat_inf * max_j(G1 eps_1 + Gc eps_c + GH eps_H);
    ``closed_form`` is the basis-specific closed-form coefficient bound.
    """

    nodes: np.ndarray
    per_node: np.ndarray
    lhat_inf: float
    aggregate: float
    closed_form: float


@dataclass(frozen=True)
class JacobiConstants:
    """Numerically probed Jacobi-basis constants.

    ``mu`` is max |w_j / (1 - x_j^2)| over the Gauss rule of the (a+1, b+1)
    family on n-1 points; ``mu_ratio`` is mu (n + a + 1/2) / pi, the probe of
    the conjectured decay (meaningful for a == b).  ``eta_m``/``eta_s`` are
    max M / n^2 and max S / n^3 over the interpolation nodes; ``eta_d`` is
    max d_k / min d_k over k = 1..n; ``c_n`` the endpoint-Lagrange bound on
    ||L-hat||_inf.
    """

    c_n: float
    mu: float
    mu_ratio: float
    eta_m: float
    eta_s: float
    eta_d: float


def node_sets(spec: BasisSpec):
    """Interpolation nodes rho_j and roots r_j of phi_n, both descending.

    Monomial kinds use the n-th roots of unity as nodes; Chebyshev nodes and
    roots come from the closed forms; Jacobi interior nodes are the roots of
    the (alpha+1, beta+1) family of degree n-1 (with endpoints +-1) and the
    r_j come from Golub-Welsch on the basis family itself.
    """
    n = spec.n
    if spec.kind is BasisKind.MONOMIAL:
        rho = np.exp(2j * np.pi * np.arange(n) / n)
        return rho, np.zeros(n, dtype=complex)
    if spec.kind is BasisKind.MONOMIAL_SHIFTED:
        rho = np.exp(2j * np.pi * np.arange(n) / n)
        r = np.exp(1j * np.pi * (2.0 * np.arange(n) + 1.0) / n)
        return rho, r
    if spec.kind is BasisKind.CHEBYSHEV1:
        rho = np.cos(np.arange(n + 1) * np.pi / n)
        r = np.cos((2.0 * np.arange(n) + 1.0) * np.pi / (2.0 * n))
        return rho, r
    a, b = spec.jacobi_ab
    inner = make_basis(BasisKind.JACOBI, max(n, 2), a + 1.0, b + 1.0)
    xs, _ = golub_welsch(inner, n - 1)
    rho = np.empty(n + 1)
    rho[0] = 1.0
    rho[1:n] = xs[::-1]
    rho[n] = -1.0
    r, _ = golub_welsch(spec, n)
    return rho, r[::-1]


def ms_constants(roots, xi):
    """M(xi) = max 1/|xi - r_j| and S(xi) = sum 1/|xi - r_j|."""
    dist = np.abs(np.asarray(roots) - xi)
    if np.any(dist == 0.0):
        raise CoincidentNodeError(f"xi = {xi} coincides with a root of phi_n")
    inv = 1.0 / dist
    return float(np.max(inv)), float(np.sum(inv))


def gamma_pointwise(spec: BasisSpec, c, xi, roots, scaled: bool = False):
    """The amplification triple (Gamma_1, Gamma_c, Gamma_H) at xi.

    ``c`` is the coefficient vector in the working basis selected by
    ``scaled``; complex xi is handled through moduli throughout.
    """
    c = np.asarray(c, dtype=float)
    m, s = ms_constants(roots, xi)
    phis = phi_ascending(spec, xi, scaled=scaled)
    abs_phi_n = abs(phis[spec.n])
    norm_phi = float(np.linalg.norm(np.abs(phis[: spec.n])))
    norm_c = float(np.linalg.norm(c))
    chi = spec.chi_eff(scaled)
    g1 = m * abs_phi_n * norm_c
    gc = chi * norm_phi
    gh = s * abs_phi_n + gc * (m + s) * norm_c
    return g1, gc, gh


def bound_monomial(n: int, norm_c: float, eps_h: float, eps_1: float,
                   eps_c: float) -> float:
    """Companion-basis pointwise closed-form bound (literal evaluation).

    n ||c|| eps_1 + sqrt(n) eps_c + n log(n/2) eps_H
    + (n sqrt(n)/2)(1 + log(n/2 + 1/2)) ||c|| eps_H.
    """
    if n < 2:
        raise ValueError("need n >= 2")
    rn = math.sqrt(n)
    return (
        n * norm_c * eps_1
        + rn * eps_c
        + n * math.log(0.5 * n) * eps_h
        + 0.5 * n * rn * (1.0 + math.log(0.5 * n + 0.5)) * norm_c * eps_h
    )


def monomial_s_closed_form(n: int) -> float:
    """Closed-form comparison value (n/2) log(n/2 + 1/2) for S at the DFT nodes.

    Reported for comparison only: the direct sum exceeds it for every n
    (e.g. S(1) = 9.1481 vs 6.0163 at n = 8), so it is never asserted.
    """
    return 0.5 * n * math.log(0.5 * n + 0.5)


def cheb_coefficient_bound(n: int, norm_c: float, eps_h: float, eps_1: float,
                           eps_c: float) -> float:
    """Chebyshev closed-form coefficient bound (literal evaluation).

    (6 ||c|| eps_1 + 2 sqrt(n) eps_c + (5 + 16 sqrt(n) ||c||) eps_H) n^2,
    with eps_c in the c-with-chi-outside convention (chi_eff * ||delta w||).
    """
    if n < 2:
        raise ValueError("need n >= 2")
    rn = math.sqrt(n)
    return (6.0 * norm_c * eps_1 + 2.0 * rn * eps_c
            + (5.0 + 16.0 * rn * norm_c) * eps_h) * n * n


def lagrange_matrix(spec: BasisSpec, nodes, scaled: bool = False):
    """First n rows of the inverse generalized Vandermonde, and their inf-norm.

    Row i of L-hat holds the degree-i working-basis coefficients of the
    Lagrange polynomials on the nodes.  The inversion runs in double-double;
    real nodes only (the monomial/DFT path does not use L).
    """
    nodes = np.asarray(nodes, dtype=float)
    n = spec.n
    if nodes.shape != (n + 1,):
        raise ValueError(f"need {n + 1} nodes, got {nodes.shape}")
    if np.unique(nodes).shape[0] != n + 1:
        raise ValueError("nodes must be distinct")
    v = phi_matrix(spec, nodes, scaled=scaled)
    ah = v.copy()
    al = np.zeros_like(ah)
    xh, xl, bad = inv_dd(ah, al)
    if bad:
        raise SingularSystemError("Vandermonde matrix is exactly singular")
    lmat = xh + xl
    lhat = lmat[:n, :]
    return lhat, float(np.max(np.sum(np.abs(lhat), axis=1)))


def _log_binom(x: float, y: float) -> float:
    return math.lgamma(x + 1.0) - math.lgamma(y + 1.0) - math.lgamma(x - y + 1.0)


def jacobi_constants(alpha: float, beta: float, n: int) -> JacobiConstants:
    """Probe the Jacobi-basis constants for degree n (n >= 3)."""
    if n < 3:
        raise ValueError("need n >= 3")
    spec = make_basis(BasisKind.JACOBI, n, alpha, beta)
    inner = make_basis(BasisKind.JACOBI, max(n - 1, 2), alpha + 1.0, beta + 1.0)
    xs, ws = golub_welsch(inner, n - 1)
    mu = float(np.max(np.abs(ws / (1.0 - xs * xs))))
    mu_ratio = mu * (n + alpha + 0.5) / math.pi
    log_term = (
        math.log(mu)
        + math.log(2.0 * n + alpha + beta + 1.0)
        - (alpha + beta + 1.0) * math.log(2.0)
        + _log_binom(alpha + beta + n - 1.0, max(alpha, beta))
    )
    if log_term > 700.0:
        raise OverflowError("endpoint binomial term overflows double range")
    c_n = 12.0 + (n - 1.0) * math.exp(log_term)
    rho, roots = node_sets(spec)
    eta_m = 0.0
    eta_s = 0.0
    for xi in rho:
        m, s = ms_constants(roots, xi)
        eta_m = max(eta_m, m / n**2)
        eta_s = max(eta_s, s / n**3)
    d_inner = spec.d[1:]
    eta_d = float(np.max(d_inner) / np.min(d_inner))
    return JacobiConstants(c_n=c_n, mu=mu, mu_ratio=mu_ratio, eta_m=eta_m,
                           eta_s=eta_s, eta_d=eta_d)


def _jacobi_coefficient_bound(spec: BasisSpec, norm_c: float, eps_h: float,
                              eps_1: float, eps_c_cor: float,
                              consts: JacobiConstants) -> float:
    a, b = spec.jacobi_ab
    n = spec.n
    chi_t = spec.chi_scaled
    log_c_hat = math.log(consts.c_n) + _log_binom(max(a, b) + n, float(n))
    if log_c_hat > 700.0:
        raise OverflowError("endpoint binomial factor overflows double range")
    c_hat = math.exp(log_c_hat)
    return consts.eta_d * c_hat * (
        consts.eta_m * norm_c * eps_1 * n**2
        + chi_t * eps_c_cor * n**2.5
        + (consts.eta_s * n**3 + (consts.eta_m + consts.eta_s) * chi_t * n**3.5)
        * norm_c * eps_h
    )


def bound_structured(spec: BasisSpec, c, eps_h: float, eps_1: float, eps_c: float,
                     scaled: bool = None) -> BoundReport:
    """Aggregate structured bound over the basis node set.

    ``c`` and ``eps_c`` refer to the working basis and the raw rank-one
    factor; ``scaled`` defaults to True for orthogonal kinds.  The
    closed_form field evaluates the basis-specific closed-form bound (with
    eps_c translated to its convention).
    """
    if scaled is None:
        scaled = spec.is_orthogonal
    c = np.asarray(c, dtype=float)
    rho, roots = node_sets(spec)
    per_node = np.empty((rho.shape[0], 5))
    worst = 0.0
    for i, xi in enumerate(rho):
        g1, gc, gh = gamma_pointwise(spec, c, xi, roots, scaled=scaled)
        m, s = ms_constants(roots, xi)
        per_node[i] = (m, s, g1, gc, gh)
        worst = max(worst, g1 * eps_1 + gc * eps_c + gh * eps_h)
    norm_c = float(np.linalg.norm(c))
    eps_c_cor = spec.chi_eff(scaled) * eps_c
    if spec.is_orthogonal:
        _, lhat_inf = lagrange_matrix(spec, rho, scaled=scaled)
        if spec.kind is BasisKind.CHEBYSHEV1:
            closed = cheb_coefficient_bound(spec.n, norm_c, eps_h, eps_1, eps_c_cor)
        else:
            closed = _jacobi_coefficient_bound(
                spec, norm_c, eps_h, eps_1, eps_c_cor,
                jacobi_constants(*spec.jacobi_ab, spec.n),
            )
    else:
        lhat_inf = 1.0  # unitary scaled DFT: ||dp||_2 <= max_j |dp(xi_j)|
        closed = bound_monomial(spec.n, norm_c, eps_h, eps_1, eps_c_cor)
    return BoundReport(nodes=rho, per_node=per_node, lhat_inf=lhat_inf,
                       aggregate=lhat_inf * worst, closed_form=closed)


BOUND_REPORT_COLUMNS = [
    "basis", "n", "node_index", "M", "S", "gamma1", "gammac", "gammaH",
    "Lhat_norm", "aggregate", "closed_form",
]


def bound_report_rows(spec: BasisSpec, report: BoundReport) -> list:
    """Flatten a BoundReport into one row per node (see BOUND_REPORT_COLUMNS)."""
    rows = []
    tag = spec.tag()
    for i in range(report.per_node.shape[0]):
        m, s, g1, gc, gh = report.per_node[i]
        rows.append([tag, spec.n, i, m, s, g1, gc, gh,
                     report.lhat_inf, report.aggregate, report.closed_form])
    return rows


def save_bound_report(path: str, spec: BasisSpec, report: BoundReport) -> None:
    """Serialize a BoundReport as CSV, one row per node."""
    import csv

    with open(path, "w", newline="") as f:
        w = csv.writer(f)
        w.writerow(BOUND_REPORT_COLUMNS)
        for row in bound_report_rows(spec, report):
            w.writerow([f"{v:.17g}" if isinstance(v, float) else str(v) for v in row])
