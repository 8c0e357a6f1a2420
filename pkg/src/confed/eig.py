"""Dense eigensolvers: Francis double-shift QR and symmetric tridiagonal QL.

The QR path reduces to Hessenberg form (skipped when the input already is)
and runs double-shift sweeps with a global deflation tolerance of
1e-14 * ||M||_F, a budget of 40 n sweeps, and a deterministic exceptional
shift (EISPACK constants 0.75 / -0.4375) every 10 stalled iterations.
Non-convergence is flagged, never silent.  The QL path powers Golub-Welsch
quadrature by rotating the first eigenvector row alongside.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._backend import jit
from .basis import BasisKind, BasisSpec, make_basis

_EPS = 2.0 ** -52


class EigNonConvergence(RuntimeError):
    """Raised when an iterative eigensolve exhausts its iteration budget."""


@dataclass(frozen=True)
class EigResult:
    values: np.ndarray  # complex, sorted by (real, imag)
    iterations: int
    converged: bool


def _hess_reduce(a):
    """Householder reduction to upper Hessenberg form, in place (no accumulation)."""
    n = a.shape[0]
    for k in range(n - 2):
        scale = 0.0
        for i in range(k + 1, n):
            scale += abs(a[i, k])
        if scale == 0.0:
            continue
        m = n - k - 1
        v = np.empty(m)
        for i in range(m):
            v[i] = a[k + 1 + i, k] / scale
        nrm = 0.0
        for i in range(m):
            nrm += v[i] * v[i]
        nrm = math.sqrt(nrm)
        if nrm == 0.0:
            continue
        alpha = -nrm if v[0] >= 0.0 else nrm
        v[0] -= alpha
        vnorm2 = 0.0
        for i in range(m):
            vnorm2 += v[i] * v[i]
        if vnorm2 == 0.0:
            continue
        beta = 2.0 / vnorm2
        for j in range(k, n):
            s = 0.0
            for i in range(m):
                s += v[i] * a[k + 1 + i, j]
            s *= beta
            for i in range(m):
                a[k + 1 + i, j] -= s * v[i]
        for i in range(n):
            s = 0.0
            for j in range(m):
                s += a[i, k + 1 + j] * v[j]
            s *= beta
            for j in range(m):
                a[i, k + 1 + j] -= s * v[j]
        a[k + 1, k] = alpha * scale
        for i in range(k + 2, n):
            a[i, k] = 0.0
    return a


def _hqr(h, tol, max_sweeps):
    """Double-shift QR on an upper Hessenberg matrix; eigenvalues only.

    Returns (wr, wi, sweeps, ok).  Deflation when |h[l, l-1]| <= tol.
    """
    n = h.shape[0]
    wr = np.zeros(n)
    wi = np.zeros(n)
    ok = True
    total = 0
    t = 0.0  # accumulated diagonal shift from exceptional steps
    en = n - 1
    its = 0
    p = 0.0
    q = 0.0
    r = 0.0
    while en >= 0:
        l = en
        while l > 0:
            if abs(h[l, l - 1]) <= tol:
                h[l, l - 1] = 0.0
                break
            l -= 1
        x = h[en, en]
        if l == en:
            wr[en] = x + t
            wi[en] = 0.0
            en -= 1
            its = 0
            continue
        y = h[en - 1, en - 1]
        w = h[en, en - 1] * h[en - 1, en]
        if l == en - 1:
            pp = 0.5 * (y - x)
            qq = pp * pp + w
            zz = math.sqrt(abs(qq))
            x = x + t
            if qq >= 0.0:
                zz = pp + (zz if pp >= 0.0 else -zz)
                wr[en - 1] = x + zz
                wr[en] = wr[en - 1]
                if zz != 0.0:
                    wr[en] = x - w / zz
                wi[en - 1] = 0.0
                wi[en] = 0.0
            else:
                wr[en - 1] = x + pp
                wr[en] = x + pp
                wi[en - 1] = zz
                wi[en] = -zz
            en -= 2
            its = 0
            continue
        if total >= max_sweeps:
            ok = False
            for i in range(l, en + 1):  # best-effort values for the stuck block
                wr[i] = h[i, i] + t
                wi[i] = 0.0
            en = l - 1
            continue
        if its > 0 and its % 10 == 0:
            # deterministic exceptional shift
            t += x
            for i in range(l, en + 1):
                h[i, i] -= x
            s = abs(h[en, en - 1]) + abs(h[en - 1, en - 2])
            x = 0.75 * s
            y = x
            w = -0.4375 * s * s
        its += 1
        total += 1
        # look for two consecutive small subdiagonals
        m = en - 2
        while m >= l:
            zz = h[m, m]
            rr = x - zz
            ss = y - zz
            p = (rr * ss - w) / h[m + 1, m] + h[m, m + 1]
            q = h[m + 1, m + 1] - zz - rr - ss
            r = h[m + 2, m + 1]
            s = abs(p) + abs(q) + abs(r)
            if s != 0.0:
                p /= s
                q /= s
                r /= s
            if m == l:
                break
            if abs(h[m, m - 1]) * (abs(q) + abs(r)) <= _EPS * abs(p) * (
                abs(h[m - 1, m - 1]) + abs(zz) + abs(h[m + 1, m + 1])
            ):
                break
            m -= 1
        for i in range(m + 2, en + 1):
            h[i, i - 2] = 0.0
        for i in range(m + 3, en + 1):
            h[i, i - 3] = 0.0
        # double QR sweep on rows m..en
        for k in range(m, en):
            notlast = k != en - 1
            if k != m:
                p = h[k, k - 1]
                q = h[k + 1, k - 1]
                r = h[k + 2, k - 1] if notlast else 0.0
                x = abs(p) + abs(q) + abs(r)
                if x == 0.0:
                    continue
                p /= x
                q /= x
                r /= x
            s = math.sqrt(p * p + q * q + r * r)
            if p < 0.0:
                s = -s
            if s == 0.0:
                continue
            if k != m:
                h[k, k - 1] = -s * x
            elif l != m:
                h[k, k - 1] = -h[k, k - 1]
            p += s
            x = p / s
            y = q / s
            zz = r / s
            q /= p
            r /= p
            if notlast:
                for j in range(k, en + 1):
                    pp = h[k, j] + q * h[k + 1, j] + r * h[k + 2, j]
                    h[k, j] -= pp * x
                    h[k + 1, j] -= pp * y
                    h[k + 2, j] -= pp * zz
                hi = en if en < k + 3 else k + 3
                for i in range(l, hi + 1):
                    pp = x * h[i, k] + y * h[i, k + 1] + zz * h[i, k + 2]
                    h[i, k] -= pp
                    h[i, k + 1] -= pp * q
                    h[i, k + 2] -= pp * r
            else:
                for j in range(k, en + 1):
                    pp = h[k, j] + q * h[k + 1, j]
                    h[k, j] -= pp * x
                    h[k + 1, j] -= pp * y
                hi = en if en < k + 3 else k + 3
                for i in range(l, hi + 1):
                    pp = x * h[i, k] + y * h[i, k + 1]
                    h[i, k] -= pp
                    h[i, k + 1] -= pp * q
    return wr, wi, total, ok


def _tql_gw(d, e, z):
    """Implicit-shift QL on a symmetric tridiagonal (d, e), rotating z along.

    e[i] couples d[i] and d[i+1]; e[m-1] is workspace.  z starts as e_1 and
    ends holding the first component of each (orthonormal) eigenvector.
    Returns False on non-convergence.
    """
    m = d.shape[0]
    for l in range(m):
        it = 0
        while True:
            mm = l
            while mm < m - 1:
                dd = abs(d[mm]) + abs(d[mm + 1])
                if abs(e[mm]) <= _EPS * dd:
                    break
                mm += 1
            if mm == l:
                break
            it += 1
            if it > 50:
                return False
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[mm] - d[l] + e[l] / (g + (r if g >= 0.0 else -r))
            s = 1.0
            c = 1.0
            p = 0.0
            underflow = False
            for i in range(mm - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[mm] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                f = z[i + 1]
                z[i + 1] = s * z[i] + c * f
                z[i] = c * z[i] - s * f
            if not underflow:
                d[l] -= p
                e[l] = g
                e[mm] = 0.0
    return True


_hess_reduce = jit(_hess_reduce)
_hqr = jit(_hqr)
_tql_gw = jit(_tql_gw)


def _is_hessenberg(a: np.ndarray) -> bool:
    n = a.shape[0]
    for k in range(n - 2):
        if np.any(a[k + 2 :, k] != 0.0):
            return False
    return True


def hessenberg_qr(m: np.ndarray) -> EigResult:
    """All eigenvalues of a dense real matrix by Hessenberg reduction + QR."""
    a = np.array(m, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("need a square matrix")
    n = a.shape[0]
    if n == 0:
        return EigResult(np.zeros(0, complex), 0, True)
    fro = float(np.linalg.norm(a))
    if fro == 0.0:
        return EigResult(np.zeros(n, complex), 0, True)
    if not _is_hessenberg(a):
        _hess_reduce(a)
    wr, wi, sweeps, ok = _hqr(a, 1e-14 * fro, 40 * n)
    vals = wr + 1j * wi
    order = np.lexsort((vals.imag, vals.real))
    return EigResult(vals[order], int(sweeps), bool(ok))


def _quadrature_mu0(a: float, b: float) -> float:
    # zeroth moment of (1-x)^a (1+x)^b via the Beta integral
    return 2.0 ** (a + b + 1.0) * math.exp(
        math.lgamma(a + 1.0) + math.lgamma(b + 1.0) - math.lgamma(a + b + 2.0)
    )


def golub_welsch(spec: BasisSpec, m: int):
    """Gauss nodes and weights for the basis weight, m points, ascending nodes.

    Nodes are the eigenvalues of the m x m symmetric Jacobi matrix built from
    the recurrence; weights are mu_0 times the squared first eigenvector
    components.
    """
    if not spec.is_orthogonal:
        raise ValueError("quadrature needs an orthogonal kind")
    if m < 1:
        raise ValueError("need at least one node")
    if spec.n < max(m, 2):
        if spec.kind is BasisKind.JACOBI:
            spec = make_basis(spec.kind, max(m, 2), *spec.jacobi_ab)
        else:
            spec = make_basis(spec.kind, max(m, 2))
    d = np.empty(m)
    e = np.zeros(m)
    for j in range(m):
        d[j] = -spec.beta[j] / spec.alpha[j]
    for j in range(m - 1):
        e[j] = math.sqrt(spec.gamma[j + 1] / (spec.alpha[j + 1] * spec.alpha[j]))
    z = np.zeros(m)
    z[0] = 1.0
    if not _tql_gw(d, e, z):
        raise EigNonConvergence("tridiagonal QL did not converge")
    if spec.kind is BasisKind.JACOBI:
        a, b = spec.jacobi_ab
    else:
        a, b = -0.5, -0.5
    weights = _quadrature_mu0(a, b) * z * z
    order = np.argsort(d)
    return d[order], weights[order]


def roots_of_poly(spec: BasisSpec, c) -> EigResult:
    """Roots of p = phi_n + c^T Phi as eigenvalues of its confederate matrix."""
    from .linearize import assemble_dense, build_confederate, symmetrize

    parts = build_confederate(spec, c)
    if spec.is_orthogonal:
        parts = symmetrize(parts)
    return hessenberg_qr(assemble_dense(parts))
