"""Hot double-double linear-algebra kernels (LU determinant, solves, inverse).

Each kernel exists twice: an explicit-loop version compiled by numba, and a
row/block-vectorized pure-NumPy version.  The per-element operation sequence
is identical, so the two backends agree bitwise.  The module-level names
(``det_dd`` etc.) dispatch on the active backend; all kernels destroy their
array arguments, so callers pass copies.

Status codes: 0 = ok, 1 = exactly singular (all pivot candidates zero).
Pivot selection maximizes |hi| with ties broken by lowest index.
"""

import numpy as np

from ._backend import NUMBA_ENABLED, jit
from .ddouble import dd_add, dd_div, dd_mul


def _det_dd_loops(ah, al):
    """Determinant by LU with partial pivoting, all in double-double."""
    n = ah.shape[0]
    dh = 1.0
    dl = 0.0
    for k in range(n):
        p = k
        best = abs(ah[k, k])
        for i in range(k + 1, n):
            v = abs(ah[i, k])
            if v > best:
                best = v
                p = i
        if best == 0.0:
            return 0.0, 0.0, 1
        if p != k:
            for j in range(k, n):
                th, tl = ah[k, j], al[k, j]
                ah[k, j], al[k, j] = ah[p, j], al[p, j]
                ah[p, j], al[p, j] = th, tl
            dh = -dh
            dl = -dl
        dh, dl = dd_mul(dh, dl, ah[k, k], al[k, k])
        for i in range(k + 1, n):
            mh, ml = dd_div(ah[i, k], al[i, k], ah[k, k], al[k, k])
            for j in range(k + 1, n):
                th, tl = dd_mul(mh, ml, ah[k, j], al[k, j])
                ah[i, j], al[i, j] = dd_add(ah[i, j], al[i, j], -th, -tl)
    return dh, dl, 0


def _det_dd_numpy(ah, al):
    n = ah.shape[0]
    dh, dl = 1.0, 0.0
    for k in range(n):
        p = k + int(np.argmax(np.abs(ah[k:, k])))
        if ah[p, k] == 0.0:
            return 0.0, 0.0, 1
        if p != k:
            ah[[k, p], k:] = ah[[p, k], k:]
            al[[k, p], k:] = al[[p, k], k:]
            dh, dl = -dh, -dl
        dh, dl = dd_mul(dh, dl, ah[k, k], al[k, k])
        if k + 1 < n:
            mh, ml = dd_div(ah[k + 1 :, k], al[k + 1 :, k], ah[k, k], al[k, k])
            th, tl = dd_mul(
                mh[:, None], ml[:, None], ah[k, k + 1 :][None, :], al[k, k + 1 :][None, :]
            )
            ah[k + 1 :, k + 1 :], al[k + 1 :, k + 1 :] = dd_add(
                ah[k + 1 :, k + 1 :], al[k + 1 :, k + 1 :], -th, -tl
            )
    return float(dh), float(dl), 0


def _cdd_mul(arh, arl, aih, ail, brh, brl, bih, bil):
    """(a_re + i a_im)(b_re + i b_im) in double-double components."""
    p1h, p1l = dd_mul(arh, arl, brh, brl)
    p2h, p2l = dd_mul(aih, ail, bih, bil)
    reh, rel = dd_add(p1h, p1l, -p2h, -p2l)
    p3h, p3l = dd_mul(arh, arl, bih, bil)
    p4h, p4l = dd_mul(aih, ail, brh, brl)
    imh, iml = dd_add(p3h, p3l, p4h, p4l)
    return reh, rel, imh, iml


def _cdd_div(arh, arl, aih, ail, brh, brl, bih, bil):
    """Complex double-double division via a * conj(b) / |b|^2."""
    d1h, d1l = dd_mul(brh, brl, brh, brl)
    d2h, d2l = dd_mul(bih, bil, bih, bil)
    denh, denl = dd_add(d1h, d1l, d2h, d2l)
    nrh, nrl, nih, nil = _cdd_mul(arh, arl, aih, ail, brh, brl, -bih, -bil)
    reh, rel = dd_div(nrh, nrl, denh, denl)
    imh, iml = dd_div(nih, nil, denh, denl)
    return reh, rel, imh, iml


def _det_zdd_loops(arh, arl, aih, ail):
    """Complex double-double LU determinant (pivot on |re hi| + |im hi|)."""
    n = arh.shape[0]
    drh, drl, dih, dil = 1.0, 0.0, 0.0, 0.0
    for k in range(n):
        p = k
        best = abs(arh[k, k]) + abs(aih[k, k])
        for i in range(k + 1, n):
            v = abs(arh[i, k]) + abs(aih[i, k])
            if v > best:
                best = v
                p = i
        if best == 0.0:
            return 0.0, 0.0, 0.0, 0.0, 1
        if p != k:
            for j in range(k, n):
                t1, t2, t3, t4 = arh[k, j], arl[k, j], aih[k, j], ail[k, j]
                arh[k, j], arl[k, j], aih[k, j], ail[k, j] = (
                    arh[p, j],
                    arl[p, j],
                    aih[p, j],
                    ail[p, j],
                )
                arh[p, j], arl[p, j], aih[p, j], ail[p, j] = t1, t2, t3, t4
            drh, drl, dih, dil = -drh, -drl, -dih, -dil
        drh, drl, dih, dil = _cdd_mul(
            drh, drl, dih, dil, arh[k, k], arl[k, k], aih[k, k], ail[k, k]
        )
        for i in range(k + 1, n):
            mrh, mrl, mih, mil = _cdd_div(
                arh[i, k], arl[i, k], aih[i, k], ail[i, k],
                arh[k, k], arl[k, k], aih[k, k], ail[k, k],
            )
            for j in range(k + 1, n):
                trh, trl, tih, til = _cdd_mul(
                    mrh, mrl, mih, mil, arh[k, j], arl[k, j], aih[k, j], ail[k, j]
                )
                arh[i, j], arl[i, j] = dd_add(arh[i, j], arl[i, j], -trh, -trl)
                aih[i, j], ail[i, j] = dd_add(aih[i, j], ail[i, j], -tih, -til)
    return drh, drl, dih, dil, 0


def _det_zdd_numpy(arh, arl, aih, ail):
    n = arh.shape[0]
    drh, drl, dih, dil = 1.0, 0.0, 0.0, 0.0
    for k in range(n):
        p = k + int(np.argmax(np.abs(arh[k:, k]) + np.abs(aih[k:, k])))
        if abs(arh[p, k]) + abs(aih[p, k]) == 0.0:
            return 0.0, 0.0, 0.0, 0.0, 1
        if p != k:
            for m in (arh, arl, aih, ail):
                m[[k, p], k:] = m[[p, k], k:]
            drh, drl, dih, dil = -drh, -drl, -dih, -dil
        drh, drl, dih, dil = _cdd_mul(
            drh, drl, dih, dil, arh[k, k], arl[k, k], aih[k, k], ail[k, k]
        )
        if k + 1 < n:
            mrh, mrl, mih, mil = _cdd_div(
                arh[k + 1 :, k], arl[k + 1 :, k], aih[k + 1 :, k], ail[k + 1 :, k],
                arh[k, k], arl[k, k], aih[k, k], ail[k, k],
            )
            trh, trl, tih, til = _cdd_mul(
                mrh[:, None], mrl[:, None], mih[:, None], mil[:, None],
                arh[k, k + 1 :][None, :], arl[k, k + 1 :][None, :],
                aih[k, k + 1 :][None, :], ail[k, k + 1 :][None, :],
            )
            arh[k + 1 :, k + 1 :], arl[k + 1 :, k + 1 :] = dd_add(
                arh[k + 1 :, k + 1 :], arl[k + 1 :, k + 1 :], -trh, -trl
            )
            aih[k + 1 :, k + 1 :], ail[k + 1 :, k + 1 :] = dd_add(
                aih[k + 1 :, k + 1 :], ail[k + 1 :, k + 1 :], -tih, -til
            )
    return float(drh), float(drl), float(dih), float(dil), 0


def _solve_colpiv_loops(ah, al, bh, bl):
    """Solve A x = b by column-pivoted elimination in double-double.

    Column swaps permute the unknowns; the permutation is undone before
    returning.  Also returns the largest/smallest pivot magnitudes as a crude
    condition estimate.
    """
    n = ah.shape[0]
    perm = np.arange(n)
    xh = np.zeros(n)
    xl = np.zeros(n)
    pivmax = 0.0
    pivmin = np.inf
    for k in range(n):
        p = k
        best = abs(ah[k, k])
        for j in range(k + 1, n):
            v = abs(ah[k, j])
            if v > best:
                best = v
                p = j
        if best == 0.0:
            return xh, xl, pivmax, 0.0, 1
        if p != k:
            for i in range(n):
                th, tl = ah[i, k], al[i, k]
                ah[i, k], al[i, k] = ah[i, p], al[i, p]
                ah[i, p], al[i, p] = th, tl
            t = perm[k]
            perm[k] = perm[p]
            perm[p] = t
        if best > pivmax:
            pivmax = best
        if best < pivmin:
            pivmin = best
        for i in range(k + 1, n):
            mh, ml = dd_div(ah[i, k], al[i, k], ah[k, k], al[k, k])
            for j in range(k + 1, n):
                th, tl = dd_mul(mh, ml, ah[k, j], al[k, j])
                ah[i, j], al[i, j] = dd_add(ah[i, j], al[i, j], -th, -tl)
            th, tl = dd_mul(mh, ml, bh[k], bl[k])
            bh[i], bl[i] = dd_add(bh[i], bl[i], -th, -tl)
    for k in range(n - 1, -1, -1):
        sh, sl = bh[k], bl[k]
        for j in range(k + 1, n):
            th, tl = dd_mul(ah[k, j], al[k, j], xh[perm[j]], xl[perm[j]])
            sh, sl = dd_add(sh, sl, -th, -tl)
        qh, ql = dd_div(sh, sl, ah[k, k], al[k, k])
        xh[perm[k]] = qh
        xl[perm[k]] = ql
    return xh, xl, pivmax, pivmin, 0


def _solve_colpiv_numpy(ah, al, bh, bl):
    n = ah.shape[0]
    perm = np.arange(n)
    xh = np.zeros(n)
    xl = np.zeros(n)
    pivmax, pivmin = 0.0, np.inf
    for k in range(n):
        p = k + int(np.argmax(np.abs(ah[k, k:])))
        best = abs(ah[k, p])
        if best == 0.0:
            return xh, xl, pivmax, 0.0, 1
        if p != k:
            ah[:, [k, p]] = ah[:, [p, k]]
            al[:, [k, p]] = al[:, [p, k]]
            perm[[k, p]] = perm[[p, k]]
        pivmax = max(pivmax, best)
        pivmin = min(pivmin, best)
        if k + 1 < n:
            mh, ml = dd_div(ah[k + 1 :, k], al[k + 1 :, k], ah[k, k], al[k, k])
            th, tl = dd_mul(
                mh[:, None], ml[:, None], ah[k, k + 1 :][None, :], al[k, k + 1 :][None, :]
            )
            ah[k + 1 :, k + 1 :], al[k + 1 :, k + 1 :] = dd_add(
                ah[k + 1 :, k + 1 :], al[k + 1 :, k + 1 :], -th, -tl
            )
            th, tl = dd_mul(mh, ml, bh[k], bl[k])
            bh[k + 1 :], bl[k + 1 :] = dd_add(bh[k + 1 :], bl[k + 1 :], -th, -tl)
    for k in range(n - 1, -1, -1):
        sh, sl = bh[k], bl[k]
        for j in range(k + 1, n):
            th, tl = dd_mul(ah[k, j], al[k, j], xh[perm[j]], xl[perm[j]])
            sh, sl = dd_add(sh, sl, -th, -tl)
        xh[perm[k]], xl[perm[k]] = dd_div(sh, sl, ah[k, k], al[k, k])
    return xh, xl, pivmax, pivmin, 0


def _inv_dd_loops(ah, al):
    """Matrix inverse by Gauss-Jordan with partial row pivoting, double-double."""
    n = ah.shape[0]
    xh = np.zeros((n, n))
    xl = np.zeros((n, n))
    for i in range(n):
        xh[i, i] = 1.0
    for k in range(n):
        p = k
        best = abs(ah[k, k])
        for i in range(k + 1, n):
            v = abs(ah[i, k])
            if v > best:
                best = v
                p = i
        if best == 0.0:
            return xh, xl, 1
        if p != k:
            for j in range(n):
                th, tl = ah[k, j], al[k, j]
                ah[k, j], al[k, j] = ah[p, j], al[p, j]
                ah[p, j], al[p, j] = th, tl
                th, tl = xh[k, j], xl[k, j]
                xh[k, j], xl[k, j] = xh[p, j], xl[p, j]
                xh[p, j], xl[p, j] = th, tl
        ph, pl = ah[k, k], al[k, k]
        for j in range(n):
            ah[k, j], al[k, j] = dd_div(ah[k, j], al[k, j], ph, pl)
            xh[k, j], xl[k, j] = dd_div(xh[k, j], xl[k, j], ph, pl)
        for i in range(n):
            if i == k:
                continue
            mh, ml = ah[i, k], al[i, k]
            if mh == 0.0 and ml == 0.0:
                continue
            for j in range(n):
                th, tl = dd_mul(mh, ml, ah[k, j], al[k, j])
                ah[i, j], al[i, j] = dd_add(ah[i, j], al[i, j], -th, -tl)
                th, tl = dd_mul(mh, ml, xh[k, j], xl[k, j])
                xh[i, j], xl[i, j] = dd_add(xh[i, j], xl[i, j], -th, -tl)
    return xh, xl, 0


def _inv_dd_numpy(ah, al):
    n = ah.shape[0]
    xh = np.eye(n)
    xl = np.zeros((n, n))
    for k in range(n):
        p = k + int(np.argmax(np.abs(ah[k:, k])))
        if ah[p, k] == 0.0:
            return xh, xl, 1
        if p != k:
            ah[[k, p]] = ah[[p, k]]
            al[[k, p]] = al[[p, k]]
            xh[[k, p]] = xh[[p, k]]
            xl[[k, p]] = xl[[p, k]]
        ph, pl = ah[k, k], al[k, k]
        ah[k], al[k] = dd_div(ah[k], al[k], ph, pl)
        xh[k], xl[k] = dd_div(xh[k], xl[k], ph, pl)
        rows = np.arange(n) != k
        mh = ah[rows, k].copy()
        ml = al[rows, k].copy()
        th, tl = dd_mul(mh[:, None], ml[:, None], ah[k][None, :], al[k][None, :])
        ah[rows], al[rows] = dd_add(ah[rows], al[rows], -th, -tl)
        th, tl = dd_mul(mh[:, None], ml[:, None], xh[k][None, :], xl[k][None, :])
        xh[rows], xl[rows] = dd_add(xh[rows], xl[rows], -th, -tl)
    return xh, xl, 0


_cdd_mul = jit(_cdd_mul)
_cdd_div = jit(_cdd_div)
_det_dd_loops = jit(_det_dd_loops)
_det_zdd_loops = jit(_det_zdd_loops)
_solve_colpiv_loops = jit(_solve_colpiv_loops)
_inv_dd_loops = jit(_inv_dd_loops)

if NUMBA_ENABLED:
    det_dd = _det_dd_loops
    det_zdd = _det_zdd_loops
    solve_colpiv_dd = _solve_colpiv_loops
    inv_dd = _inv_dd_loops
else:
    det_dd = _det_dd_numpy
    det_zdd = _det_zdd_numpy
    solve_colpiv_dd = _solve_colpiv_numpy
    inv_dd = _inv_dd_numpy
