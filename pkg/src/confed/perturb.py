"""Structured backward-error injection: (deltaH, deltaU, deltaW) with exact norms.

The perturbation acts on the raw factors of C = H + u w^T, so the perturbed
matrix is (H + deltaH) + (u + deltaU)(w + deltaW)^T.  Norms are spectral for
the matrix part and Euclidean for the vectors, rescaled to the requested
values exactly (up to one rounding).  All randomness flows through seeded
numpy PCG64 generators; identical seeds give bitwise identical output.
"""

from dataclasses import dataclass

import numpy as np

from .linearize import ConfederateParts

STRUCTURES = ("dense", "symmetric", "matchH")


@dataclass(frozen=True)
class Perturbation:
    deltaH: np.ndarray
    deltaU: np.ndarray
    deltaW: np.ndarray
    epsH: float
    eps1: float
    epsC: float

    def __post_init__(self):
        for a in (self.deltaH, self.deltaU, self.deltaW):
            a.flags.writeable = False


def trial_rng(seed: int, trial: int = 0) -> np.random.Generator:
    """Per-trial generator: PCG64 seeded with seed XOR trial index."""
    return np.random.Generator(np.random.PCG64(int(seed) ^ int(trial)))


def _rescale_matrix(x: np.ndarray, eps: float) -> np.ndarray:
    if eps == 0.0:
        return np.zeros_like(x)
    return x * (eps / np.linalg.norm(x, 2))


def _rescale_vector(x: np.ndarray, eps: float) -> np.ndarray:
    if eps == 0.0:
        return np.zeros_like(x)
    return x * (eps / np.linalg.norm(x))


def random_perturbation(rng: np.random.Generator, n: int, epsH: float, eps1: float,
                        epsC: float, structure: str = "dense") -> Perturbation:
    """Gaussian directions rescaled to the exact requested 2-norms.

    structure: 'dense' leaves deltaH full; 'symmetric' symmetrizes it before
    rescaling; 'matchH' zeroes entries outside the tridiagonal pattern of a
    comrade H.  Draw order is fixed (H, then u, then w) so a given seed
    always yields the same perturbation.
    """
    if structure not in STRUCTURES:
        raise ValueError(f"unknown structure {structure!r}")
    if min(epsH, eps1, epsC) < 0.0:
        raise ValueError("perturbation norms must be nonnegative")
    dh = rng.standard_normal((n, n))
    du = rng.standard_normal(n)
    dw = rng.standard_normal(n)
    if structure == "symmetric":
        dh = 0.5 * (dh + dh.T)
    elif structure == "matchH":
        i, j = np.indices((n, n))
        dh[np.abs(i - j) > 1] = 0.0
    return Perturbation(
        deltaH=_rescale_matrix(dh, epsH),
        deltaU=_rescale_vector(du, eps1),
        deltaW=_rescale_vector(dw, epsC),
        epsH=float(epsH),
        eps1=float(eps1),
        epsC=float(epsC),
    )


def apply_perturbation(parts: ConfederateParts, pert: Perturbation) -> np.ndarray:
    """Dense C + deltaC = (H + deltaH) + (u + deltaU)(w + deltaW)^T, composed exactly."""
    if pert.deltaH.shape != parts.H.shape:
        raise ValueError("perturbation dimension mismatch")
    return (parts.H + pert.deltaH) + np.outer(parts.u + pert.deltaU, parts.w + pert.deltaW)


def random_unbalanced_poly(rng: np.random.Generator, n: int) -> np.ndarray:
    """Unbalanced coefficients c_j = g_j * 3^(5.5 h_j), g, h ~ N(0, 1).

    Returns the n non-leading coefficients of a polynomial monic in the
    working basis (leading coefficient 1 is implicit).
    """
    if n < 2:
        raise ValueError("need degree >= 2")
    g = rng.standard_normal(n)
    h = rng.standard_normal(n)
    return g * 3.0 ** (5.5 * h)
