"""Laplacian spectrum and the algebraic (Shannon) entropy of an ubergraph."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import Ubergraph
from .errors import DegenerateDistribution, NegativeEigenvalue, NoConvergence, NotSymmetric
from .matrices import LabeledMatrix, laplacian

CLAMP = 1e-9
TOL = 1e-12
MAX_SWEEPS = 100


def symmetric_eigenvalues(s: LabeledMatrix | np.ndarray, *, tol: float = TOL,
                          max_sweeps: int = MAX_SWEEPS) -> list[float]:
    """All eigenvalues of a real symmetric matrix, descending, by cyclic Jacobi.

    Each sweep zeroes every off-diagonal pair (p, q) in row order with one
    rotation. Stops once the off-diagonal Frobenius norm drops below
    ``tol * (1 + ||S||_F)``.
    """
    a = np.array(s.data if isinstance(s, LabeledMatrix) else s, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise NotSymmetric(f"matrix of shape {a.shape} is not square")
    if not np.array_equal(a, a.T):
        raise NotSymmetric("matrix is not symmetric")
    n = a.shape[0]
    bound = tol * (1.0 + np.linalg.norm(a))

    def off(x):
        return float(np.linalg.norm(x - np.diag(np.diag(x))))

    sweeps = 0
    while off(a) >= bound:
        if sweeps == max_sweeps:
            raise NoConvergence(f"off-diagonal norm {off(a):.3e} after {max_sweeps} sweeps")
        for p in range(n - 1):
            for q in range(p + 1, n):
                if a[p, q] != 0.0:
                    _rotate(a, p, q)
        sweeps += 1
    return sorted((float(x) for x in np.diag(a)), reverse=True)


def _rotate(a: np.ndarray, p: int, q: int) -> None:
    # Symmetric Schur decomposition of the (p, q) block, then A <- J^T A J.
    h = a[q, q] - a[p, p]
    if abs(h) > 1e100 * abs(a[p, q]):
        t = a[p, q] / h  # theta * theta would overflow; t ~ 1 / (2 theta)
    else:
        theta = h / (2.0 * a[p, q])
        t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c
    ap, aq = a[:, p].copy(), a[:, q].copy()
    a[:, p] = c * ap - s * aq
    a[:, q] = s * ap + c * aq
    rp, rq = a[p, :].copy(), a[q, :].copy()
    a[p, :] = c * rp - s * rq
    a[q, :] = s * rp + c * rq
    a[p, q] = a[q, p] = 0.0


@dataclass(frozen=True)
class SpectralReport:
    raw_eigenvalues: tuple[float, ...]
    eigenvalues: tuple[float, ...]
    trace: int
    distribution: tuple[float, ...]
    entropy: float

    def to_text(self) -> str:
        def row(xs):
            return " ".join(_fixed(x) for x in xs)

        return (f"eigenvalues: {row(self.eigenvalues)}\n"
                f"trace: {self.trace}\n"
                f"distribution: {row(self.distribution)}\n"
                f"entropy: {_fixed(self.entropy)} bits\n")


def _fixed(x: float) -> str:
    out = f"{x:.6f}"
    return "0.000000" if out == "-0.000000" else out


def spectral_entropy(eigenvalues, trace: float) -> tuple[tuple[float, ...], float]:
    """Normalize by ``trace`` and return ``(distribution, entropy in bits)``."""
    mu = tuple(lam / trace for lam in eigenvalues)
    h = -sum(p * math.log2(p) for p in mu if p > 0.0)
    return mu, max(h, 0.0)


def entropy(u: Ubergraph) -> SpectralReport:
    lap = laplacian(u)
    trace = int(np.trace(lap.data))
    if trace == 0:
        raise DegenerateDistribution("Laplacian trace is 0: no two nodes are adjacent")
    raw = symmetric_eigenvalues(lap)
    if raw[-1] < -CLAMP:
        raise NegativeEigenvalue(f"eigenvalue {raw[-1]:.3e} is below -{CLAMP:g}")
    lams = tuple(0.0 if lam < 0.0 else lam for lam in raw)
    mu, h = spectral_entropy(lams, trace)
    return SpectralReport(tuple(raw), lams, trace, mu, h)
