"""Symmetric eigensolver and eigenvalue-ratio bounds from trace statistics.

The eigensolver is a cyclic Jacobi iteration with a threshold skip.  It is
deliberately self-contained: eigenvalues computed here get cross-checked
against exact characteristic-polynomial roots elsewhere, so the two routes
must not share code.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import BadParamsError, DomainError, NoConvergenceError

__all__ = [
    "SymmetricMatrix",
    "EigenDecomposition",
    "TraceStats",
    "jacobi_eigh",
    "trace_stats",
    "ratio_lower_from_traces",
    "ratio_upper_from_traces",
]

DEFAULT_TOL = 1e-12
MAX_SWEEPS = 30


@dataclass(frozen=True)
class SymmetricMatrix:
    """Packed upper triangle (row-major, diagonal included) of a real
    symmetric matrix."""

    n: int
    packed: tuple[float, ...]

    def __post_init__(self):
        want = self.n * (self.n + 1) // 2
        if self.n < 1 or len(self.packed) != want:
            raise BadParamsError(
                f"packed length {len(self.packed)} does not match n={self.n}"
            )

    @classmethod
    def from_rows(cls, rows, sym_tol: float = 1e-9) -> "SymmetricMatrix":
        a = np.asarray(rows, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise BadParamsError(f"matrix shape {a.shape} is not square")
        scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
        if float(np.max(np.abs(a - a.T))) > sym_tol * scale:
            raise BadParamsError("matrix is not symmetric within tolerance")
        a = (a + a.T) / 2
        n = a.shape[0]
        packed = tuple(float(a[i, j]) for i in range(n) for j in range(i, n))
        return cls(n, packed)

    def entry(self, i: int, j: int) -> float:
        if i > j:
            i, j = j, i
        return self.packed[i * self.n - i * (i - 1) // 2 + (j - i)]

    def to_array(self) -> np.ndarray:
        a = np.zeros((self.n, self.n))
        k = 0
        for i in range(self.n):
            for j in range(i, self.n):
                a[i, j] = a[j, i] = self.packed[k]
                k += 1
        return a


@dataclass(frozen=True)
class EigenDecomposition:
    """Eigenvalues in descending order; vectors[:, k] pairs with values[k]."""

    values: tuple[float, ...]
    vectors: np.ndarray = field(repr=False, compare=False)
    sweeps: int
    off_norm: float


def _as_symmetric_array(matrix) -> np.ndarray:
    if isinstance(matrix, SymmetricMatrix):
        return matrix.to_array()
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise BadParamsError(f"matrix shape {a.shape} is not square")
    scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
    if float(np.max(np.abs(a - a.T))) > 1e-9 * scale:
        raise BadParamsError("matrix is not symmetric within tolerance")
    return (a + a.T) / 2


def _off_norm(a: np.ndarray) -> float:
    # Direct Frobenius norm of the off-diagonal part.  Subtracting squared
    # norms would cancel catastrophically near convergence.
    off = a - np.diag(np.diag(a))
    return float(np.sqrt((off * off).sum()))


def jacobi_eigh(
    matrix,
    *,
    tol: float = DEFAULT_TOL,
    max_sweeps: int = MAX_SWEEPS,
) -> EigenDecomposition:
    """Full eigendecomposition by cyclic Jacobi rotations.

    Converged when the off-diagonal Frobenius norm drops below
    tol * ||M||_F; raises NoConvergenceError after max_sweeps otherwise.
    """
    a = _as_symmetric_array(matrix)
    n = a.shape[0]
    v = np.eye(n)
    if n == 1:
        return EigenDecomposition((float(a[0, 0]),), v, 0, 0.0)
    norm = float(np.sqrt((a * a).sum()))
    target = tol * norm
    skip = target / n
    sweeps = 0
    off = _off_norm(a)
    while off > target:
        if sweeps >= max_sweeps:
            raise NoConvergenceError(
                f"off-diagonal norm {off:.3e} above target {target:.3e} "
                f"after {sweeps} sweeps"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) <= skip:
                    continue
                app = a[p, p]
                aqq = a[q, q]
                theta = (aqq - app) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                ap = a[p, :].copy()
                aq = a[q, :].copy()
                a[p, :] = c * ap - s * aq
                a[q, :] = s * ap + c * aq
                a[:, p] = a[p, :]
                a[:, q] = a[q, :]
                # Exact 2x2 block update keeps the diagonal consistent.
                a[p, p] = app - t * apq
                a[q, q] = aqq + t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq
        sweeps += 1
        off = _off_norm(a)
    diag = np.diag(a)
    order = np.argsort(-diag, kind="stable")
    values = tuple(float(diag[i]) for i in order)
    return EigenDecomposition(values, v[:, order], sweeps, off)


@dataclass(frozen=True)
class TraceStats:
    """First two normalised trace moments: r = tr(M)/n, s^2 = tr(M^2)/n - r^2."""

    n: int
    r: float
    s: float


def trace_stats(matrix) -> TraceStats:
    a = _as_symmetric_array(matrix)
    n = a.shape[0]
    r = float(np.trace(a)) / n
    # tr(M^2) for symmetric M is the squared Frobenius norm.
    second = float((a * a).sum()) / n
    s2 = second - r * r
    return TraceStats(n, r, math.sqrt(max(0.0, s2)))


def ratio_lower_from_traces(stats: TraceStats) -> float:
    """Lower bound on eigenvalue ratio of a positive definite matrix.

    Even n:  1 + 2s / (r - s/sqrt(n-1))
    Odd n:   1 + (2sn/sqrt(n^2-1)) / (r - s/sqrt(n-1))
    """
    n, r, s = stats.n, stats.r, stats.s
    if n < 2:
        raise DomainError("ratio bound needs n >= 2")
    if r <= 0.0 or s < 0.0:
        raise DomainError(f"moments r={r}, s={s} not from a positive definite matrix")
    den = r - s / math.sqrt(n - 1)
    if den <= 0.0:
        raise DomainError("denominator r - s/sqrt(n-1) is not positive")
    if n % 2 == 0:
        return 1.0 + 2.0 * s / den
    return 1.0 + (2.0 * s * n / math.sqrt(n * n - 1.0)) / den


def ratio_upper_from_traces(stats: TraceStats, det: float) -> float:
    """Upper bound 1 + s*sqrt(2n)*(r + s/sqrt(n-1))^(n-1) / det(M)."""
    n, r, s = stats.n, stats.r, stats.s
    if n < 2:
        raise DomainError("ratio bound needs n >= 2")
    det = float(det)
    if det <= 0.0:
        raise DomainError(f"determinant {det} is not positive")
    if r <= 0.0 or s < 0.0:
        raise DomainError(f"moments r={r}, s={s} not from a positive definite matrix")
    return 1.0 + s * math.sqrt(2.0 * n) * (r + s / math.sqrt(n - 1)) ** (n - 1) / det
