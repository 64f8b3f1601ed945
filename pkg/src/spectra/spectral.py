"""Laplacian spectra, the spectral ratio, and closed forms for named trees.

Numeric spectra come from the Jacobi solver in linalg; exact characteristic
polynomials come from intpoly.  Both routes are kept independent so each can
verify the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BadParamsError,
    BadPartitionError,
    DisconnectedError,
    InvalidShiftError,
)
from .graphs import Graph, is_connected
from .intpoly import IntPolynomial, char_poly_exact, det_bareiss
from .linalg import jacobi_eigh

__all__ = [
    "Spectrum",
    "RatioResult",
    "QuotientResult",
    "AlphaShift",
    "laplacian",
    "spectrum",
    "spectral_ratio",
    "laplacian_char_poly",
    "spanning_tree_count",
    "complement_spectrum",
    "kirchhoff_index",
    "quotient",
    "check_interlacing",
    "make_alpha_shift",
    "path_ratio",
    "star_ratio",
    "path_spectrum_values",
    "cycle_spectrum_values",
    "caterpillar_closed_form",
    "broom_char_poly",
    "t_star_char_poly",
    "t_star_closed_form",
]

# Eigenvalues this close to zero are treated as zero (kernel of L).
ZERO_EIG_TOL = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Laplacian eigenvalues in descending order."""

    values: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def mu1(self) -> float:
        return self.values[0]

    @property
    def alg_conn(self) -> float:
        if self.n < 2:
            raise BadParamsError("algebraic connectivity needs n >= 2")
        return self.values[-2]

    @property
    def ratio(self) -> float:
        a = self.alg_conn
        if a <= ZERO_EIG_TOL:
            raise DisconnectedError("zero algebraic connectivity, ratio undefined")
        return self.mu1 / a


@dataclass(frozen=True)
class RatioResult:
    mu1: float
    alg_conn: float
    ratio: float


@dataclass(frozen=True)
class QuotientResult:
    """Equitable-style quotient of a symmetric matrix under a partition."""

    matrix: np.ndarray = field(repr=False, compare=False)
    values: tuple[float, ...]
    sizes: tuple[int, ...]


@dataclass(frozen=True)
class AlphaShift:
    """Rank-one shift L + alpha*J; valid when alg_conn <= n*alpha <= mu1."""

    alpha: float
    valid: bool


def laplacian(g: Graph) -> np.ndarray:
    lap = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        lap[u, u] += 1
        lap[v, v] += 1
        lap[u, v] -= 1
        lap[v, u] -= 1
    return lap


def spectrum(g: Graph) -> Spectrum:
    """Numeric Laplacian spectrum, memoised on the graph."""
    spec = g._cache.get("spectrum")
    if spec is None:
        dec = jacobi_eigh(laplacian(g))
        spec = Spectrum(dec.values)
        g._cache["spectrum"] = spec
    return spec


def spectral_ratio(g: Graph) -> RatioResult:
    """mu1 / alg_conn for a connected graph on >= 2 vertices."""
    if g.n < 2:
        raise BadParamsError("spectral ratio needs n >= 2")
    if not is_connected(g):
        raise DisconnectedError("spectral ratio undefined for disconnected graphs")
    spec = spectrum(g)
    return RatioResult(spec.mu1, spec.alg_conn, spec.mu1 / spec.alg_conn)


def laplacian_char_poly(g: Graph) -> IntPolynomial:
    """Exact characteristic polynomial det(xI - L), memoised on the graph."""
    poly = g._cache.get("char_poly")
    if poly is None:
        poly = char_poly_exact(laplacian(g))
        g._cache["char_poly"] = poly
    return poly


def spanning_tree_count(g: Graph) -> int:
    """Exact spanning-tree count: any cofactor of the Laplacian."""
    tau = g._cache.get("tau")
    if tau is None:
        if g.n == 1:
            tau = 1
        else:
            lap = laplacian(g)
            minor = [
                [int(lap[i, j]) for j in range(g.n - 1)] for i in range(g.n - 1)
            ]
            tau = det_bareiss(minor)
        g._cache["tau"] = tau
    return tau


def complement_spectrum(g: Graph) -> Spectrum:
    """Spectrum of the complement: {0} union {n - mu_i : i < n-1}, descending."""
    spec = spectrum(g)
    n = g.n
    values = sorted((n - v for v in spec.values[: n - 1]), reverse=True)
    values.append(0.0)
    return Spectrum(tuple(values))


def kirchhoff_index(g: Graph) -> float:
    """Kf(G) = n * sum of reciprocal nonzero Laplacian eigenvalues."""
    if not is_connected(g):
        raise DisconnectedError("Kirchhoff index undefined for disconnected graphs")
    if g.n == 1:
        return 0.0
    spec = spectrum(g)
    return g.n * sum(1.0 / v for v in spec.values[: g.n - 1])


def quotient(matrix, partition) -> QuotientResult:
    """Quotient matrix of a symmetric matrix under a vertex partition.

    Eigenvalues are computed on the symmetrised form D^(1/2) B D^(-1/2)
    with D = diag(class sizes), which shares the spectrum of B.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise BadPartitionError(f"matrix shape {a.shape} is not square")
    n = a.shape[0]
    classes = [list(part) for part in partition]
    if not classes or any(not part for part in classes):
        raise BadPartitionError("partition classes must be nonempty")
    seen: set[int] = set()
    for part in classes:
        for v in part:
            if not 0 <= v < n or v in seen:
                raise BadPartitionError(f"vertex {v} repeated or out of range")
            seen.add(v)
    if len(seen) != n:
        raise BadPartitionError("partition does not cover every vertex")
    t = len(classes)
    b = np.zeros((t, t))
    sizes = tuple(len(part) for part in classes)
    for i, pi in enumerate(classes):
        for j, pj in enumerate(classes):
            b[i, j] = a[np.ix_(pi, pj)].sum() / sizes[i]
    root = np.sqrt(np.array(sizes, dtype=float))
    sym = b * root[:, None] / root[None, :]
    dec = jacobi_eigh(sym)
    return QuotientResult(b, dec.values, sizes)


def check_interlacing(
    host_values, quotient_values, tol: float = 1e-8
) -> bool:
    """Cauchy interlacing: xi_i >= eta_i >= xi_(n-m+i), within tol."""
    xs = sorted(host_values, reverse=True)
    es = sorted(quotient_values, reverse=True)
    n, m = len(xs), len(es)
    if m > n:
        raise BadParamsError("quotient larger than host")
    for i, eta in enumerate(es):
        if eta > xs[i] + tol:
            return False
        if eta < xs[n - m + i] - tol:
            return False
    return True


def make_alpha_shift(g: Graph, alpha: float | None = None) -> AlphaShift:
    """Shift for L + alpha*J.  Default alpha centres n*alpha in the spectrum
    gap [alg_conn, mu1]; validity is checked against the computed spectrum."""
    rr = spectral_ratio(g)
    if alpha is None:
        alpha = (rr.mu1 + rr.alg_conn) / (2.0 * g.n)
    na = g.n * alpha
    valid = rr.alg_conn - 1e-9 <= na <= rr.mu1 + 1e-9
    return AlphaShift(float(alpha), valid)


# ---------------------------------------------------------------------------
# Closed forms.

def path_ratio(n: int) -> float:
    if n < 3:
        raise BadParamsError(f"path ratio needs n >= 3, got {n}")
    c = math.cos(math.pi / n)
    return (1.0 + c) / (1.0 - c)


def star_ratio(n: int) -> float:
    if n < 3:
        raise BadParamsError(f"star ratio needs n >= 3, got {n}")
    return float(n)


def path_spectrum_values(n: int) -> tuple[float, ...]:
    """Eigenvalues 2 - 2cos(k*pi/n), k = n-1..0, descending."""
    if n < 1:
        raise BadParamsError(f"path needs n >= 1, got {n}")
    return tuple(2.0 - 2.0 * math.cos(math.pi * k / n) for k in range(n - 1, -1, -1))


def cycle_spectrum_values(n: int) -> tuple[float, ...]:
    """Eigenvalues 2 - 2cos(2*pi*k/n), each k in 0..n-1, descending."""
    if n < 3:
        raise BadParamsError(f"cycle needs n >= 3, got {n}")
    vals = [2.0 - 2.0 * math.cos(2.0 * math.pi * k / n) for k in range(n)]
    return tuple(sorted(vals, reverse=True))


def caterpillar_closed_form(max_deg: int, diam: int) -> RatioResult:
    """Extreme Laplacian eigenvalues of the balanced caterpillar.

    Valid for max_deg >= 3, diam >= 3 with (max_deg-1)*(diam-1) >= 5.
    """
    if max_deg < 3 or diam < 3:
        raise BadParamsError("caterpillar closed form needs max_deg >= 3, diam >= 3")
    n = (max_deg - 1) * (diam - 1)
    if n < 5:
        raise BadParamsError(f"caterpillar closed form needs n >= 5, got n={n}")
    c = math.cos(math.pi / (diam - 1))
    d = float(max_deg)
    mu1 = (d + 1 + 2 * c + math.sqrt((d - 1 + 2 * c) ** 2 + 4 * (d - 2))) / 2.0
    alg = (d + 1 - 2 * c - math.sqrt((d - 1 - 2 * c) ** 2 + 4 * (d - 2))) / 2.0
    return RatioResult(mu1, alg, mu1 / alg)


def _path_determinant_poly(k: int) -> IntPolynomial:
    """D_k = sum_{i=0}^{k} (-1)^i C(2k-i, i) x^(k-i)."""
    coeffs = [0] * (k + 1)
    for i in range(k + 1):
        coeffs[k - i] = (-1) ** i * math.comb(2 * k - i, i)
    return IntPolynomial(tuple(coeffs))


def broom_char_poly(n: int, t: int) -> IntPolynomial:
    """Exact Laplacian characteristic polynomial of the broom:

    (x-1)^(t-1) * (x^2-(t+2)x+1) * D_(n-t-1) - (x-1)^t * D_(n-t-2)
    """
    if n < 3 or not 1 <= t <= n - 2:
        raise BadParamsError(f"broom needs n >= 3 and 1 <= t <= n-2, got n={n}, t={t}")
    xm1 = IntPolynomial((-1, 1))
    head = IntPolynomial((1, -(t + 2), 1))
    first = (xm1 ** (t - 1)) * head * _path_determinant_poly(n - t - 1)
    second = (xm1 ** t) * _path_determinant_poly(n - t - 2)
    return first - second


def t_star_char_poly(n: int) -> IntPolynomial:
    """x(x-2)(x^2-3x+1)^(n/2-2) * (x^2-(n/2+2)x+n/2), exact."""
    if n < 6 or n % 2:
        raise BadParamsError(f"t_star needs even n >= 6, got {n}")
    half = n // 2
    poly = IntPolynomial((0, 1)) * IntPolynomial((-2, 1))
    poly = poly * (IntPolynomial((1, -3, 1)) ** (half - 2))
    return poly * IntPolynomial((half, -(half + 2), 1))


def t_star_closed_form(n: int) -> RatioResult:
    """mu1 from x^2-(n/2+2)x+n/2, alg_conn = (3-sqrt(5))/2."""
    if n < 6 or n % 2:
        raise BadParamsError(f"t_star needs even n >= 6, got {n}")
    half = n / 2.0
    mu1 = (half + 2 + math.sqrt((half + 2) ** 2 - 4 * half)) / 2.0
    alg = (3.0 - math.sqrt(5.0)) / 2.0
    return RatioResult(mu1, alg, mu1 / alg)
