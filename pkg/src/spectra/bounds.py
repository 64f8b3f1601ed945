"""Bounds and conditional statements about the Laplacian spectral ratio.

Every evaluator returns a BoundReport.  Caller errors (wrong object kind,
disconnected input, bad sets) raise; a bound that is merely inapplicable to
this particular graph (not regular, has a triangle, complement disconnected)
comes back with applicable=False and a reason string instead.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadSetsError, DomainError, InvalidShiftError, NotATreeError
from .graphs import Graph, complement, is_tree, metrics
from .linalg import ratio_lower_from_traces, ratio_upper_from_traces, trace_stats
from .spectral import (
    complement_spectrum,
    kirchhoff_index,
    laplacian,
    make_alpha_shift,
    path_ratio,
    spanning_tree_count,
    spectral_ratio,
    spectrum,
)

__all__ = [
    "BoundReport",
    "COMPARISON_TOL",
    "goldberg_degree_lower",
    "haemers_diameter_bound",
    "haemers_cut_density",
    "kantorovich_kirchhoff_upper",
    "alpha_shift_lower",
    "bipartite_zagreb_lower",
    "regular_trianglefree_lower",
    "youliu_regular_lower",
    "alpha_shift_upper",
    "complement_sum_lower",
    "barrett_connectivity_lower",
    "alg_conn_diameter_upper",
    "laplacian_radius_degree_upper",
    "connectivity_diameter_lower",
    "diameter_star_condition",
    "max_degree_star_condition",
    "youliu_star_condition",
    "eccentricity_path_condition",
    "small_diameter_path_condition",
    "degree_diameter_path_condition",
    "all_bounds",
    "tree_condition_checks",
]

COMPARISON_TOL = 1e-8


@dataclass(frozen=True)
class BoundReport:
    """Outcome of evaluating one bound on one graph.

    kind is 'lower', 'upper', or 'conditional'; target names the bounded
    quantity.  For conditionals, value is None and slack is the conclusion
    margin when the hypothesis fired (0.0 otherwise).  holds implies
    applicable.
    """

    name: str
    kind: str
    target: str
    applicable: bool
    holds: bool
    value: float | None
    slack: float | None
    reason: str | None = None
    hypothesis: bool | None = None
    conclusion: bool | None = None


def _lower(name, target, bound, achieved, tol, reason=None) -> BoundReport:
    slack = achieved - bound
    return BoundReport(name, "lower", target, True, slack >= -tol, bound, slack, reason)


def _upper(name, target, bound, achieved, tol, reason=None) -> BoundReport:
    slack = bound - achieved
    return BoundReport(name, "upper", target, True, slack >= -tol, bound, slack, reason)


def _not_applicable(name, kind, target, reason, value=None, slack=None) -> BoundReport:
    return BoundReport(name, kind, target, False, False, value, slack, reason)


def _conditional(name, target, hypothesis, margin, tol) -> BoundReport:
    conclusion = margin > -tol
    holds = (not hypothesis) or conclusion
    slack = margin if hypothesis else 0.0
    return BoundReport(
        name, "conditional", target, True, holds, None, slack,
        None, hypothesis, conclusion,
    )


def _require_tree(g: Graph, name: str) -> None:
    if not is_tree(g):
        raise NotATreeError(f"{name} is defined for trees only")


# ---------------------------------------------------------------------------
# Unconditional bounds for connected graphs.

def goldberg_degree_lower(g: Graph, tol: float = COMPARISON_TOL) -> BoundReport:
    """ratio >= (max_degree + 1) / min_degree for non-complete graphs."""
    rr = spectral_ratio(g)
    met = metrics(g)
    bound = (met.max_degree + 1) / met.min_degree
    if met.m == g.n * (g.n - 1) // 2:
        return _not_applicable(
            "goldberg_degree_lower", "lower", "ratio", "complete_graph",
            bound, rr.ratio - bound,
        )
    return _lower("goldberg_degree_lower", "ratio", bound, rr.ratio, tol)


def haemers_diameter_bound(g: Graph, tol: float = COMPARISON_TOL) -> BoundReport:
    """diameter < 1 + log(2(n-1)) / (log(sqrt(R)+1) - log(sqrt(R)-1))."""
    rr = spectral_ratio(g)
    met = metrics(g)
    if rr.ratio <= 1.0 + tol:
        # Ratio one makes the right side infinite; the statement is vacuous.
        return BoundReport(
            "haemers_diameter_bound", "upper", "diameter",
            True, True, None, None, "ratio_one",
        )
    root = math.sqrt(rr.ratio)
    bound = 1.0 + math.log(2.0 * (g.n - 1)) / (math.log(root + 1.0) - math.log(root - 1.0))
    return _upper("haemers_diameter_bound", "diameter", bound, float(met.diameter), tol)


def haemers_cut_density(g: Graph, xs, ys, tol: float = COMPARISON_TOL) -> BoundReport:
    """|X||Y| / ((n-|X|)(n-|Y|)) <= ((R-1)/(R+1))^2 for non-adjacent X, Y."""
    xset, yset = set(xs), set(ys)
    if not xset or not yset:
        raise BadSetsError("X and Y must be nonempty")
    if xset & yset:
        raise BadSetsError("X and Y must be disjoint")
    for v in xset | yset:
        if not 0 <= v < g.n:
            raise BadSetsError(f"vertex {v} out of range")
    sets = g.adjacency_sets()
    for u in xset:
        if sets[u] & yset:
            raise BadSetsError("X and Y must have no edges between them")
    rr = spectral_ratio(g)
    bound = ((rr.ratio - 1.0) / (rr.ratio + 1.0)) ** 2
    density = len(xset) * len(yset) / ((g.n - len(xset)) * (g.n - len(yset)))
    return _upper("haemers_cut_density", "cut_density", bound, density, tol)


def kantorovich_kirchhoff_upper(g: Graph, tol: float = COMPARISON_TOL) -> BoundReport:
    """Kf <= n(n-1)^2/(8m) * (R + 1/R + 2)."""
    rr = spectral_ratio(g)
    kf = kirchhoff_index(g)
    bound = g.n * (g.n - 1) ** 2 / (8.0 * g.m) * (rr.ratio + 1.0 / rr.ratio + 2.0)
    return _upper("kantorovich_kirchhoff_upper", "kirchhoff", bound, kf, tol)


def _trace_lower(name: str, g: Graph, alpha: float | None, tol: float) -> BoundReport:
    shift = make_alpha_shift(g, alpha)
    if not shift.valid:
        raise InvalidShiftError(
            f"n*alpha = {g.n * shift.alpha:.6g} outside the spectrum gap"
        )
    rr = spectral_ratio(g)
    shifted = laplacian(g) + shift.alpha
    try:
        bound = ratio_lower_from_traces(trace_stats(shifted))
    except DomainError as exc:
        return _not_applicable(name, "lower", "ratio", str(exc))
    return _lower(name, "ratio", bound, rr.ratio, tol)


def alpha_shift_lower(
    g: Graph, alpha: float | None = None, tol: float = COMPARISON_TOL
) -> BoundReport:
    """Trace-moment lower bound on the ratio via L + alpha*J.

    Default alpha centres n*alpha in the gap [alg_conn, mu1]; any alpha with
    alg_conn <= n*alpha <= mu1 is accepted.
    """
    return _trace_lower("alpha_shift_lower", g, alpha, tol)


def bipartite_zagreb_lower(g: Graph, tol: float = COMPARISON_TOL) -> BoundReport:
    """The alpha = Z1/(mn) specialisation, valid on bipartite graphs where
    mu1 >= Z1/m guarantees the shift lands in the gap."""
    met = metrics(g)
    if not met.is_bipartite:
        return _not_applicable(
            "bipartite_zagreb_lower", "lower", "ratio", "not_bipartite"
        )
    alpha = met.zagreb / (met.m * g.n)
    return _trace_lower("bipartite_zagreb_lower", g, alpha, tol)


def regular_trianglefree_lower(g: Graph, tol: float = COMPARISON_TOL) -> BoundReport:
    """Quotient-matrix bound for k-regular triangle-free graphs."""
    name = "regular_trianglefree_lower"
    rr = spectral_ratio(g)
    met = metrics(g)
    if not met.is_regular:
        return _not_applicable(name, "lower", "ratio", "not_regular")
    if not met.is_triangle_free:
        return _not_applicable(name, "lower", "ratio", "has_triangle")
    k, n = met.max_degree, g.n
    if n <= k + 1:
        return _not_applicable(name, "lower", "ratio", "complete_graph")
    disc = 4 * k * n * n - 4 * k * (3 * k + 1) * n + k**4 + 6 * k**3 + 9 * k**2
    if disc < 0:
        return _not_applicable(name, "lower", "ratio", "negative_discriminant")
    base = 2 * k * n - k * k - 3 * k
    den = base - math.sqrt(disc)
    if den <= 0:
        return _not_applicable(name, "lower", "ratio", "nonpositive_denominator")
    bound = (base + math.sqrt(disc)) / den
    return _lower(name, "ratio", bound, rr.ratio, tol)


def youliu_regular_lower(g: Graph, tol: float = COMPARISON_TOL) -> BoundReport:
    """ratio >= (sqrt(c) + sqrt(c-1))^2 with c = (n-1)(k+1)/(nk), k-regular."""
    name = "youliu_regular_lower"
    rr = spectral_ratio(g)
    met = metrics(g)
    if not met.is_regular:
        return _not_applicable(name, "lower", "ratio", "not_regular")
    k, n = met.max_degree, g.n
    c = (n - 1) * (k + 1) / (n * k)
    bound = (math.sqrt(c) + math.sqrt(max(0.0, c - 1.0))) ** 2
    return _lower(name, "ratio", bound, rr.ratio, tol)


def alpha_shift_upper(
    g: Graph, alpha: float | None = None, tol: float = COMPARISON_TOL
) -> BoundReport:
    """Trace-moment upper bound via det(L + alpha*J) = n^2 * alpha * tau."""
    name = "alpha_shift_upper"
    shift = make_alpha_shift(g, alpha)
    if not shift.valid:
        raise InvalidShiftError(
            f"n*alpha = {g.n * shift.alpha:.6g} outside the spectrum gap"
        )
    rr = spectral_ratio(g)
    tau = spanning_tree_count(g)
    det = g.n * g.n * shift.alpha * tau
    shifted = laplacian(g) + shift.alpha
    try:
        bound = ratio_upper_from_traces(trace_stats(shifted), det)
    except DomainError as exc:
        return _not_applicable(name, "upper", "ratio", str(exc))
    return _upper(name, "ratio", bound, rr.ratio, tol)


def complement_sum_lower(g: Graph, tol: float = COMPARISON_TOL) -> BoundReport:
    """R(G) + R(complement) >= (max_deg+1)/min_deg + (n-min_deg)/(n-max_deg-1)."""
    name = "complement_sum_lower"
    rr = spectral_ratio(g)
    met = metrics(g)
    comp = complement(g)
    if not metrics(comp).is_connected:
        return _not_applicable(name, "lower", "ratio_sum", "complement_disconnected")
    cspec = complement_spectrum(g)
    achieved = rr.ratio + cspec.mu1 / cspec.alg_conn
    bound = (met.max_degree + 1) / met.min_degree + (g.n - met.min_degree) / (
        g.n - met.max_degree - 1
    )
    return _lower(name, "ratio_sum", bound, achieved, tol)


# ---------------------------------------------------------------------------
# Tree-only bounds and conditions.

def barrett_connectivity_lower(g: Graph, tol: float = COMPARISON_TOL) -> BoundReport:
    """alg_conn >= (n-s+1 - sqrt((n-s+1)^2 - 4(n-2s)))/2, s = half the number
    of vertices with eccentricity >= 3."""
    name = "barrett_connectivity_lower"
    _require_tree(g, name)
    met = metrics(g)
    s = met.eccentricity_ge3_count / 2.0
    rad = (g.n - s + 1) ** 2 - 4 * (g.n - 2 * s)
    if rad < 0:
        return _not_applicable(name, "lower", "alg_conn", "negative_radicand")
    bound = (g.n - s + 1 - math.sqrt(rad)) / 2.0
    return _lower(name, "alg_conn", bound, spectrum(g).alg_conn, tol)


def alg_conn_diameter_upper(g: Graph, tol: float = COMPARISON_TOL) -> BoundReport:
    """alg_conn <= 2(1 - cos(pi/(diameter+1))) for trees."""
    name = "alg_conn_diameter_upper"
    _require_tree(g, name)
    met = metrics(g)
    bound = 2.0 * (1.0 - math.cos(math.pi / (met.diameter + 1)))
    return _upper(name, "alg_conn", bound, spectrum(g).alg_conn, tol)


def laplacian_radius_degree_upper(g: Graph, tol: float = COMPARISON_TOL) -> BoundReport:
    """mu1 < max_degree + 2*sqrt(max_degree + 1) for trees."""
    name = "laplacian_radius_degree_upper"
    _require_tree(g, name)
    met = metrics(g)
    bound = met.max_degree + 2.0 * math.sqrt(met.max_degree + 1.0)
    return _upper(name, "mu1", bound, spectrum(g).mu1, tol)


def connectivity_diameter_lower(g: Graph, tol: float = COMPARISON_TOL) -> BoundReport:
    """alg_conn >= 4/(n * diameter) for trees."""
    name = "connectivity_diameter_lower"
    _require_tree(g, name)
    met = metrics(g)
    if met.diameter == 0:
        return _not_applicable(name, "lower", "alg_conn", "single_vertex")
    bound = 4.0 / (g.n * met.diameter)
    return _lower(name, "alg_conn", bound, spectrum(g).alg_conn, tol)


def _is_star(g: Graph) -> bool:
    met = metrics(g)
    return g.n >= 3 and met.max_degree == g.n - 1 and met.m == g.n - 1


def diameter_star_condition(g: Graph, tol: float = COMPARISON_TOL) -> BoundReport:
    """Long diameter forces the ratio above the star's:
    diameter >= pi*sqrt(n/4 + 3/(16n-24) + 1/8) - 1  implies  ratio > n."""
    name = "diameter_star_condition"
    _require_tree(g, name)
    if g.n < 3:
        return _not_applicable(name, "conditional", "ratio_vs_star", "too_small")
    if _is_star(g):
        return _not_applicable(name, "conditional", "ratio_vs_star", "star")
    met = metrics(g)
    threshold = (
        math.pi * math.sqrt(g.n / 4.0 + 3.0 / (16.0 * g.n - 24.0) + 0.125) - 1.0
    )
    hyp = met.diameter >= threshold
    margin = spectral_ratio(g).ratio - g.n
    return _conditional(name, "ratio_vs_star", hyp, margin, tol)


def max_degree_star_condition(g: Graph, tol: float = COMPARISON_TOL) -> BoundReport:
    """Many-or-large hubs force the ratio above the star's:
    max_degree >= sqrt(n(n-3)/(2k) + 1), k = count of maximum-degree vertices,
    implies ratio > n.  Needs n >= 6."""
    name = "max_degree_star_condition"
    _require_tree(g, name)
    if g.n < 6:
        return _not_applicable(name, "conditional", "ratio_vs_star", "too_small")
    if _is_star(g):
        return _not_applicable(name, "conditional", "ratio_vs_star", "star")
    met = metrics(g)
    k = sum(1 for d in g.degrees if d == met.max_degree)
    hyp = met.max_degree >= math.sqrt(g.n * (g.n - 3) / (2.0 * k) + 1.0)
    margin = spectral_ratio(g).ratio - g.n
    return _conditional(name, "ratio_vs_star", hyp, margin, tol)


def youliu_star_condition(g: Graph, tol: float = COMPARISON_TOL) -> BoundReport:
    """max_degree >= ceil(n/2)-1 or diameter >= ceil(n/2)-1 implies
    ratio > n, for trees on n >= 10 vertices."""
    name = "youliu_star_condition"
    _require_tree(g, name)
    if g.n < 10:
        return _not_applicable(name, "conditional", "ratio_vs_star", "too_small")
    if _is_star(g):
        return _not_applicable(name, "conditional", "ratio_vs_star", "star")
    met = metrics(g)
    cut = math.ceil(g.n / 2) - 1
    hyp = met.max_degree >= cut or met.diameter >= cut
    margin = spectral_ratio(g).ratio - g.n
    return _conditional(name, "ratio_vs_star", hyp, margin, tol)


def eccentricity_path_condition(g: Graph, tol: float = COMPARISON_TOL) -> BoundReport:
    """Few deep vertices keep the ratio below the path's:
    |{v : ecc(v) >= 3}| <= n-1  implies  ratio < ratio(path), n >= 6."""
    name = "eccentricity_path_condition"
    _require_tree(g, name)
    if g.n < 6:
        return _not_applicable(name, "conditional", "ratio_vs_path", "too_small")
    met = metrics(g)
    hyp = met.eccentricity_ge3_count <= g.n - 1
    margin = path_ratio(g.n) - spectral_ratio(g).ratio
    return _conditional(name, "ratio_vs_path", hyp, margin, tol)


def small_diameter_path_condition(g: Graph, tol: float = COMPARISON_TOL) -> BoundReport:
    """diameter <= 4 implies ratio < ratio(path), for trees on n >= 6."""
    name = "small_diameter_path_condition"
    _require_tree(g, name)
    if g.n < 6:
        return _not_applicable(name, "conditional", "ratio_vs_path", "too_small")
    met = metrics(g)
    hyp = met.diameter <= 4
    margin = path_ratio(g.n) - spectral_ratio(g).ratio
    return _conditional(name, "ratio_vs_path", hyp, margin, tol)


def degree_diameter_path_condition(g: Graph, tol: float = COMPARISON_TOL) -> BoundReport:
    """max_degree + 2*sqrt(max_degree+1) <= 1600n/(121*diameter*pi^2)
    implies ratio < ratio(path), for trees on n >= 6."""
    name = "degree_diameter_path_condition"
    _require_tree(g, name)
    if g.n < 6:
        return _not_applicable(name, "conditional", "ratio_vs_path", "too_small")
    met = metrics(g)
    lhs = met.max_degree + 2.0 * math.sqrt(met.max_degree + 1.0)
    rhs = 1600.0 * g.n / (121.0 * met.diameter * math.pi**2)
    hyp = lhs <= rhs
    margin = path_ratio(g.n) - spectral_ratio(g).ratio
    return _conditional(name, "ratio_vs_path", hyp, margin, tol)


_GENERAL_BOUNDS = (
    goldberg_degree_lower,
    haemers_diameter_bound,
    kantorovich_kirchhoff_upper,
    alpha_shift_lower,
    alpha_shift_upper,
    bipartite_zagreb_lower,
    regular_trianglefree_lower,
    youliu_regular_lower,
    complement_sum_lower,
)

_TREE_BOUNDS = (
    barrett_connectivity_lower,
    alg_conn_diameter_upper,
    laplacian_radius_degree_upper,
    connectivity_diameter_lower,
)

_TREE_CONDITIONS = (
    diameter_star_condition,
    max_degree_star_condition,
    youliu_star_condition,
    eccentricity_path_condition,
    small_diameter_path_condition,
    degree_diameter_path_condition,
)


def all_bounds(g: Graph, tol: float = COMPARISON_TOL) -> list[BoundReport]:
    """Every bound whose object-kind precondition this graph meets.

    Tree-only statements are included only for trees; cut-density is
    excluded because it needs the extra set arguments.
    """
    reports = [fn(g, tol=tol) for fn in _GENERAL_BOUNDS]
    if is_tree(g):
        for fn in _TREE_BOUNDS + _TREE_CONDITIONS:
            reports.append(fn(g, tol=tol))
    return reports


def tree_condition_checks(g: Graph, tol: float = COMPARISON_TOL) -> list[BoundReport]:
    """The conditional statements plus supporting tree invariants."""
    checks = _TREE_BOUNDS + _TREE_CONDITIONS
    return [fn(g, tol=tol) for fn in checks]
