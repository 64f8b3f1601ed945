"""Acceptance gate: one test per release criterion.

Each test prints a single PASS/FAIL line (mirrored to the real stderr so it
shows up in piped pytest output) and then asserts.  Tolerances and runtime
budgets are pinned here on purpose; loosening them is a release decision,
not a test fix.
"""

import math
import random
import time

from conftest import random_connected_graph
from spectra.bounds import all_bounds, regular_trianglefree_lower, youliu_regular_lower
from spectra.graphs import (
    broom_tree,
    caterpillar_tree,
    complete_graph,
    cycle_graph,
    is_connected,
    metrics,
    path_graph,
    petersen_graph,
    star_graph,
    t_star_tree,
)
from spectra.intpoly import real_roots
from spectra.scan import (
    check_broom_maximum,
    check_star_path_extremes,
    conditional_sweep,
    scan_csv_text,
    scan_trees,
)
from spectra.spectral import (
    broom_char_poly,
    caterpillar_closed_form,
    check_interlacing,
    complement_spectrum,
    laplacian,
    laplacian_char_poly,
    path_ratio,
    quotient,
    spectral_ratio,
    spectrum,
    t_star_char_poly,
    t_star_closed_form,
)
from spectra.treegen import count_free_trees, enumerate_free_trees, prufer_class_count


# One line per criterion; conftest replays these in the terminal summary so
# they stay visible even though pytest captures per-test output.
RESULTS: list[str] = []


def _report(num: int, label: str, ok: bool, detail: str = "") -> None:
    line = f"ACCEPTANCE {num:02d} {'PASS' if ok else 'FAIL'}  {label}"
    if detail:
        line += f"  [{detail}]"
    RESULTS.append(line)
    print(line)
    assert ok, line


def test_criterion_01_cycle10_reference_values():
    t0 = time.perf_counter()
    g = cycle_graph(10)
    ratio = spectral_ratio(g).ratio
    th = regular_trianglefree_lower(g).value
    yl = youliu_regular_lower(g).value
    elapsed = time.perf_counter() - t0
    ok = (
        abs(ratio - 10.4721) < 5e-4
        and abs(th - 4.1899) < 5e-4
        and abs(yl - 3.0748) < 5e-4
        and elapsed < 1.0
    )
    _report(
        1, "C10 ratio and regular-graph lower bounds", ok,
        f"ratio={ratio:.4f} bounds={th:.4f},{yl:.4f} {elapsed:.2f}s",
    )


def test_criterion_02_petersen_equality_via_exact_roots():
    t0 = time.perf_counter()
    g = petersen_graph()
    roots = real_roots(laplacian_char_poly(g))
    expected = ((0.0, 1), (2.0, 5), (5.0, 4))
    roots_ok = len(roots) == 3 and all(
        m == em and abs(v - ev) < 1e-12
        for (v, m), (ev, em) in zip(roots, expected)
    )
    exact_ratio = roots[-1][0] / roots[1][0]
    bound = regular_trianglefree_lower(g).value
    elapsed = time.perf_counter() - t0
    ok = (
        roots_ok
        and exact_ratio == 2.5
        and abs(bound - exact_ratio) <= 1e-8
        and elapsed < 1.0
    )
    _report(
        2, "Petersen quotient bound is tight at 2.5", ok,
        f"spectrum 5^4 2^5 0, bound={bound:.10f} {elapsed:.2f}s",
    )


def test_criterion_03_path_upper_bound_falsified_at_9():
    t0 = time.perf_counter()
    rows = scan_trees(9)
    by_family = {r.family: r.ratio for r in rows}
    b3 = by_family.get("broom:9:3", float("nan"))
    b2 = by_family.get("broom:9:2", float("nan"))
    b4 = by_family.get("broom:9:4", float("nan"))
    p9 = by_family.get("path:9", float("nan"))
    chain = b3 > b2 + 1e-6 and b2 > b4 + 1e-6 and b4 > p9 + 1e-6
    elapsed = time.perf_counter() - t0
    ok = len(rows) == 47 and chain and rows[0].family == "broom:9:3" and elapsed < 5.0
    _report(
        3, "path upper bound falsified at n=9 by broom t=3", ok,
        f"47 classes, chain {b3:.4f}>{b2:.4f}>{b4:.4f}>{p9:.4f} {elapsed:.2f}s",
    )


def test_criterion_04_star_is_minimum_through_11():
    t0 = time.perf_counter()
    bad = []
    for n in range(3, 12):
        rows = scan_trees(n)
        result = check_star_path_extremes(n, rows=rows)
        if not result.verdicts["star_is_min"].holds:
            bad.append(n)
        elif abs(rows[-1].ratio - n) > 1e-8:
            bad.append(n)
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 120.0
    _report(
        4, "star attains the minimum ratio n for n=3..11", ok,
        f"violations={bad or 'none'} {elapsed:.1f}s",
    )


def test_criterion_05_caterpillar_closed_form_sweep():
    t0 = time.perf_counter()
    checked = 0
    bad = []
    for diam in range(3, 42):
        for max_deg in range(3, 42):
            n = (max_deg - 1) * (diam - 1)
            if n < 5 or n > 40:
                continue
            g = caterpillar_tree(max_deg, diam)
            rr = spectral_ratio(g)
            cf = caterpillar_closed_form(max_deg, diam)
            checked += 1
            if abs(cf.ratio - rr.ratio) > 1e-7:
                bad.append((max_deg, diam, "mismatch"))
            if not (g.n < rr.ratio < path_ratio(g.n)):
                bad.append((max_deg, diam, "chain"))
    elapsed = time.perf_counter() - t0
    ok = checked > 20 and not bad and elapsed < 30.0
    _report(
        5, "caterpillar closed form and star/path chain for n<=40", ok,
        f"{checked} shapes, violations={bad or 'none'} {elapsed:.1f}s",
    )


def test_criterion_06_broom_polynomial_identity():
    t0 = time.perf_counter()
    checked = 0
    bad = []
    for n in range(5, 15):
        for t in range(1, n - 2):
            if broom_char_poly(n, t).coeffs != laplacian_char_poly(broom_tree(n, t)).coeffs:
                bad.append((n, t))
            checked += 1
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 30.0
    _report(
        6, "broom characteristic polynomial identity, exact integers", ok,
        f"{checked} (n,t) pairs, n=5..14 {elapsed:.1f}s",
    )


def test_criterion_07_subdivided_star_identity():
    t0 = time.perf_counter()
    bad = []
    for n in range(6, 17, 2):
        g = t_star_tree(n)
        if t_star_char_poly(n).coeffs != laplacian_char_poly(g).coeffs:
            bad.append((n, "poly"))
        rr = spectral_ratio(g)
        cf = t_star_closed_form(n)
        explicit = (n + 4 + math.sqrt(n * n + 16)) / (6 - 2 * math.sqrt(5))
        if abs(rr.ratio - explicit) > 1e-7 or abs(cf.ratio - explicit) > 1e-9:
            bad.append((n, "ratio"))
        if not (n < rr.ratio < path_ratio(n)):
            bad.append((n, "chain"))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 10.0
    _report(
        7, "subdivided-star factorization and ratio formula, even n=6..16", ok,
        f"violations={bad or 'none'} {elapsed:.1f}s",
    )


def _degree_partition(g):
    classes: dict[int, list[int]] = {}
    for v in range(g.n):
        classes.setdefault(g.degree(v), []).append(v)
    return list(classes.values())


def _invariant_violations(g) -> list[str]:
    out = []
    met = metrics(g)
    spec = spectrum(g)
    tol = 1e-8
    if met.m >= 1:
        if not (met.max_degree + 1 - tol <= spec.mu1 <= g.n + tol):
            out.append("radius_window")
    if met.m < g.n * (g.n - 1) // 2:
        if spec.alg_conn > met.min_degree + tol:
            out.append("alg_conn_vs_min_degree")
    if met.is_bipartite and met.m >= 1:
        if spec.mu1 < met.zagreb / met.m - tol:
            out.append("bipartite_zagreb")
    derived = complement_spectrum(g).values
    from spectra.graphs import complement

    direct = spectrum(complement(g)).values
    if max(abs(a - b) for a, b in zip(derived, direct)) > tol:
        out.append("complement_spectrum")
    q = quotient(laplacian(g), _degree_partition(g))
    if not check_interlacing(spec.values, q.values, tol=tol):
        out.append("interlacing")
    if met.m == g.n - 1 and met.is_connected:
        if spec.alg_conn > 2.0 * (1.0 - math.cos(math.pi / (met.diameter + 1))) + tol:
            out.append("tree_diameter")
        s = met.eccentricity_ge3_count / 2.0
        rad = (g.n - s + 1) ** 2 - 4 * (g.n - 2 * s)
        if rad >= 0:
            barrett = (g.n - s + 1 - math.sqrt(rad)) / 2.0
            if spec.alg_conn < barrett - tol:
                out.append("barrett")
    return out


def test_criterion_08_bound_property_suite():
    t0 = time.perf_counter()
    violations = []

    def check(g, label):
        for rep in all_bounds(g, tol=1e-8):
            if rep.applicable and not rep.holds:
                violations.append((label, rep.name))
        for name in _invariant_violations(g):
            violations.append((label, name))

    trees = 0
    for n in range(3, 11):
        for g in enumerate_free_trees(n):
            check(g, f"tree:{canonical_code_str(g)}")
            trees += 1
    rng = random.Random(2024)
    randoms = 0
    while randoms < 100:
        n = rng.randrange(4, 15)
        g = random_connected_graph(rng, n)
        if not is_connected(g):
            continue
        check(g, f"random:{randoms}")
        randoms += 1
    elapsed = time.perf_counter() - t0
    ok = not violations and elapsed < 180.0
    _report(
        8, "bounds and spectral invariants over trees<=10 plus 100 random graphs",
        ok,
        f"{trees} trees + {randoms} random, violations={violations[:3] or 'none'} "
        f"{elapsed:.1f}s",
    )


def canonical_code_str(g):
    from spectra.treegen import canonical_code

    return str(canonical_code(g))


def test_criterion_09_conditional_statement_sweep():
    t0 = time.perf_counter()
    summaries = conditional_sweep(range(3, 12))
    bad = {name: s.violations for name, s in summaries.items() if s.violations}
    total = sum(s.checked for s in summaries.values())
    fired = sum(s.hypothesis_fired for s in summaries.values())
    elapsed = time.perf_counter() - t0
    ok = not bad and total > 0 and elapsed < 180.0
    _report(
        9, "conditional statements produce no implication violations, n<=11", ok,
        f"{total} checks, {fired} fired hypotheses, bad={bad or 'none'} "
        f"{elapsed:.1f}s",
    )


def test_criterion_10_enumeration_matches_prufer_oracle():
    t0 = time.perf_counter()
    bad = []
    for n in range(2, 10):
        ours = count_free_trees(n)
        oracle = prufer_class_count(n)
        if ours != oracle:
            bad.append((n, ours, oracle))
    n9 = count_free_trees(9)
    first = scan_csv_text(scan_trees(9))
    second = scan_csv_text(scan_trees(9))
    elapsed = time.perf_counter() - t0
    ok = not bad and n9 == 47 and first == second and elapsed < 120.0
    _report(
        10, "free-tree counts equal labelled-tree oracle, scan deterministic", ok,
        f"n=2..9 counts ok, 47 at n=9, byte-identical CSV {elapsed:.1f}s",
    )


def test_criterion_11_broom_maximum_evidence_8_to_12():
    t0 = time.perf_counter()
    bad = []
    for n in range(8, 13):
        t = (n - 3) // 2 if n % 2 else (n - 4) // 2
        result = check_broom_maximum(n)
        if not result.verdicts["broom_is_max"].holds:
            bad.append((n, result.max_row.family))
        elif result.max_row.family != f"broom:{n}:{t}":
            bad.append((n, result.max_row.family))
        star = check_star_path_extremes(n).verdicts["star_is_min"]
        if not star.holds:
            bad.append((n, "star_not_min"))
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 300.0
    _report(
        11, "balanced broom attains the maximum ratio for n=8..12", ok,
        f"violations={bad or 'none'} {elapsed:.1f}s",
    )
