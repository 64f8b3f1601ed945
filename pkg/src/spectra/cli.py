"""Command-line interface.

Commands:
    spectrum  eigenvalues and spectral ratio of one graph
    bounds    evaluate every applicable bound on one graph
    charpoly  exact characteristic polynomial and its real roots
    scan      ratio table over all trees of an order, with conjecture checks

Exit codes: 0 success, 2 invalid input or parameters, 3 enumeration budget
exceeded, 1 anything else.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .bounds import COMPARISON_TOL, all_bounds
from .errors import BadParamsError, BudgetExceededError, SpectraError
from .graphs import Graph, family, read_graph_text
from .intpoly import real_roots
from .scan import (
    check_broom_maximum,
    check_star_path_extremes,
    scan_csv_text,
    scan_trees,
    verify_t_star,
)
from .spectral import (
    broom_char_poly,
    laplacian_char_poly,
    spectrum,
    t_star_char_poly,
)

PROG = "spectra"


def _clean(obj):
    """Round floats to 12 significant digits for stable output."""
    if isinstance(obj, float):
        return float(f"{obj:.12g}")
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def _dump_json(payload) -> str:
    return json.dumps(_clean(payload), indent=2, sort_keys=True) + "\n"


def _load_graph(args) -> Graph:
    if getattr(args, "family", None):
        return family(args.family)
    with open(args.file, "r", encoding="utf-8") as fh:
        g = read_graph_text(fh.read())
    g.name = args.file
    return g


def _graph_info(g: Graph) -> dict:
    return {"name": g.name, "n": g.n, "m": g.m}


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _add_graph_source(parser: argparse.ArgumentParser) -> None:
    src = parser.add_mutually_exclusive_group(required=True)
    src.add_argument(
        "--family",
        help="family spec name[:p1[:p2]], e.g. path:9, caterpillar:3:5",
    )
    src.add_argument("--file", help="read a graph from an edge-list or graph6 file")


def _cmd_spectrum(args) -> int:
    g = _load_graph(args)
    spec = spectrum(g)
    if args.format == "csv":
        lines = ["index,eigenvalue"]
        lines += [f"{i},{v:.12g}" for i, v in enumerate(spec.values)]
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    payload = {
        "command": "spectrum",
        "graph": _graph_info(g),
        "eigenvalues": list(spec.values),
        "mu1": spec.mu1,
        "alg_conn": spec.alg_conn if g.n >= 2 else None,
    }
    try:
        payload["ratio"] = spec.ratio
    except SpectraError:
        payload["ratio"] = None
    _emit(_dump_json(payload), args.out)
    return 0


def _cmd_bounds(args) -> int:
    g = _load_graph(args)
    reports = all_bounds(g, tol=args.tol)
    if args.which != "all":
        wanted = {w.strip() for w in args.which.split(",") if w.strip()}
        known = {r.name for r in reports}
        missing = wanted - known
        if missing:
            raise BadParamsError(
                f"unknown bound name(s): {', '.join(sorted(missing))}; "
                f"available here: {', '.join(sorted(known))}"
            )
        reports = [r for r in reports if r.name in wanted]
    if args.format == "csv":
        lines = ["name,kind,target,applicable,holds,value,slack,reason"]
        for r in reports:
            value = "" if r.value is None else f"{r.value:.12g}"
            slack = "" if r.slack is None else f"{r.slack:.12g}"
            lines.append(
                f"{r.name},{r.kind},{r.target},{r.applicable},{r.holds},"
                f"{value},{slack},{r.reason or ''}"
            )
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    payload = {
        "command": "bounds",
        "graph": _graph_info(g),
        "tolerance": args.tol,
        "bounds": [asdict(r) for r in reports],
    }
    _emit(_dump_json(payload), args.out)
    return 0


def _closed_form(g: Graph):
    """Closed-form characteristic polynomial for families that have one."""
    parts = (g.name or "").split(":")
    if parts[0] == "broom" and len(parts) == 3:
        return "broom_recurrence", broom_char_poly(int(parts[1]), int(parts[2]))
    if parts[0] == "t_star" and len(parts) == 2:
        return "subdivided_star_factorization", t_star_char_poly(int(parts[1]))
    return None


def _cmd_charpoly(args) -> int:
    g = _load_graph(args)
    poly = laplacian_char_poly(g)
    roots = real_roots(poly)
    if args.format == "csv":
        lines = ["power,coefficient"]
        lines += [f"{i},{c}" for i, c in enumerate(poly.coeffs)]
        _emit("\n".join(lines) + "\n", args.out)
        return 0
    payload = {
        "command": "charpoly",
        "graph": _graph_info(g),
        "degree": poly.degree,
        "coefficients": list(poly.coeffs),
        "polynomial": str(poly),
        "roots": [{"value": v, "multiplicity": m} for v, m in roots],
    }
    closed = _closed_form(g)
    if closed is not None:
        label, cpoly = closed
        payload["closed_form"] = {
            "name": label,
            "coefficients": list(cpoly.coeffs),
            "verdict": "EQUAL" if cpoly.coeffs == poly.coeffs else "UNEQUAL",
        }
    _emit(_dump_json(payload), args.out)
    return 0


def _verdict_dict(result) -> dict:
    return {
        "n": result.n,
        "min": {"code": str(result.min_row.code), "family": result.min_row.family,
                "ratio": result.min_row.ratio},
        "max": {"code": str(result.max_row.code), "family": result.max_row.family,
                "ratio": result.max_row.ratio},
        "verdicts": {k: asdict(v) for k, v in result.verdicts.items()},
    }


def _cmd_scan(args) -> int:
    rows = scan_trees(args.n, jobs=args.jobs)
    csv_text = scan_csv_text(rows)
    if args.check_conjectures:
        n = args.n
        star_path = check_star_path_extremes(n, rows)
        summary = []
        sp = star_path.verdicts
        word = "holds" if sp["star_is_min"].holds else "FALSIFIED"
        summary.append(f"star lower bound {word} at n = {n}")
        if sp["path_is_max"].holds:
            summary.append(f"path upper bound holds at n = {n}")
        else:
            summary.append(
                f"path upper bound FALSIFIED at n = {n}: "
                f"maximum is {star_path.max_row.family} "
                f"(code {star_path.max_row.code})"
            )
        payload = {
            "command": "scan",
            "n": n,
            "classes": len(rows),
            "star_path": _verdict_dict(star_path),
        }
        if n >= 8:
            broom = check_broom_maximum(n, rows)
            payload["broom_max"] = _verdict_dict(broom)
            if broom.verdicts["broom_is_max"].holds:
                summary.append(f"balanced-broom maximum holds up to n = {n}")
            else:
                summary.append(
                    f"balanced-broom maximum FALSIFIED at n = {n}: "
                    f"maximum is {broom.max_row.family}"
                )
        if n >= 6 and n % 2 == 0:
            payload["t_star"] = verify_t_star(n)
        payload["summary"] = summary
        if args.out:
            _emit(csv_text, args.out)
        sys.stdout.write(_dump_json(payload))
        return 0
    _emit(csv_text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog=PROG,
        description="Laplacian spectral ratio toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_spec = sub.add_parser("spectrum", help="eigenvalues and spectral ratio")
    _add_graph_source(p_spec)
    p_spec.add_argument("--format", choices=("json", "csv"), default="json")
    p_spec.add_argument("--out", help="write output to this path")
    p_spec.set_defaults(func=_cmd_spectrum)

    p_bounds = sub.add_parser("bounds", help="evaluate all applicable bounds")
    _add_graph_source(p_bounds)
    p_bounds.add_argument("--format", choices=("json", "csv"), default="json")
    p_bounds.add_argument("--which", default="all",
                          help="'all' or a comma-separated list of bound names")
    p_bounds.add_argument("--tol", type=float, default=COMPARISON_TOL)
    p_bounds.add_argument("--out", help="write output to this path")
    p_bounds.set_defaults(func=_cmd_bounds)

    p_poly = sub.add_parser("charpoly", help="exact characteristic polynomial")
    _add_graph_source(p_poly)
    p_poly.add_argument("--format", choices=("json", "csv"), default="json")
    p_poly.add_argument("--out", help="write output to this path")
    p_poly.set_defaults(func=_cmd_charpoly)

    p_scan = sub.add_parser("scan", help="scan all trees of an order")
    p_scan.add_argument("--n", type=int, required=True)
    p_scan.add_argument("--jobs", type=int, default=None,
                        help="worker processes; default SPECTRA_JOBS or 1")
    p_scan.add_argument("--out", help="write the CSV table to this path")
    p_scan.add_argument("--check-conjectures", action="store_true",
                        help="print extremal verdicts as JSON")
    p_scan.set_defaults(func=_cmd_scan)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"{PROG}: {exc}", file=sys.stderr)
        return 3
    except (SpectraError, OSError) as exc:
        if isinstance(exc, SpectraError) and not isinstance(exc, ValueError):
            print(f"{PROG}: {exc}", file=sys.stderr)
            return 1
        print(f"{PROG}: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # pragma: no cover
        print(f"{PROG}: internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
