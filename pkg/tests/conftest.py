import random
import sys

from spectra.graphs import Graph


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None) if mod else None
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)


def random_connected_graph(rng: random.Random, n: int, extra: int | None = None) -> Graph:
    """Random spanning tree plus a few extra edges; always connected."""
    edges = []
    for v in range(1, n):
        edges.append((rng.randrange(v), v))
    if extra is None:
        extra = rng.randrange(0, n)
    pool = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if (u, v) not in set(edges)
    ]
    rng.shuffle(pool)
    edges.extend(pool[:extra])
    return Graph(n, edges)


def random_tree(rng: random.Random, n: int) -> Graph:
    return random_connected_graph(rng, n, extra=0)
