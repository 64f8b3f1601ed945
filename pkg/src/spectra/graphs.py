"""Core graph container, named families, invariants, and file formats.

Graphs are simple, undirected, and live on vertices 0..n-1.  Instances are
immutable; derived quantities (adjacency sets, spectra) are memoised on the
private ``_cache`` dict by the modules that compute them.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import (
    BadParamsError,
    ParseError,
    SelfLoopError,
    VertexRangeError,
)

__all__ = [
    "Graph",
    "GraphMetrics",
    "build_graph",
    "family",
    "FAMILY_NAMES",
    "metrics",
    "complement",
    "parse_edge_list",
    "format_edge_list",
    "graph6_encode",
    "graph6_decode",
    "read_graph_text",
]


class Graph:
    """Immutable simple graph.

    ``edges`` is a sorted tuple of ``(u, v)`` pairs with ``u < v``;
    ``adjacency[v]`` is a sorted tuple of neighbours of ``v``.
    """

    __slots__ = ("n", "edges", "adjacency", "name", "_cache")

    def __init__(self, n: int, edges, name: str | None = None):
        if n < 1:
            raise BadParamsError(f"graph needs at least one vertex, got n={n}")
        seen: set[tuple[int, int]] = set()
        adj: list[list[int]] = [[] for _ in range(n)]
        for e in edges:
            u, v = e
            if not (0 <= u < n and 0 <= v < n):
                raise VertexRangeError(f"edge {e!r} out of range for n={n}")
            if u == v:
                raise SelfLoopError(f"self-loop at vertex {u}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                continue
            seen.add((u, v))
            adj[u].append(v)
            adj[v].append(u)
        self.n = n
        self.edges = tuple(sorted(seen))
        self.adjacency = tuple(tuple(sorted(a)) for a in adj)
        self.name = name
        self._cache: dict = {}

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def adjacency_sets(self) -> tuple[frozenset, ...]:
        sets = self._cache.get("adj_sets")
        if sets is None:
            sets = tuple(frozenset(a) for a in self.adjacency)
            self._cache["adj_sets"] = sets
        return sets

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency_sets()[u]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        label = self.name or "graph"
        return f"<Graph {label} n={self.n} m={self.m}>"


def build_graph(n: int, edges, name: str | None = None) -> Graph:
    """Validate and normalise an edge list into a Graph.

    Duplicate edges (in either orientation) are collapsed.  Raises
    SelfLoopError or VertexRangeError on bad input.
    """
    return Graph(n, edges, name)


@dataclass(frozen=True)
class GraphMetrics:
    """Cheap structural invariants, all computed by breadth-first search."""

    n: int
    m: int
    min_degree: int
    max_degree: int
    is_connected: bool
    is_regular: bool
    is_bipartite: bool
    is_triangle_free: bool
    diameter: int | None
    zagreb: int
    eccentricity_ge3_count: int
    regularity_k: int | None = None


def _bfs_distances(g: Graph, source: int) -> list[int]:
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in g.adjacency[u]:
            if dist[w] < 0:
                dist[w] = dist[u] + 1
                queue.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    flag = g._cache.get("connected")
    if flag is None:
        flag = g.n == 1 or min(_bfs_distances(g, 0)) >= 0
        g._cache["connected"] = flag
    return flag


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


def _is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    for start in range(g.n):
        if colour[start] >= 0:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in g.adjacency[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


def _is_triangle_free(g: Graph) -> bool:
    sets = g.adjacency_sets()
    for u, v in g.edges:
        if sets[u] & sets[v]:
            return False
    return True


def metrics(g: Graph) -> GraphMetrics:
    """Compute GraphMetrics; memoised on the graph."""
    cached = g._cache.get("metrics")
    if cached is not None:
        return cached
    degs = g.degrees
    connected = is_connected(g)
    diameter: int | None = None
    ecc_ge3 = 0
    if connected:
        diameter = 0
        for v in range(g.n):
            ecc = max(_bfs_distances(g, v))
            diameter = max(diameter, ecc)
            if ecc >= 3:
                ecc_ge3 += 1
    result = GraphMetrics(
        n=g.n,
        m=g.m,
        min_degree=min(degs),
        max_degree=max(degs),
        is_connected=connected,
        is_regular=min(degs) == max(degs),
        is_bipartite=_is_bipartite(g),
        is_triangle_free=_is_triangle_free(g),
        diameter=diameter,
        zagreb=sum(d * d for d in degs),
        eccentricity_ge3_count=ecc_ge3,
        regularity_k=degs[0] if min(degs) == max(degs) else None,
    )
    g._cache["metrics"] = result
    return result


def complement(g: Graph) -> Graph:
    sets = g.adjacency_sets()
    edges = [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if v not in sets[u]
    ]
    name = f"complement({g.name})" if g.name else None
    return Graph(g.n, edges, name)


# ---------------------------------------------------------------------------
# Named families.  Labelings are fixed so outputs are reproducible.

def path_graph(n: int) -> Graph:
    if n < 1:
        raise BadParamsError(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], f"path:{n}")


def star_graph(n: int) -> Graph:
    # Centre is vertex 0, leaves 1..n-1.
    if n < 2:
        raise BadParamsError(f"star needs n >= 2, got {n}")
    return Graph(n, [(0, i) for i in range(1, n)], f"star:{n}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise BadParamsError(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], f"cycle:{n}")


def complete_graph(n: int) -> Graph:
    if n < 2:
        raise BadParamsError(f"complete graph needs n >= 2, got {n}")
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    return Graph(n, edges, f"complete:{n}")


def petersen_graph() -> Graph:
    # Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, edges, "petersen")


def caterpillar_tree(max_deg: int, diam: int) -> Graph:
    """Balanced caterpillar: a spine path on diam-1 vertices, each spine
    vertex carrying max_deg-2 pendant leaves.

    Interior spine vertices then have degree max_deg and the two spine ends
    have degree max_deg-1, so n = (max_deg-1)*(diam-1).  For diam = 3 both
    spine vertices are ends and the maximum degree is max_deg-1.
    Spine is labelled 0..diam-2; leaves follow in spine order.
    """
    if max_deg < 3 or diam < 3:
        raise BadParamsError(
            f"caterpillar needs max_deg >= 3 and diam >= 3, got {max_deg}, {diam}"
        )
    spine = diam - 1
    edges = [(i, i + 1) for i in range(spine - 1)]
    nxt = spine
    for i in range(spine):
        for _ in range(max_deg - 2):
            edges.append((i, nxt))
            nxt += 1
    return Graph(nxt, edges, f"caterpillar:{max_deg}:{diam}")


def broom_tree(n: int, t: int) -> Graph:
    """Broom: star with t leaves whose centre extends into a path.

    Leaves are 0..t-1, the centre is t, the handle is t+1..n-1.  With t = 1
    this is the path; with t = n-2 it degenerates to the star.
    """
    if n < 3 or not 1 <= t <= n - 2:
        raise BadParamsError(f"broom needs n >= 3 and 1 <= t <= n-2, got n={n}, t={t}")
    edges = [(i, t) for i in range(t)]
    edges += [(i, i + 1) for i in range(t, n - 1)]
    return Graph(n, edges, f"broom:{n}:{t}")


def t_star_tree(n: int) -> Graph:
    """Spider with one pendant edge and (n/2 - 1) legs of length two.

    Obtained from the star on n/2 edges by subdividing all but one of them.
    Centre is 0, the intact leaf is 1, leg i uses vertices (2i, 2i+1).
    """
    if n < 6 or n % 2:
        raise BadParamsError(f"t_star needs even n >= 6, got {n}")
    edges = [(0, 1)]
    for i in range(1, n // 2):
        edges.append((0, 2 * i))
        edges.append((2 * i, 2 * i + 1))
    return Graph(n, edges, f"t_star:{n}")


FAMILY_NAMES = (
    "path",
    "star",
    "cycle",
    "complete",
    "petersen",
    "caterpillar",
    "broom",
    "t_star",
)

_FAMILY_ARITY = {
    "path": 1,
    "star": 1,
    "cycle": 1,
    "complete": 1,
    "petersen": 0,
    "caterpillar": 2,
    "broom": 2,
    "t_star": 1,
}


def family(spec: str) -> Graph:
    """Build a named family member from ``name[:p1[:p2]]`` (integer params)."""
    parts = spec.split(":")
    name = parts[0].strip().lower()
    if name == "tstar":
        name = "t_star"
    if name not in _FAMILY_ARITY:
        raise BadParamsError(f"unknown family {name!r}; known: {', '.join(FAMILY_NAMES)}")
    try:
        params = [int(p) for p in parts[1:]]
    except ValueError as exc:
        raise BadParamsError(f"non-integer parameter in {spec!r}") from exc
    if len(params) != _FAMILY_ARITY[name]:
        raise BadParamsError(
            f"family {name!r} takes {_FAMILY_ARITY[name]} parameter(s), got {len(params)}"
        )
    builders = {
        "path": path_graph,
        "star": star_graph,
        "cycle": cycle_graph,
        "complete": complete_graph,
        "petersen": petersen_graph,
        "caterpillar": caterpillar_tree,
        "broom": broom_tree,
        "t_star": t_star_tree,
    }
    return builders[name](*params)


# ---------------------------------------------------------------------------
# Text formats.

def parse_edge_list(text: str) -> Graph:
    """Parse the plain edge-list format.

    First non-comment line is the vertex count, every further line one
    ``u v`` pair.  ``#`` starts a comment, blank lines are ignored.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 1:
                raise ParseError(f"line {lineno}: expected vertex count, got {raw!r}")
            try:
                n = int(fields[0])
            except ValueError as exc:
                raise ParseError(f"line {lineno}: bad vertex count {fields[0]!r}") from exc
            continue
        if len(fields) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(fields[0]), int(fields[1])
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer endpoint in {raw!r}") from exc
        edges.append((u, v))
    if n is None:
        raise ParseError("empty edge-list input")
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [str(g.n)]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def graph6_encode(g: Graph) -> str:
    """Encode in graph6 (n <= 62: single size byte, then column-major
    upper-triangle bits in 6-bit chunks offset by 63)."""
    n = g.n
    if n > 62:
        raise BadParamsError(f"graph6 encoder limited to n <= 62, got {n}")
    sets = g.adjacency_sets()
    bits: list[int] = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if u in sets[v] else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + n)]
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i : i + 6]:
            group = (group << 1) | b
        out.append(chr(63 + group))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if not s:
        raise ParseError("empty graph6 string")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if any(not 63 <= ord(c) <= 126 for c in s):
        raise ParseError(f"graph6 string has bytes outside 63..126: {text!r}")
    n = ord(s[0]) - 63
    if n > 62:
        raise ParseError("graph6 decoder limited to n <= 62")
    need = (n * (n - 1) // 2 + 5) // 6
    body = s[1:]
    if len(body) != need:
        raise ParseError(f"graph6 body length {len(body)}, expected {need} for n={n}")
    bits: list[int] = []
    for c in body:
        val = ord(c) - 63
        bits.extend((val >> k) & 1 for k in range(5, -1, -1))
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                edges.append((u, v))
            idx += 1
    return build_graph(n, edges)


def read_graph_text(text: str) -> Graph:
    """Sniff edge-list vs graph6.

    An edge list opens with a bare integer line; that token can never be
    graph6, whose bytes all sit in 63..126.
    """
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) == 1 and fields[0].isdigit():
            return parse_edge_list(text)
        return graph6_decode(line)
    raise ParseError("no graph data found in input")
