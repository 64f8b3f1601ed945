"""Exhaustive enumeration of unlabelled free trees.

Trees are represented by canonical level sequences: the depth sequence of a
preorder walk, rooted at a centroid, with children visited in order of
lexicographically decreasing subtree sequence.  For bicentroidal trees the
larger of the two centroid rootings wins, so every isomorphism class has
exactly one code.

Generation walks all canonical ROOTED level sequences in decreasing
lexicographic order (successor rule: truncate after the last entry > 1,
then tile the tail with the block ending there) and keeps the ones whose
root is a centroid orientation of the free tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .errors import BadParamsError, BudgetExceededError, NotATreeError, ParseError
from .graphs import Graph, is_tree

__all__ = [
    "CanonicalTreeCode",
    "MAX_ENUM_N",
    "ORACLE_MAX_N",
    "canonical_code",
    "decode_code",
    "enumerate_free_trees",
    "count_free_trees",
    "prufer_class_count",
]

# Free trees on 20 vertices already number 823065; past that a scan stops
# being an interactive operation.
MAX_ENUM_N = 20
# The brute-force oracle walks all n^(n-2) labelled trees.
ORACLE_MAX_N = 9


@dataclass(frozen=True, order=True)
class CanonicalTreeCode:
    """Canonical level sequence; levels[0] == 0 is the root."""

    levels: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.levels)

    def __str__(self) -> str:
        return ".".join(str(d) for d in self.levels)

    @classmethod
    def parse(cls, text: str) -> "CanonicalTreeCode":
        try:
            levels = tuple(int(part) for part in text.strip().split("."))
        except ValueError as exc:
            raise ParseError(f"bad level sequence {text!r}") from exc
        return cls(levels)


def _subtree_sizes(g: Graph) -> tuple[list[int], list[int]]:
    """Subtree sizes under an arbitrary root 0, via iterative BFS order."""
    n = g.n
    parent = [-1] * n
    order = [0]
    seen = [False] * n
    seen[0] = True
    for u in order:
        for w in g.adjacency[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
    size = [1] * n
    for u in reversed(order):
        if parent[u] >= 0:
            size[parent[u]] += size[u]
    return size, parent


def centroids(g: Graph) -> list[int]:
    """The one or two vertices minimising the largest branch."""
    if not is_tree(g):
        raise NotATreeError("centroids are defined for trees")
    n = g.n
    if n == 1:
        return [0]
    size, parent = _subtree_sizes(g)
    out = []
    for v in range(n):
        biggest = 0 if v == 0 else n - size[v]
        for w in g.adjacency[v]:
            if w != parent[v]:
                biggest = max(biggest, size[w])
        if 2 * biggest <= n:
            out.append(v)
    return out


def _rooted_levels(g: Graph, root: int) -> list[int]:
    """Lex-max level sequence of the tree rooted at root."""

    def sub(v: int, parent: int) -> list[int]:
        kids = sorted(
            (sub(w, v) for w in g.adjacency[v] if w != parent), reverse=True
        )
        out = [0]
        for k in kids:
            out.extend(d + 1 for d in k)
        return out

    return sub(root, -1)


def canonical_code(g: Graph) -> CanonicalTreeCode:
    """Canonical level sequence; equal iff the trees are isomorphic."""
    code = g._cache.get("canonical_code")
    if code is None:
        if not is_tree(g):
            raise NotATreeError("canonical codes are defined for trees")
        best = max(_rooted_levels(g, r) for r in centroids(g))
        code = CanonicalTreeCode(tuple(best))
        g._cache["canonical_code"] = code
    return code


def decode_code(code) -> Graph:
    """Rebuild a tree from a level sequence (preorder depths)."""
    levels = code.levels if isinstance(code, CanonicalTreeCode) else tuple(code)
    if not levels or levels[0] != 0:
        raise ParseError(f"level sequence must start at depth 0: {levels!r}")
    edges = []
    stack = [0]
    for i, d in enumerate(levels[1:], start=1):
        if d < 1 or d > len(stack):
            raise ParseError(f"depth {d} at position {i} breaks preorder")
        parent = stack[d - 1]
        edges.append((parent, i))
        del stack[d:]
        stack.append(i)
    return Graph(len(levels), edges)


def _successor(seq: list[int]) -> list[int] | None:
    """Next canonical rooted sequence in decreasing lexicographic order."""
    p = len(seq) - 1
    while p >= 0 and seq[p] <= 1:
        p -= 1
    if p <= 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    block = p - q
    out = seq[:p]
    while len(out) < len(seq):
        out.append(out[-block])
    return out


def _root_branch_sizes(seq: list[int]) -> list[int]:
    sizes = []
    start = None
    for i in range(1, len(seq)):
        if seq[i] == 1:
            if start is not None:
                sizes.append(i - start)
            start = i
    sizes.append(len(seq) - start)
    return sizes


def _accept_free(seq: list[int]) -> Graph | None:
    """Return the decoded tree when seq is the canonical FREE code."""
    n = len(seq)
    big = max(_root_branch_sizes(seq))
    if 2 * big > n:
        return None
    g = decode_code(seq)
    if 2 * big == n:
        # Bicentroidal: keep only the rooting whose sequence wins.
        if canonical_code(g).levels != tuple(seq):
            return None
    else:
        g._cache["canonical_code"] = CanonicalTreeCode(tuple(seq))
    return g


def enumerate_free_trees(n: int):
    """Yield one representative per isomorphism class of trees on n vertices,
    in decreasing canonical-code order."""
    if n < 1:
        raise BadParamsError(f"tree enumeration needs n >= 1, got {n}")
    if n > MAX_ENUM_N:
        raise BudgetExceededError(
            f"tree enumeration capped at n <= {MAX_ENUM_N}, got {n}"
        )
    if n == 1:
        g = Graph(1, [])
        g._cache["canonical_code"] = CanonicalTreeCode((0,))
        yield g
        return
    seq: list[int] | None = list(range(n))
    while seq is not None:
        g = _accept_free(seq)
        if g is not None:
            yield g
        seq = _successor(seq)


def count_free_trees(n: int) -> int:
    return sum(1 for _ in enumerate_free_trees(n))


def prufer_class_count(n: int) -> int:
    """Independent oracle: decode all n^(n-2) labelled trees from their
    sequences and count distinct isomorphism classes.

    Canonicalisation here is deliberately different from canonical_code:
    nested sorted tuples rooted at the centroid(s).  Only the counts are
    meant to be compared.
    """
    if n < 1:
        raise BadParamsError(f"oracle needs n >= 1, got {n}")
    if n > ORACLE_MAX_N:
        raise BudgetExceededError(f"oracle capped at n <= {ORACLE_MAX_N}, got {n}")
    if n <= 2:
        return 1
    half = n // 2
    seen: set = set()
    rng = range(n)
    for code in product(rng, repeat=n - 2):
        # Prufer decode.
        degree = [1] * n
        for x in code:
            degree[x] += 1
        adj: list[list[int]] = [[] for _ in range(n)]
        ptr = 0
        leaf = -1
        for x in code:
            if leaf < 0:
                while degree[ptr] != 1:
                    ptr += 1
                leaf = ptr
            adj[leaf].append(x)
            adj[x].append(leaf)
            degree[leaf] -= 1
            degree[x] -= 1
            if degree[x] == 1 and x < ptr:
                leaf = x
            else:
                leaf = -1
        u = -1
        for v in rng:
            if degree[v] == 1:
                if u < 0:
                    u = v
                else:
                    adj[u].append(v)
                    adj[v].append(u)
                    break
        # Subtree sizes from root 0 in BFS order.
        parent = [-1] * n
        order = [0]
        seen_v = [False] * n
        seen_v[0] = True
        for v in order:
            for w in adj[v]:
                if not seen_v[w]:
                    seen_v[w] = True
                    parent[w] = v
                    order.append(w)
        size = [1] * n
        for v in reversed(order):
            if parent[v] >= 0:
                size[parent[v]] += size[v]

        def tuple_code(v: int, par: int):
            return tuple(
                sorted((tuple_code(w, v) for w in adj[v] if w != par), reverse=True)
            )

        best = None
        for v in rng:
            biggest = n - size[v] if v else 0
            for w in adj[v]:
                if w != parent[v]:
                    biggest = max(biggest, size[w])
            if biggest <= half:
                c = tuple_code(v, -1)
                if best is None or c > best:
                    best = c
        seen.add(best)
    return len(seen)
