import random
from functools import lru_cache

import pytest

from spectra.errors import (
    BadParamsError,
    BudgetExceededError,
    NotATreeError,
    ParseError,
)
from spectra.graphs import Graph, cycle_graph, path_graph, star_graph
from spectra.treegen import (
    CanonicalTreeCode,
    canonical_code,
    centroids,
    count_free_trees,
    decode_code,
    enumerate_free_trees,
    prufer_class_count,
)

# A000055: number of free trees on n vertices
FREE_TREE_COUNTS = {
    1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23,
    9: 47, 10: 106, 11: 235, 12: 551,
}


@lru_cache(maxsize=None)
def rooted_count(n: int) -> int:
    """Rooted-tree counting recurrence, independent of the enumerator:
    n*r(n+1) = sum_{k=1..n} (sum_{d|k} d*r(d)) * r(n-k+1)."""
    if n <= 1:
        return n
    total = 0
    for k in range(1, n):
        divsum = sum(d * rooted_count(d) for d in range(1, k + 1) if k % d == 0)
        total += divsum * rooted_count(n - k)
    return total // (n - 1)


def free_count_formula(n: int) -> int:
    """Otter's relation F(x) = R(x) - (R(x)^2 - R(x^2))/2, coefficientwise."""
    if n == 1:
        return 1
    conv = sum(rooted_count(i) * rooted_count(n - i) for i in range(1, n))
    diag = rooted_count(n // 2) if n % 2 == 0 else 0
    return rooted_count(n) - (conv - diag) // 2


def test_counting_formula_self_check():
    # the DP used below must itself reproduce the published values
    assert [rooted_count(k) for k in range(1, 10)] == [
        1, 1, 2, 4, 9, 20, 48, 115, 286,
    ]
    for n, expected in FREE_TREE_COUNTS.items():
        assert free_count_formula(n) == expected, n


def test_enumeration_counts_match_formula():
    for n in range(1, 13):
        assert count_free_trees(n) == free_count_formula(n), n


def test_enumeration_counts_match_prufer_oracle():
    for n in range(2, 8):
        assert count_free_trees(n) == prufer_class_count(n), n


def test_enumerated_trees_are_distinct_valid_trees():
    for n in range(2, 10):
        seen = set()
        for g in enumerate_free_trees(n):
            assert g.n == n and g.m == n - 1
            code = canonical_code(g)
            assert code.levels not in seen
            seen.add(code.levels)
        assert len(seen) == FREE_TREE_COUNTS[n]


def test_emission_order_is_decreasing():
    for n in (6, 8, 9):
        codes = [canonical_code(g).levels for g in enumerate_free_trees(n)]
        assert codes == sorted(codes, reverse=True)
        assert codes[0] == canonical_code(path_graph(n)).levels  # path first
        assert codes[-1] == (0,) + (1,) * (n - 1)  # star last


def test_roundtrip_decode_canonical():
    for n in range(2, 10):
        for g in enumerate_free_trees(n):
            code = canonical_code(g)
            h = decode_code(code)
            assert canonical_code(h) == code


def test_canonical_code_is_relabeling_invariant():
    rng = random.Random(21)
    for g in enumerate_free_trees(8):
        base = canonical_code(g)
        for _ in range(3):
            perm = list(range(g.n))
            rng.shuffle(perm)
            h = Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges])
            assert canonical_code(h) == base


def test_canonical_code_separates_nonisomorphic():
    # spiders with leg profiles (2,2,2) and (3,2,1): same degree sequence
    a = decode_code((0, 1, 2, 1, 2, 1, 2))
    b = decode_code((0, 1, 2, 3, 1, 2, 1))
    assert sorted(a.degrees) == sorted(b.degrees)
    assert canonical_code(a) != canonical_code(b)


def test_centroids():
    assert centroids(path_graph(5)) == [2]
    assert centroids(path_graph(6)) == [2, 3]
    assert centroids(star_graph(9)) == [0]
    assert centroids(Graph(1, [])) == [0]
    with pytest.raises(NotATreeError):
        centroids(cycle_graph(4))


def test_code_parse_and_str():
    code = CanonicalTreeCode((0, 1, 2, 1))
    assert str(code) == "0.1.2.1"
    assert CanonicalTreeCode.parse("0.1.2.1") == code
    with pytest.raises(ParseError):
        CanonicalTreeCode.parse("0.a.1")


def test_decode_errors():
    with pytest.raises(ParseError):
        decode_code((1, 2))
    with pytest.raises(ParseError):
        decode_code((0, 2))
    with pytest.raises(ParseError):
        decode_code(())


def test_budget_guards():
    with pytest.raises(BudgetExceededError):
        list(enumerate_free_trees(21))
    with pytest.raises(BudgetExceededError):
        prufer_class_count(10)
    with pytest.raises(BadParamsError):
        count_free_trees(0)
    with pytest.raises(BadParamsError):
        prufer_class_count(0)
