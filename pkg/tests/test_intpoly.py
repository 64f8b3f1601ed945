import math
import random

import numpy as np
import pytest

from spectra.errors import BadParamsError
from spectra.intpoly import (
    IntPolynomial,
    char_poly_exact,
    det_bareiss,
    real_roots,
    square_free_decomposition,
)


def poly_from_roots(roots) -> IntPolynomial:
    p = IntPolynomial((1,))
    for r in roots:
        p = p * IntPolynomial((-r, 1))
    return p


def test_polynomial_arithmetic():
    x = IntPolynomial((0, 1))
    p = (x - IntPolynomial((1,))) ** 2
    assert p.coeffs == (1, -2, 1)
    assert (p * x).coeffs == (0, 1, -2, 1)
    assert (p + x).coeffs == (1, -1, 1)
    assert p(3) == 4
    assert p.derivative().coeffs == (-2, 2)
    assert str(x**3 - x) == "x^3 - x"


def test_char_poly_small_known():
    assert char_poly_exact([[2]]).coeffs == (-2, 1)
    # [[2,-1],[-1,2]] has eigenvalues 1, 3
    p = char_poly_exact([[2, -1], [-1, 2]])
    assert p.coeffs == (3, -4, 1)
    assert p(1) == 0 and p(3) == 0


def test_char_poly_matches_determinant():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randrange(1, 7)
        m = [[rng.randrange(-4, 5) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(i):
                m[i][j] = m[j][i]
        p = char_poly_exact(m)
        # p(0) = det(-M) = (-1)^n det(M)
        assert p(0) == (-1) ** n * det_bareiss(m)
        assert p.coeffs[-1] == 1 and p.degree == n


def test_char_poly_matches_numpy_eigenvalues():
    rng = random.Random(5)
    for _ in range(10):
        n = rng.randrange(2, 8)
        m = [[rng.randrange(-3, 4) for _ in range(n)] for _ in range(n)]
        for i in range(n):
            for j in range(i):
                m[i][j] = m[j][i]
        p = char_poly_exact(m)
        eigs = np.linalg.eigvalsh(np.array(m, dtype=float))
        for lam in eigs:
            # |p(lambda)| should vanish to rounding error
            vals = [abs(c) for c in p.coeffs]
            scale = max(1.0, max(vals)) * max(1.0, abs(lam)) ** p.degree
            horner = 0.0
            for c in reversed(p.coeffs):
                horner = horner * lam + c
            assert abs(horner) <= 1e-7 * scale


def test_char_poly_rejects_non_integers():
    with pytest.raises(BadParamsError):
        char_poly_exact([[0.5]])
    with pytest.raises(BadParamsError):
        char_poly_exact([[1, 2], [3, 4], [5, 6]])


def test_det_bareiss_known_and_random():
    assert det_bareiss([[1, 2], [3, 4]]) == -2
    assert det_bareiss([[2, 0], [0, 3]]) == 6
    assert det_bareiss([[1, 2], [2, 4]]) == 0
    rng = random.Random(9)
    for _ in range(40):
        n = rng.randrange(1, 7)
        m = [[rng.randrange(-5, 6) for _ in range(n)] for _ in range(n)]
        expected = round(np.linalg.det(np.array(m, dtype=float)))
        assert det_bareiss(m) == expected


def test_square_free_decomposition_multiplicities():
    # (x-1)^3 (x+2)^2 x
    p = poly_from_roots([1, 1, 1, -2, -2, 0])
    parts = square_free_decomposition(p)
    found = {mult: factor.coeffs for factor, mult in parts}
    assert set(found) == {1, 2, 3}
    assert found[3] == (-1, 1)
    assert found[2] == (2, 1)
    assert found[1] == (0, 1)


def test_real_roots_with_multiplicity():
    p = poly_from_roots([1, 1, 1, -2, -2, 0])
    roots = real_roots(p)
    assert [m for _, m in roots] == [2, 1, 3]
    values = [v for v, _ in roots]
    assert values == sorted(values)
    assert abs(values[0] + 2) < 1e-9
    assert abs(values[1]) < 1e-9
    assert abs(values[2] - 1) < 1e-9


def test_real_roots_rational_and_clustered():
    # roots at 0, 1/2 (exact rational), 3
    p = IntPolynomial((0, 3, -7, 2))  # x(2x-1)(x-3)
    roots = dict(real_roots(p))
    assert any(abs(v - 0.5) < 1e-12 for v in roots)
    # close pair needs interval splitting
    q = poly_from_roots([10**6, 10**6 + 1])
    vals = sorted(v for v, _ in real_roots(q))
    assert abs(vals[0] - 10**6) < 1e-3 and abs(vals[1] - (10**6 + 1)) < 1e-3


def test_real_roots_match_eigensolver_on_laplacians():
    from spectra.graphs import family
    from spectra.spectral import laplacian_char_poly, spectrum

    for spec in ("path:8", "star:8", "cycle:9", "broom:9:3", "caterpillar:4:5"):
        g = family(spec)
        roots = real_roots(laplacian_char_poly(g))
        expanded = []
        for v, m in roots:
            expanded.extend([v] * m)
        numeric = sorted(spectrum(g).values)
        assert len(expanded) == len(numeric)
        for a, b in zip(expanded, numeric):
            assert abs(a - b) < 1e-8


def test_wilkinson_style_integer_roots():
    p = poly_from_roots(list(range(1, 11)))
    roots = real_roots(p)
    assert [m for _, m in roots] == [1] * 10
    for k, (v, _) in enumerate(roots, start=1):
        assert math.isclose(v, k, rel_tol=0, abs_tol=1e-6)
