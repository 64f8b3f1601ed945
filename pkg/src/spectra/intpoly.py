"""Exact integer polynomial arithmetic for characteristic polynomials.

Everything here runs on Python integers and Fractions, so results are exact
until the final float conversion in real_roots.  Degrees stay small (matrix
order), which keeps the classical algorithms comfortably fast.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import BadParamsError

__all__ = [
    "IntPolynomial",
    "char_poly_exact",
    "det_bareiss",
    "real_roots",
    "square_free_decomposition",
]


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, coefficients ascending (coeffs[k] is x^k)."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        cs = tuple(int(c) for c in self.coeffs)
        while len(cs) > 1 and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs if cs else (0,))

    @property
    def degree(self) -> int:
        # Zero polynomial reports degree -1.
        if self.coeffs == (0,):
            return -1
        return len(self.coeffs) - 1

    def __call__(self, x):
        value = 0
        for c in reversed(self.coeffs):
            value = value * x + c
        return value

    def derivative(self) -> "IntPolynomial":
        if len(self.coeffs) == 1:
            return IntPolynomial((0,))
        return IntPolynomial(tuple(i * c for i, c in enumerate(self.coeffs) if i > 0))

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        size = max(len(a), len(b))
        return IntPolynomial(
            tuple(
                (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0)
                for i in range(size)
            )
        )

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + IntPolynomial(tuple(-c for c in other.coeffs))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return IntPolynomial(tuple(out))

    def __pow__(self, k: int) -> "IntPolynomial":
        if k < 0:
            raise BadParamsError("negative polynomial power")
        result = IntPolynomial((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __str__(self) -> str:
        if self.coeffs == (0,):
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            else:
                xpow = "x" if i == 1 else f"x^{i}"
                body = xpow if mag == 1 else f"{mag}*{xpow}"
            if not terms:
                terms.append(body if c > 0 else f"-{body}")
            else:
                terms.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(terms)


def _sign(v: int) -> int:
    return (v > 0) - (v < 0)


def _sign_at(coeffs: tuple[int, ...], x: Fraction) -> int:
    """Sign of the polynomial at rational x, by homogeneous integer Horner."""
    p, q = x.numerator, x.denominator
    value = coeffs[-1]
    qpow = 1
    for c in reversed(coeffs[:-1]):
        qpow *= q
        value = value * p + c * qpow
    return _sign(value)


def _content(cs: list[int]) -> int:
    g = 0
    for c in cs:
        g = gcd(g, abs(c))
    return g or 1


def _primitive(cs: list[int]) -> tuple[int, ...]:
    g = _content(cs)
    return tuple(c // g for c in cs)


def _pseudo_rem(a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    """Pseudo-remainder of lc(b)^(da-db+1) * a modulo b, exact over Z.

    Multiplies by lc(b) exactly da-db+1 times even when a leading term
    cancels early, so the overall multiplier (and its sign) is fixed.
    """
    da, db = len(a) - 1, len(b) - 1
    lb = b[-1]
    r = list(a)
    for dr in range(da, db - 1, -1):
        lead = r[dr]
        r = [c * lb for c in r]
        shift = dr - db
        for i in range(db + 1):
            r[shift + i] -= lead * b[i]
        r.pop()
    while len(r) > 1 and r[-1] == 0:
        r.pop()
    return r


def _sturm_chain(f: tuple[int, ...]) -> list[tuple[int, ...]]:
    chain = [f]
    d = tuple(i * c for i, c in enumerate(f) if i > 0)
    if not d:
        return chain
    chain.append(d)
    while True:
        a, b = chain[-2], chain[-1]
        if len(b) - 1 < 1:
            break
        r = _pseudo_rem(a, b)
        if r == [0] or not any(r):
            break
        delta = (len(a) - 1) - (len(b) - 1)
        # True remainder is r / lc(b)^(delta+1); only positive rescaling is
        # allowed in a Sturm chain, so fold the multiplier's sign into r.
        if _sign(b[-1] ** (delta + 1)) > 0:
            r = [-c for c in r]
        chain.append(_primitive(r))
    return chain


def _variations(chain: list[tuple[int, ...]], x: Fraction) -> int:
    signs = [s for s in (_sign_at(c, x) for c in chain) if s != 0]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _cauchy_bound(coeffs: tuple[int, ...]) -> int:
    lead = abs(coeffs[-1])
    top = max(abs(c) for c in coeffs[:-1]) if len(coeffs) > 1 else 0
    return 1 + (top + lead - 1) // lead


def _refine(coeffs: tuple[int, ...], lo: Fraction, hi: Fraction) -> float:
    """Bisect a sign-changing bracket of a simple root down to float width."""
    slo = _sign_at(coeffs, lo)
    assert slo * _sign_at(coeffs, hi) < 0
    steps = 60 + (2 * _cauchy_bound(coeffs)).bit_length()
    for _ in range(steps):
        mid = (lo + hi) / 2
        s = _sign_at(coeffs, mid)
        if s == 0:
            return float(mid)
        if s == slo:
            lo = mid
        else:
            hi = mid
        if float(lo) == float(hi):
            break
    return float((lo + hi) / 2)


def _isolate_square_free(coeffs: tuple[int, ...]) -> list[float]:
    """All real roots of a square-free integer polynomial, ascending."""
    if len(coeffs) - 1 < 1:
        return []
    chain = _sturm_chain(coeffs)
    bound = Fraction(_cauchy_bound(coeffs))
    roots: list[float] = []
    # Intervals are open with endpoints that are never roots.
    work: list[tuple[Fraction, Fraction]] = [(-bound, bound)]
    while work:
        lo, hi = work.pop()
        count = _variations(chain, lo) - _variations(chain, hi)
        if count == 0:
            continue
        if count == 1:
            roots.append(_refine(coeffs, lo, hi))
            continue
        mid = (lo + hi) / 2
        if _sign_at(coeffs, mid) != 0:
            work.append((lo, mid))
            work.append((mid, hi))
            continue
        # Exact rational root at the midpoint; carve out a punctured
        # neighbourhood known to contain only this root, then recurse.
        roots.append(float(mid))
        eps = (hi - lo) / 4
        while (
            _sign_at(coeffs, mid - eps) == 0
            or _sign_at(coeffs, mid + eps) == 0
            or _variations(chain, mid - eps) - _variations(chain, mid + eps) != 1
        ):
            eps /= 2
        work.append((lo, mid - eps))
        work.append((mid + eps, hi))
    return sorted(roots)


def _poly_div_q(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    q = [Fraction(0)] * max(1, len(a) - len(b) + 1)
    r = list(a)
    while len(r) >= len(b) and any(r):
        while len(r) > 1 and r[-1] == 0:
            r.pop()
        if len(r) < len(b):
            break
        coef = r[-1] / b[-1]
        shift = len(r) - len(b)
        q[shift] = coef
        for i in range(len(b)):
            r[shift + i] -= coef * b[i]
        r.pop()
    while len(r) > 1 and r[-1] == 0:
        r.pop()
    return q, r


def _gcd_q(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    a, b = list(a), list(b)
    while any(b) and len(b) > 1:
        _, r = _poly_div_q(a, b)
        a, b = b, r
        while len(b) > 1 and b[-1] == 0:
            b.pop()
    if any(c != 0 for c in b):
        return [Fraction(1)]
    lead = a[-1]
    return [c / lead for c in a]


def _deriv_q(a: list[Fraction]) -> list[Fraction]:
    if len(a) == 1:
        return [Fraction(0)]
    return [i * c for i, c in enumerate(a) if i > 0]


def _sub_q(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    out = [
        (a[i] if i < len(a) else Fraction(0)) - (b[i] if i < len(b) else Fraction(0))
        for i in range(max(len(a), len(b)))
    ]
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out or [Fraction(0)]


def _to_int_primitive(a: list[Fraction]) -> IntPolynomial:
    den = 1
    for c in a:
        den = den * c.denominator // gcd(den, c.denominator)
    cs = [int(c * den) for c in a]
    cs = list(_primitive(cs))
    if cs[-1] < 0:
        cs = [-c for c in cs]
    return IntPolynomial(tuple(cs))


def square_free_decomposition(p: IntPolynomial) -> list[tuple[IntPolynomial, int]]:
    """Yun decomposition: pairwise-coprime square-free factors with their
    multiplicities, whose weighted product equals p up to a constant."""
    if p.degree < 1:
        return []
    a = [Fraction(c) for c in p.coeffs]
    da = _deriv_q(a)
    g = _gcd_q(a, da)
    if len(g) == 1:
        return [(_to_int_primitive(a), 1)]
    c, rem = _poly_div_q(a, g)
    assert not any(rem)
    d, rem = _poly_div_q(da, g)
    assert not any(rem)
    d = _sub_q(d, _deriv_q(c))
    out: list[tuple[IntPolynomial, int]] = []
    i = 1
    while len(c) > 1:
        f = _gcd_q(c, d)
        if len(f) > 1:
            out.append((_to_int_primitive(f), i))
        c, rem = _poly_div_q(c, f)
        assert not any(rem)
        d, rem = _poly_div_q(d, f)
        assert not any(rem)
        d = _sub_q(d, _deriv_q(c))
        i += 1
    return out


def real_roots(p: IntPolynomial) -> tuple[tuple[float, int], ...]:
    """Real roots of p with multiplicities, ascending.

    Roots are isolated exactly (Sturm chains on a Yun square-free
    decomposition) and only converted to float at the end.
    """
    if p.coeffs == (0,):
        raise BadParamsError("zero polynomial has no well-defined root set")
    found: list[tuple[float, int]] = []
    for factor, mult in square_free_decomposition(p):
        for root in _isolate_square_free(factor.coeffs):
            found.append((root, mult))
    return tuple(sorted(found))


def _as_int_rows(matrix) -> list[list[int]]:
    rows = [[int(x) for x in row] for row in matrix]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise BadParamsError("matrix is not square")
    for i, row in enumerate(rows):
        for j, x in enumerate(row):
            if x != matrix[i][j]:
                raise BadParamsError("matrix entries must be integers")
    return rows


def char_poly_exact(matrix) -> IntPolynomial:
    """Characteristic polynomial det(xI - M) by Faddeev-LeVerrier.

    Exact over Z; the interior divisions by k are exact by construction.
    """
    m = _as_int_rows(matrix)
    n = len(m)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    a = [row[:] for row in m]
    c = -sum(a[i][i] for i in range(n))
    if n >= 1:
        coeffs[n - 1] = c
    for k in range(2, n + 1):
        for i in range(n):
            a[i][i] += c
        nxt = [[0] * n for _ in range(n)]
        for i in range(n):
            mi = m[i]
            row = nxt[i]
            for t in range(n):
                mit = mi[t]
                if mit:
                    at = a[t]
                    for j in range(n):
                        row[j] += mit * at[j]
        a = nxt
        tr = sum(a[i][i] for i in range(n))
        assert tr % k == 0
        c = -tr // k
        coeffs[n - k] = c
    return IntPolynomial(tuple(coeffs))


def det_bareiss(matrix) -> int:
    """Exact integer determinant by fraction-free elimination."""
    a = _as_int_rows(matrix)
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]
