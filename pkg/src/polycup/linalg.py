"""Exact rational linear algebra.

Vectors are tuples of ``Fraction``; matrices are lists of row tuples.  Every
routine is a pure function and never touches floating point: the cone and
transversality predicates downstream are sign-exact.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Optional, Sequence

Vec = tuple  # tuple[Fraction, ...]
Mat = list  # list[Vec]


def vec(xs: Iterable) -> Vec:
    return tuple(Fraction(x) for x in xs)


def dot(a: Sequence, b: Sequence) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def add(a: Sequence, b: Sequence) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def sub(a: Sequence, b: Sequence) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def scale(c, a: Sequence) -> Vec:
    return tuple(c * x for x in a)


def is_zero(a: Sequence) -> bool:
    return all(x == 0 for x in a)


def transpose(m: Sequence[Sequence]) -> Mat:
    return [tuple(col) for col in zip(*m)]


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Mat:
    bt = transpose(b)
    return [tuple(dot(row, col) for col in bt) for row in a]


def matvec(m: Sequence[Sequence], x: Sequence) -> Vec:
    return tuple(dot(row, x) for row in m)


def rref(m: Sequence[Sequence], ncols: Optional[int] = None):
    """Reduced row echelon form.

    Returns ``(rows, pivots)`` with the zero rows dropped.  ``ncols`` is only
    needed when ``m`` has no rows.
    """
    rows = [list(map(Fraction, r)) for r in m]
    if not rows:
        return [], []
    ncols = len(rows[0]) if ncols is None else ncols
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return [tuple(row) for row in rows[:r]], pivots


def rank(m: Sequence[Sequence]) -> int:
    return len(rref(m)[1]) if len(m) else 0


def nullspace(m: Sequence[Sequence], ncols: int) -> list:
    """Basis of ``{x : m x = 0}``, one vector per free column."""
    rows, pivots = rref(m, ncols) if len(m) else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def solve_affine(a: Sequence[Sequence], b: Sequence, ncols: Optional[int] = None):
    """One solution of ``a x = b`` plus a basis of ``ker a``.

    Returns ``None`` when the system is inconsistent.  ``ncols`` is required
    when ``a`` has no rows.
    """
    if ncols is None:
        ncols = len(a[0])
    aug = [tuple(row) + (Fraction(bi),) for row, bi in zip(a, b)]
    rows, pivots = rref(aug, ncols + 1) if aug else ([], [])
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, p in zip(rows, pivots):
        x[p] = row[ncols]
    return tuple(x), nullspace(a, ncols) if len(a) else _identity(ncols)


def _identity(n: int) -> list:
    return [tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)]


identity = _identity


def inverse(m: Sequence[Sequence]) -> Mat:
    n = len(m)
    aug = [tuple(row) + tuple(Fraction(int(i == j)) for j in range(n)) for i, row in enumerate(m)]
    rows, pivots = rref(aug, 2 * n)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return [tuple(r[n:]) for r in rows[:n]]


def det(m: Sequence[Sequence]) -> Fraction:
    n = len(m)
    if n == 0:
        return Fraction(1)
    rows = [list(map(Fraction, r)) for r in m]
    assert all(len(r) == n for r in rows), "det needs a square matrix"
    d = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            d = -d
        d *= rows[c][c]
        inv = 1 / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return d


def det_sign(m: Sequence[Sequence]) -> int:
    d = det(m)
    return (d > 0) - (d < 0)


def orthogonal_complement(vectors: Sequence[Sequence], n: int) -> list:
    """Canonical basis of ``{u : u . w = 0 for every input w}``."""
    if not vectors:
        return _identity(n)
    basis = nullspace(vectors, n)
    # canonical form: rref of the spanning set
    return rref(basis, n)[0] if basis else []


def row_space_basis(vectors: Sequence[Sequence], n: int) -> list:
    return rref(vectors, n)[0] if vectors else []


def in_span(v: Sequence, basis: Sequence[Sequence]) -> bool:
    if is_zero(v):
        return True
    if not basis:
        return False
    return rank(list(basis) + [tuple(v)]) == rank(basis)


def subspace_intersection(a: Sequence[Sequence], b: Sequence[Sequence], n: int) -> list:
    """Basis of ``span(a) & span(b)``."""
    if not a or not b:
        return []
    # x a = y b  <=>  (x, -y) in the left kernel of [a; b]
    stacked = transpose(list(a) + [scale(-1, r) for r in b])
    coeffs = nullspace(stacked, len(a) + len(b))
    out = []
    for c in coeffs:
        w = [Fraction(0)] * n
        for ci, row in zip(c[: len(a)], a):
            if ci:
                w = [x + ci * y for x, y in zip(w, row)]
        out.append(tuple(w))
    return row_space_basis(out, n)


def coordinates(basis: Sequence[Sequence], v: Sequence):
    """Coefficients ``c`` with ``sum c_i basis_i == v``, or ``None``."""
    sol = solve_affine(transpose(basis), v, len(basis)) if basis else None
    if not basis:
        return () if is_zero(v) else None
    return None if sol is None else sol[0]


def primitive_integer(v: Sequence) -> tuple:
    """Scale a nonzero rational vector to coprime integers, first nonzero positive."""
    den = 1
    for x in v:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        raise ValueError("zero vector has no primitive representative")
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)


def fmt(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
