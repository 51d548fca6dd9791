"""Supercommutative coefficient rings: the rationals and the exterior algebra.

Scalars are plain ``Fraction`` values.  Exterior algebra elements are sparse
maps from strictly increasing blade tuples (1-based) to coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union


class RingMismatch(TypeError):
    pass


def _blade_product(a: tuple, b: tuple):
    """Sign and blade of ``e_a ^ e_b``; sign 0 when an index repeats."""
    if set(a) & set(b):
        return 0, ()
    inversions = 0
    j = 0
    # count pairs (x in a, y in b) with x > y
    for x in a:
        while j < len(b) and b[j] < x:
            j += 1
        inversions += j
    return (-1) ** inversions, tuple(sorted(a + b))


class Ext:
    """Element of the exterior algebra over ``Q^n``."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[tuple, object] = ()):
        self.n = n
        clean = {}
        for blade, c in dict(terms).items():
            blade = tuple(blade)
            if any(b <= a for a, b in zip(blade, blade[1:])):
                raise ValueError(f"blade {blade} is not strictly increasing")
            if blade and not (1 <= blade[0] and blade[-1] <= n):
                raise ValueError(f"blade {blade} out of range for n={n}")
            c = Fraction(c)
            if c:
                clean[blade] = clean.get(blade, 0) + c
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def scalar(cls, c, n: int) -> "Ext":
        return cls(n, {(): c})

    @classmethod
    def basis(cls, i: int, n: int) -> "Ext":
        return cls(n, {(i,): 1})

    @classmethod
    def from_vector(cls, v: Iterable) -> "Ext":
        v = list(v)
        return cls(len(v), {(i + 1,): c for i, c in enumerate(v)})

    @classmethod
    def wedge_vectors(cls, vectors, n: int) -> "Ext":
        out = cls.scalar(1, n)
        for v in vectors:
            out = out * cls.from_vector(v)
        return out

    def _check(self, other):
        if not isinstance(other, Ext) or other.n != self.n:
            raise RingMismatch(f"cannot combine Ext(n={self.n}) with {other!r}")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return Ext(self.n, t)

    def __neg__(self):
        return Ext(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Rational)):
            return Ext(self.n, {k: v * other for k, v in self.terms.items()})
        self._check(other)
        out = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                s, blade = _blade_product(a, b)
                if s:
                    out[blade] = out.get(blade, 0) + s * ca * cb
        return Ext(self.n, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Rational)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        return isinstance(other, Ext) and self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def grades(self) -> set:
        return {len(k) for k in self.terms}

    def coeff(self, blade=()) -> Fraction:
        return self.terms.get(tuple(blade), Fraction(0))

    def grade_part(self, g: int) -> "Ext":
        return Ext(self.n, {k: v for k, v in self.terms.items() if len(k) == g})

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda b: (len(b), b)):
            name = "e" + "".join(map(str, k)) if k else "1"
            parts.append(f"{self.terms[k]}*{name}")
        return " + ".join(parts)


RingElement = Union[Fraction, Ext]


@dataclass(frozen=True)
class Ring:
    """Ring descriptor: ``Ring("Q")`` or ``Ring("ext", n)``."""

    kind: str = "Q"
    n: int = 0

    def __post_init__(self):
        if self.kind not in ("Q", "ext"):
            raise ValueError(f"unknown ring {self.kind!r}")

    def zero(self):
        return Fraction(0) if self.kind == "Q" else Ext(self.n)

    def one(self):
        return Fraction(1) if self.kind == "Q" else Ext.scalar(1, self.n)

    def coerce(self, x):
        """Accept a value for this ring; integers become scalars of the ring."""
        if self.kind == "Q":
            if isinstance(x, Ext):
                raise RingMismatch("exterior value in a Q-valued cochain")
            return Fraction(x)
        if isinstance(x, Ext):
            if x.n != self.n:
                raise RingMismatch(f"Ext(n={x.n}) in ring ext(n={self.n})")
            return x
        return Ext.scalar(x, self.n)


Q = Ring("Q")


def ext_ring(n: int) -> Ring:
    return Ring("ext", n)


def add(a: RingElement, b: RingElement) -> RingElement:
    if isinstance(a, Ext) != isinstance(b, Ext):
        raise RingMismatch("cannot add a scalar and an exterior element")
    return a + b


def mul(a: RingElement, b: RingElement) -> RingElement:
    if isinstance(a, Ext) != isinstance(b, Ext):
        raise RingMismatch("cannot multiply a scalar and an exterior element")
    return a * b


def parity(a: RingElement) -> str:
    """"even", "odd" or "mixed"; zero counts as even."""
    if not isinstance(a, Ext):
        return "even"
    ps = {g % 2 for g in a.grades()}
    if len(ps) > 1:
        return "mixed"
    return "odd" if ps == {1} else "even"


def is_zero(a: RingElement) -> bool:
    return not a
