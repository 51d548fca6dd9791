"""The parameterised cup product of cochains.

For a ``(p+q)``-cell ``gamma`` and a covector ``v`` the pair set collects the
faces ``(delta, lam)`` of dimensions ``(p, q)`` for which the shifted cone
``pi(v) + delta*`` meets ``lam*``; the product sums ``r(delta) s(lam)`` over
it.  Each pair carries the sign ``det(B_delta | B_lam)`` against ``B_gamma``,
which agrees the stored orientations with ``V_gamma = V_delta + V_lam``.

Convenience of ``v`` is decided exactly.  For a face pair whose tangent
spaces meet in ``W != 0`` the set of bad shifts lies in ``W^perp``, so a dot
product screens almost every pair and only the rest go to the LP.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import factorial
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import linalg as la
from .complex import Cochain, NotSimplicial, PComplex
from .fan import cones_meet, fan
from .ring import Ext


class NotConvenient(ValueError):
    def __init__(self, kind: str, cell=None, pair=None, degrees=None):
        self.kind, self.cell, self.pair, self.degrees = kind, cell, pair, degrees
        super().__init__(f"parameter not convenient ({kind}) at cell {cell}, faces {pair}, degrees {degrees}")


@dataclass
class PairEntry:
    delta: int
    lam: int
    sign: int
    point: tuple  # the intersection point, dual coordinates of V_gamma


@dataclass
class PairSet:
    cell: int
    p: int
    q: int
    v: tuple
    entries: List[PairEntry] = field(default_factory=list)

    def __len__(self):
        return len(self.entries)

    def pairs(self) -> List[Tuple[int, int, int]]:
        return [(e.delta, e.lam, e.sign) for e in self.entries]


@dataclass
class ConvenienceReport:
    convenient: bool
    cell: Optional[int] = None
    pair: Optional[Tuple[int, int]] = None
    kind: Optional[str] = None  # "non-transversal" | "boundary"
    degrees: Optional[Tuple[int, int]] = None

    def __bool__(self):
        return self.convenient


def _key(v) -> tuple:
    return tuple(Fraction(x) for x in v)


def face_pair_spaces(X: PComplex, g: int) -> Dict[Tuple[int, int], list]:
    """``W = V_delta & V_lam`` (ambient basis) for every ordered pair of faces of ``g``."""
    key = ("W", g)
    if key not in X.cache:
        faces = X.faces(g)
        out = {}
        for a in faces:
            for b in faces:
                if (b, a) in out:
                    out[(a, b)] = out[(b, a)]
                    continue
                A, B = X[a].basis, X[b].basis
                out[(a, b)] = la.subspace_intersection(A, B, X.n) if A and B else []
        X.cache[key] = out
    return X.cache[key]


def degenerate_pairs(X: PComplex, g: int, p: int, q: int) -> List[Tuple[int, int, list]]:
    """Face pairs of ``g`` that the ``(p, q)`` convenience test has to look at.

    These are the pairs with ``dim delta >= m - q``, ``dim lam >= m - p``
    (``m = dim g``), i.e. cones in the shifted ``q``-skeleton and the
    ``p``-skeleton of the fan, whose tangent spaces meet nontrivially.
    """
    m = X[g].dim
    W = face_pair_spaces(X, g)
    out = []
    for (a, b), w in W.items():
        if w and X[a].dim >= m - q and X[b].dim >= m - p:
            out.append((a, b, w))
    return out


def _pair_fails(X: PComplex, g: int, a: int, b: int, w: list, v: tuple) -> bool:
    if any(la.dot(v, x) != 0 for x in w):
        return False  # shift outside W^perp: the cones cannot meet
    F = fan(X, g)
    return cones_meet(F[a], F[b], X[g].project(v))


def check_cell(X: PComplex, g: int, p: int, q: int, v: Sequence) -> ConvenienceReport:
    v = _key(v)
    m = X[g].dim
    for a, b, w in degenerate_pairs(X, g, p, q):
        if _pair_fails(X, g, a, b, w, v):
            kind = "non-transversal" if X[a].dim + X[b].dim == m else "boundary"
            return ConvenienceReport(False, g, (a, b), kind, (p, q))
    return ConvenienceReport(True)


def all_degrees(X: PComplex) -> List[Tuple[int, int]]:
    return [(p, q) for p in range(X.dim + 1) for q in range(X.dim + 1 - p)]


def is_convenient(v: Sequence, X: PComplex, degrees: Optional[Iterable[Tuple[int, int]]] = None) -> ConvenienceReport:
    """Exact convenience test for the requested degree pairs (default: all)."""
    v = _key(v)
    degrees = list(degrees) if degrees is not None else all_degrees(X)
    for g in range(len(X)):
        seen = set()
        for p, q in degrees:
            m = X[g].dim
            for a, b, w in degenerate_pairs(X, g, p, q):
                if (a, b) in seen:
                    continue
                seen.add((a, b))
                if _pair_fails(X, g, a, b, w, v):
                    kind = "non-transversal" if X[a].dim + X[b].dim == m else "boundary"
                    return ConvenienceReport(False, g, (a, b), kind, (p, q))
    return ConvenienceReport(True)


def pair_set(X: PComplex, g: int, p: int, q: int, v: Sequence) -> PairSet:
    v = _key(v)
    key = ("pairs", g, p, q, v)
    if key in X.cache:
        return X.cache[key]
    gamma = X[g]
    if p + q != gamma.dim:
        raise ValueError(f"degrees ({p}, {q}) do not add up to dim {gamma.dim} of cell {g}")
    rep = check_cell(X, g, p, q, v)
    if not rep:
        raise NotConvenient(rep.kind, g, rep.pair, (p, q))
    F = fan(X, g)
    a = gamma.project(v)
    W = face_pair_spaces(X, g)
    faces = X.faces(g)
    out = PairSet(g, p, q, v)
    for d in (f for f in faces if X[f].dim == p):
        Bd = [gamma.coords(b) for b in X[d].basis]
        for l in (f for f in faces if X[f].dim == q):
            if W[(d, l)]:
                continue  # screened by the convenience check
            Bl = [gamma.coords(b) for b in X[l].basis]
            # x . b = a . b on B_delta,  x . b = 0 on B_lam
            rows = Bd + Bl
            rhs = [la.dot(a, b) for b in Bd] + [Fraction(0)] * len(Bl)
            x = la.solve_affine(rows, rhs, gamma.dim)[0] if rows else ()
            shifted = la.sub(x, a)
            in_d = F[d].contains(shifted)
            in_l = F[l].contains(x)
            if not (in_d and in_l):
                continue
            if not (F[d].contains(shifted, strict=True) and F[l].contains(x, strict=True)):
                raise NotConvenient("boundary", g, (d, l), (p, q))
            out.entries.append(PairEntry(d, l, la.det_sign(rows) if rows else 1, x))
    X.cache[key] = out
    return out


def _check_operands(r: Cochain, s: Cochain):
    if r.carrier is not s.carrier:
        raise ValueError("cochains live on different complexes")
    if r.ring != s.ring:
        from .ring import RingMismatch
        raise RingMismatch(f"{r.ring} vs {s.ring}")


def cup(r: Cochain, s: Cochain, v: Sequence) -> Cochain:
    """``(r cup_v s)(gamma) = sum over the pair set of sign * r(delta) s(lam)``."""
    _check_operands(r, s)
    X, p, q = r.carrier, r.degree, s.degree
    out = {}
    for g in X.cells_of_dim(p + q):
        acc = r.ring.zero()
        for e in pair_set(X, g, p, q, v).entries:
            if e.delta in r.values and e.lam in s.values:
                acc = acc + r.values[e.delta] * s.values[e.lam] * e.sign
        if acc:
            out[g] = acc
    return Cochain(X, p + q, out, r.ring)


def cup_power(r: Cochain, k: int, v: Sequence) -> Cochain:
    out = r
    for _ in range(k - 1):
        out = cup(out, r, v)
    return out


def v_order(X: PComplex, v: Sequence) -> List[int]:
    """Vertex ids by ascending ``v``, ties broken by id.

    A tie between two vertices of one cell is an error; elsewhere it does not
    affect any product.
    """
    v = _key(v)
    verts = sorted({c.vertices[0] for c in X.cells if c.dim == 0})
    vals = {u: la.dot(v, X.vertices[u]) for u in verts}
    for c in X.cells:
        if len({vals[u] for u in c.vertices}) != len(c.vertices):
            raise NotConvenient("tie", c.id, None, None)
    return sorted(verts, key=lambda u: (vals[u], u))


def cech_cup(r: Cochain, s: Cochain, order: Sequence[int]) -> Cochain:
    """The front-face/back-face product on a simplicial complex."""
    _check_operands(r, s)
    X, p, q = r.carrier, r.degree, s.degree
    if not X.is_simplicial():
        raise NotSimplicial("the Cech product needs a simplicial complex")
    rank = {u: i for i, u in enumerate(order)}
    out = {}
    for g in X.cells_of_dim(p + q):
        us = sorted(X[g].vertices, key=rank.__getitem__)
        front, back = us[: p + 1], us[p:]
        d, l = X.find(front), X.find(back)
        val = r.evaluate(d, front) * s.evaluate(l, back)
        val = val * X.orientation_sign(g, us)
        if val:
            out[g] = val
    return Cochain(X, p + q, out, r.ring)


def sample_convenient(X: PComplex, seed: int = 0, degrees=None, budget: int = 400, radius: int = 5) -> tuple:
    """Integer covector drawn from a growing box until it is convenient.

    Points on a discriminant hyperplane are rejected as well.  Deterministic
    for a fixed seed.
    """
    from .discriminant import discriminant

    rng = random.Random(seed)
    walls = [h.normal for h in discriminant(X)]
    for attempt in range(budget):
        R = radius * 2 ** (attempt // 25)
        v = tuple(Fraction(rng.randint(-R, R)) for _ in range(X.n))
        if any(la.dot(v, w) == 0 for w in walls):
            continue
        if is_convenient(v, X, degrees):
            return v
    raise RuntimeError(f"no convenient covector found in {budget} draws")
