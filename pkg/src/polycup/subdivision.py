"""Subdivisions, the restriction map ``res`` and the product defect it leaves.

For ``X`` subdividing ``Y``, ``res(r)(gamma)`` sums ``r`` over the cells of
``X`` of the same dimension inside ``gamma``, each signed by how its
orientation compares with that of ``gamma``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from . import linalg as la
from .complex import Cochain, NotSimplicial, PComplex, is_coboundary, is_cocycle
from .cup import NotConvenient, cup, is_convenient
from .geometry import cell_multivector


class NotASubdivision(ValueError):
    def __init__(self, msg: str, witness=None):
        self.witness = witness
        super().__init__(msg)


@dataclass
class SubdivisionMap:
    fine: PComplex
    coarse: PComplex
    carrier: Dict[int, int] = field(default_factory=dict)  # fine cell -> smallest coarse cell containing it
    pieces: Dict[int, List[Tuple[int, int]]] = field(default_factory=dict)  # coarse cell -> [(fine cell, sign)]


def _carrier(X: PComplex, Y: PComplex, d: int) -> Optional[int]:
    pts = [X.vertices[w] for w in X[d].vertices]
    best = None
    for g in range(len(Y)):
        if Y[g].dim < X[d].dim:
            continue
        if best is not None and Y[g].dim >= Y[best].dim:
            continue
        if all(Y.contains_point(g, x) for x in pts):
            best = g
    return best


def build_subdivision(X: PComplex, Y: PComplex) -> SubdivisionMap:
    """Check that ``X`` subdivides ``Y`` and record carriers and signs.

    Each coarse cell must be tiled by the fine cells of its dimension, which
    for convex cells is the additivity ``sum sign * beta = beta_gamma``.
    """
    if X.n != Y.n:
        raise NotASubdivision("complexes live in different spaces")
    m = SubdivisionMap(X, Y)
    for g in range(len(Y)):
        m.pieces[g] = []
    for d in range(len(X)):
        g = _carrier(X, Y, d)
        if g is None:
            raise NotASubdivision(f"fine cell {d} lies in no coarse cell", witness=d)
        m.carrier[d] = g
        if Y[g].dim == X[d].dim:
            sign = Y.tangent_sign(g, X[d].basis) if X[d].dim else 1
            m.pieces[g].append((d, sign))
    for g in range(len(Y)):
        total = None
        for d, sign in m.pieces[g]:
            b = cell_multivector(X, d) * sign
            total = b if total is None else total + b
        if total is None or total != cell_multivector(Y, g):
            raise NotASubdivision(f"coarse cell {g} is not tiled by fine cells", witness=g)
    return m


def res(r: Cochain, m: SubdivisionMap) -> Cochain:
    if r.carrier is not m.fine:
        raise ValueError("cochain does not live on the fine complex")
    out = {}
    for g in m.coarse.cells_of_dim(r.degree):
        acc = r.ring.zero()
        for d, sign in m.pieces[g]:
            if d in r.values:
                acc = acc + r.values[d] * sign
        if acc:
            out[g] = acc
    return Cochain(m.coarse, r.degree, out, r.ring)


def restriction_defect(r: Cochain, s: Cochain, v, m: SubdivisionMap):
    """``res(r) cup_v res(s) - res(r cup_v s)`` and a witness ``w`` with ``d w`` equal to it.

    Returns ``(defect, witness)``; ``witness`` is ``None`` if the defect is
    not a coboundary.
    """
    X, Y = m.fine, m.coarse
    if not X.is_simplicial():
        raise NotSimplicial("the fine complex must be simplicial")
    if not (is_cocycle(r) and is_cocycle(s)):
        raise ValueError("the defect is stated for cocycles")
    for Z in (X, Y):
        rep = is_convenient(v, Z, [(r.degree, s.degree)])
        if not rep:
            raise NotConvenient(rep.kind, rep.cell, rep.pair, rep.degrees)
    defect = cup(res(r, m), res(s, m), v) - res(cup(r, s, v), m)
    return defect, is_coboundary(defect)
