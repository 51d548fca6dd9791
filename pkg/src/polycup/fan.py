"""Normal cones and normal fans of cells, and the local duality map.

All cone data for a cell ``gamma`` live in the dual coordinates of its
oriented tangent basis: a covector ``u`` on ``V_gamma`` is the tuple
``(u(b_1), ..., u(b_d))`` and pairs with tangent coordinates by the plain dot
product.

Orientation of ``delta*``: the basis ``c`` of ``(V_delta)^perp`` is chosen so
that ``(B_delta, c)`` is positively oriented in ``V_gamma``.  With this choice
and the outward-first incidence convention the duality map satisfies

    (d r)* = (-1)^(p+1) * boundary(r*)      for r of degree p,

which is the sign checked by the tests.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence

from . import linalg as la
from .complex import Chain, Cochain, PComplex
from .lp import linprog


@dataclass(eq=False)
class NormalCone:
    cell: int  # the polytope gamma
    face: int  # delta
    ambient_dim: int  # dim gamma
    equalities: list  # tangent basis of delta (u . b == 0)
    inequalities: list  # u . (w - x_delta) <= 0, for vertices w not on delta
    generators: list  # outward normals of the facets of gamma containing delta
    basis: list  # oriented basis of (V_delta)^perp

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, u: Sequence, strict: bool = False) -> bool:
        """Membership; ``strict`` asks for the relative interior."""
        if any(la.dot(u, b) != 0 for b in self.equalities):
            return False
        for row in self.inequalities:
            s = la.dot(u, row)
            if s > 0 or (strict and s == 0):
                return False
        return True

    def interior_point(self) -> tuple:
        pt = (Fraction(0),) * self.ambient_dim
        for g in self.generators:
            pt = la.add(pt, g)
        return pt


class Fan:
    """The normal fan of a cell: one cone per face."""

    def __init__(self, X: PComplex, g: int):
        self.complex = X
        self.cell = g
        self.dim = X[g].dim
        self.cones: Dict[int, NormalCone] = {f: dual_cone(X, g, f) for f in X.faces(g)}

    def __getitem__(self, face: int) -> NormalCone:
        return self.cones[face]

    def cones_of_dim(self, k: int) -> List[int]:
        return [f for f, c in self.cones.items() if c.dim == k]

    def incidence(self, big: int, small: int) -> int:
        """Incidence of the cone ``small*`` in the boundary of ``big*`` (``big`` a facet of ``small``)."""
        C, D = self.cones[big], self.cones[small]
        nu = la.sub(D.interior_point(), C.interior_point())
        rows = [la.coordinates(C.basis, x) for x in [nu] + list(D.basis)]
        return la.det_sign(rows)

    def locate(self, u: Sequence) -> List[int]:
        """Faces whose normal cone contains ``u`` in its relative interior."""
        return [f for f, c in self.cones.items() if c.contains(u, strict=True)]


def fan(X: PComplex, g: int) -> Fan:
    key = ("fan", g)
    if key not in X.cache:
        X.cache[key] = Fan(X, g)
    return X.cache[key]


def dual_cone(X: PComplex, g: int, d: int) -> NormalCone:
    """The cone of covectors on ``V_g`` whose maximum over ``g`` is attained on all of ``d``."""
    gamma, delta = X[g], X[d]
    if not set(delta.vertices) <= set(gamma.vertices):
        raise ValueError(f"cell {d} is not a face of cell {g}")
    coords = X.vertex_coords(g)
    eqs = [gamma.coords(b) for b in delta.basis]
    x0 = coords[delta.vertices[0]]
    ineqs = [la.sub(coords[w], x0) for w in gamma.vertices if w not in delta.vertices]
    gens = [a for f, a in X.facet_normals(g).items() if set(delta.vertices) <= set(X[f].vertices)]
    perp = la.orthogonal_complement(eqs, gamma.dim) if eqs else la.identity(gamma.dim)
    if perp:
        if la.det_sign(eqs + perp) < 0:
            perp = [la.scale(-1, perp[0])] + perp[1:]
    return NormalCone(g, d, gamma.dim, eqs, ineqs, gens, perp)


def project_to_cell(v: Sequence, X: PComplex, g: int) -> tuple:
    """Restriction of the ambient covector ``v`` to ``V_g``, in dual coordinates."""
    return X[g].project(la.vec(v))


def cones_meet(C: NormalCone, D: NormalCone, shift: Sequence) -> bool:
    """Whether ``(shift + C) & D`` is nonempty (exact LP on the generators)."""
    # sum t_j D_j - sum s_i C_i = shift,  s, t >= 0
    cols = [la.scale(-1, g) for g in C.generators] + list(D.generators)
    if not cols:
        return la.is_zero(shift)
    rows = la.transpose(cols)
    return linprog([0] * len(cols), rows, shift).status != "infeasible"


def dualize_cochain(r: Cochain, g: int) -> Chain:
    """``r*(delta*) = r(delta)`` on the faces of ``g``; a chain on the normal fan."""
    F = fan(r.carrier, g)
    d = F.dim
    vals = {f: r[f] for f in F.cones if r.carrier[f].dim == r.degree and r[f]}
    return Chain(F, d - r.degree, vals, r.ring)


def fan_boundary(c: Chain) -> Chain:
    F: Fan = c.carrier
    X = F.complex
    out = {}
    for f, val in c.values.items():
        # facets of the cone f* are the cones e* with f a facet of e
        for e in F.cones:
            if X[e].dim == X[f].dim + 1 and f in X[e].facets:
                term = val * F.incidence(f, e)
                out[e] = out[e] + term if e in out else term
    return Chain(F, c.degree - 1, out, c.ring)


def restrict_to_faces(r: Cochain, g: int) -> Cochain:
    faces = set(r.carrier.faces(g))
    return Cochain(r.carrier, r.degree, {k: v for k, v in r.values.items() if k in faces}, r.ring)
