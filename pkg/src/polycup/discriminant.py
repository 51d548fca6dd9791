"""Special triples, the discriminant, and the wall-crossing correction.

A special triple ``(delta, lam, gamma)`` has ``dim delta = p``,
``dim lam = q``, both faces of the ``(p+q-1)``-cell ``gamma`` (itself a face
of some ``(p+q)``-cell), with ``V_delta & V_lam`` a line ``L``.  The walls
``L^perp`` make up the discriminant.  Across one wall the product of cocycles
jumps by the coboundary of a sum of single-cell ``theta`` cochains.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg as la
from .complex import Cochain, PComplex, coboundary, is_cocycle
from .cup import NotConvenient, _key, degenerate_pairs, face_pair_spaces, is_convenient
from .fan import cones_meet, fan


class WallCrossingError(ValueError):
    pass


class NoCrossing(WallCrossingError):
    pass


class MultipleCrossings(WallCrossingError):
    pass


class BadKappa(WallCrossingError):
    pass


class PhiOnHyperplane(ValueError):
    pass


@dataclass(frozen=True)
class SpecialTriple:
    delta: int
    lam: int
    gamma: int
    p: int
    q: int
    line: tuple  # primitive integer vector spanning V_delta & V_lam


@dataclass
class DiscriminantHyperplane:
    normal: tuple  # primitive integer vector w; the wall is {u : u(w) = 0}
    triples: List[SpecialTriple] = field(default_factory=list)

    def contains(self, u: Sequence) -> bool:
        return la.dot(u, self.normal) == 0


@dataclass
class PointClass:
    kind: str  # convenient | on-unconvenient-hyperplane | uncommon | mixed | inconvenient
    hyperplanes: List[tuple] = field(default_factory=list)
    uncommon: bool = False
    convenient: bool = False


def _lambda_triples(X: PComplex, p: int, q: int):
    """``(delta, lam, mu, W)`` with ``mu`` a ``(p+q)``-cell and ``dim W >= 1``."""
    key = ("Lambda", p, q)
    if key not in X.cache:
        out = []
        for mu in X.cells_of_dim(p + q):
            W = face_pair_spaces(X, mu)
            faces = X.faces(mu)
            for d in (f for f in faces if X[f].dim == p):
                for l in (f for f in faces if X[f].dim == q):
                    if W[(d, l)]:
                        out.append((d, l, mu, W[(d, l)]))
        X.cache[key] = out
    return X.cache[key]


def special_triples(X: PComplex, p: int, q: int) -> List[SpecialTriple]:
    key = ("special", p, q)
    if key in X.cache:
        return X.cache[key]
    found = {}
    if p >= 1 and q >= 1:
        for mu in X.cells_of_dim(p + q):
            for g in X[mu].facets:
                W = face_pair_spaces(X, g)
                faces = X.faces(g)
                for d in (f for f in faces if X[f].dim == p):
                    for l in (f for f in faces if X[f].dim == q):
                        w = W[(d, l)]
                        if len(w) == 1 and (d, l, g) not in found:
                            found[(d, l, g)] = SpecialTriple(d, l, g, p, q, la.primitive_integer(w[0]))
    out = sorted(found.values(), key=lambda t: (t.gamma, t.delta, t.lam))
    X.cache[key] = out
    return out


def all_special_triples(X: PComplex) -> List[SpecialTriple]:
    out = []
    for p in range(1, X.dim + 1):
        for q in range(1, X.dim + 1 - p):
            out += special_triples(X, p, q)
    return out


def discriminant(X: PComplex) -> List[DiscriminantHyperplane]:
    """Walls ``L^perp`` of all special triples, deduplicated, sorted by normal."""
    key = ("discriminant",)
    if key not in X.cache:
        walls: Dict[tuple, DiscriminantHyperplane] = {}
        for t in all_special_triples(X):
            walls.setdefault(t.line, DiscriminantHyperplane(t.line)).triples.append(t)
        X.cache[key] = [walls[k] for k in sorted(walls)]
    return X.cache[key]


def unconvenient_hyperplanes(X: PComplex, p: int, q: int) -> List[tuple]:
    """Normals of ``(V_delta & V_lam)^perp`` over the triples of Lambda_{p,q} with a line intersection."""
    lines = {la.primitive_integer(w[0]) for d, l, mu, w in _lambda_triples(X, p, q) if len(w) == 1}
    return sorted(lines)


def is_uncommon(u: Sequence, X: PComplex, p: int, q: int) -> bool:
    u = _key(u)
    for d, l, mu, w in _lambda_triples(X, p, q):
        if len(w) > 1 and all(la.dot(u, x) == 0 for x in w):
            F = fan(X, mu)
            if cones_meet(F[d], F[l], X[mu].project(u)):
                return True
    return False


def _product_degrees(X: PComplex):
    return [(p, q) for p in range(1, X.dim + 1) for q in range(1, X.dim + 1 - p)]


def classify_point(u: Sequence, X: PComplex) -> PointClass:
    u = _key(u)
    planes = set()
    uncommon = False
    for p, q in _product_degrees(X):
        planes |= {h for h in unconvenient_hyperplanes(X, p, q) if la.dot(u, h) == 0}
        uncommon = uncommon or is_uncommon(u, X, p, q)
    conv = bool(is_convenient(u, X))
    planes = sorted(planes)
    if planes and uncommon:
        kind = "mixed"
    elif planes:
        kind = "on-unconvenient-hyperplane"
    elif uncommon:
        kind = "uncommon"
    else:
        kind = "convenient" if conv else "inconvenient"
    return PointClass(kind, planes, uncommon, conv)


def _complement(vectors: list, start: list) -> list:
    """Greedily extend ``start`` by members of ``vectors`` keeping independence."""
    out = list(start)
    for v in vectors:
        if la.rank(out + [v]) == len(out) + 1:
            out.append(v)
    return out[len(start):]


def theta_sign(X: PComplex, t: SpecialTriple, phi: Sequence) -> int:
    """Orientation agreement of ``(delta, lam, gamma)`` with the line oriented by ``phi``.

    ``w`` spans the line with ``phi(w) > 0``; ``(w, a)``, ``(w, b)`` and
    ``(w, a, b)`` are bases of ``V_delta``, ``V_lam``, ``V_gamma``; the sign is
    the product of their orientations against the stored ones.
    """
    w = la.vec(t.line)
    s = la.dot(phi, w)
    if s == 0:
        raise PhiOnHyperplane(f"phi vanishes on the line {t.line}")
    if s < 0:
        w = la.scale(-1, w)
    a = _complement(X[t.delta].basis, [w])
    b = _complement(X[t.lam].basis, [w])
    s_d = X.tangent_sign(t.delta, [w] + a)
    s_l = X.tangent_sign(t.lam, [w] + b)
    s_g = X.tangent_sign(t.gamma, [w] + a + b)
    return s_d * s_l * s_g


def theta_cochain(r: Cochain, s: Cochain, t: SpecialTriple, phi: Sequence) -> Cochain:
    """Single-cell cochain ``r(delta) s(lam)`` on ``gamma`` under the agreement fixed by ``phi``."""
    X = r.carrier
    eps = theta_sign(X, t, _key(phi))
    val = r[t.delta] * s[t.lam] * eps
    return Cochain(X, r.degree + s.degree - 1, {t.gamma: val} if val else {}, r.ring)


@dataclass
class WallCrossing:
    wall: DiscriminantHyperplane
    kappa: tuple
    t: Fraction  # kappa = u + t (v - u)
    triples: List[SpecialTriple]
    correction: Cochain


def segment_point(u, v, t) -> tuple:
    return tuple(a + t * (b - a) for a, b in zip(u, v))


def check_segment(X: PComplex, u, v, p: int, q: int, skip: Optional[tuple] = None) -> None:
    """Raise unless every point of ``[u, v]`` other than ``skip`` is ``(p, q)``-convenient.

    The non-convenient set lies in the finitely many subspaces ``W^perp`` of
    degenerate face pairs; the segment meets each at most once unless it runs
    inside it, which is refused.
    """
    u, v = _key(u), _key(v)
    dv = la.sub(v, u)
    for g in range(len(X)):
        for a, b, w in degenerate_pairs(X, g, p, q):
            t = None
            inside = True
            for x in w:
                c0, c1 = la.dot(u, x), la.dot(dv, x)
                if c1 == 0:
                    if c0 != 0:
                        inside = False
                        t = None
                        break
                    continue
                tx = -c0 / c1
                if t is None:
                    t = tx
                elif t != tx:
                    inside = False
                    t = None
                    break
                inside = False
            if inside and t is None:
                raise BadKappa(f"segment runs inside a degenerate subspace of cell {g}")
            if t is None or not (0 <= t <= 1):
                continue
            pt = segment_point(u, v, t)
            if skip is not None and pt == skip:
                continue
            F = fan(X, g)
            if cones_meet(F[a], F[b], X[g].project(pt)):
                raise NotConvenient("segment", g, (a, b), (p, q))


def wall_crossing(r: Cochain, s: Cochain, u: Sequence, v: Sequence) -> WallCrossing:
    """Verify the hypotheses of the one-wall crossing and build the correction cochain.

    The correction is ``(-1)^p sum d theta(r, s, triple, v - u)`` over the
    special triples of the crossed wall whose shifted cones meet at the
    crossing point.  The factor ``(-1)^p`` is the Koszul sign that the
    outward-first incidences and the ``det(B_delta | B_lam)`` pair signs
    require; without it the identity fails for odd ``p``.
    """
    X = r.carrier
    p, q = r.degree, s.degree
    u, v = _key(u), _key(v)
    if not (is_cocycle(r) and is_cocycle(s)):
        raise ValueError("wall crossing is stated for cocycles")
    walls = discriminant(X)
    for end in (u, v):
        if any(h.contains(end) for h in walls):
            raise NotConvenient("endpoint on a wall")
    hits: Dict[Fraction, List[DiscriminantHyperplane]] = {}
    dv = la.sub(v, u)
    for h in walls:
        c0, c1 = la.dot(u, h.normal), la.dot(dv, h.normal)
        if c1 == 0:
            continue
        t = -c0 / c1
        if 0 < t < 1:
            hits.setdefault(t, []).append(h)
    if not hits:
        raise NoCrossing("the segment stays in one component")
    if len(hits) > 1:
        raise MultipleCrossings(f"the segment crosses walls at t = {sorted(hits)}")
    (t, hs), = hits.items()
    if len(hs) > 1:
        raise BadKappa("the crossing point lies on several walls")
    H = hs[0]
    kappa = segment_point(u, v, t)
    for end in (u, v):
        rep = is_convenient(end, X, [(p, q)])
        if not rep:
            raise NotConvenient(rep.kind, rep.cell, rep.pair, (p, q))
    check_segment(X, u, v, p, q, skip=kappa)
    if is_uncommon(kappa, X, p, q):
        raise BadKappa("the crossing point is uncommon")
    others = [h for h in unconvenient_hyperplanes(X, p, q) if la.dot(kappa, h) == 0 and h != H.normal]
    if others:
        raise BadKappa(f"the crossing point lies on other unconvenient hyperplanes {others}")
    phi = dv
    chosen = []
    correction = Cochain(X, p + q, {}, r.ring)
    for trip in special_triples(X, p, q):
        if trip.line != H.normal:
            continue
        F = fan(X, trip.gamma)
        if not cones_meet(F[trip.delta], F[trip.lam], X[trip.gamma].project(kappa)):
            continue
        chosen.append(trip)
        correction = correction + coboundary(theta_cochain(r, s, trip, phi)) * (-1) ** p
    return WallCrossing(H, kappa, t, chosen, correction)


def wall_crossing_delta(r: Cochain, s: Cochain, u: Sequence, v: Sequence) -> Cochain:
    return wall_crossing(r, s, u, v).correction


def component_signature(X: PComplex, u: Sequence) -> tuple:
    """Side of every discriminant wall; equal signatures <=> same component."""
    u = _key(u)
    out = []
    for h in discriminant(X):
        s = la.dot(u, h.normal)
        out.append((s > 0) - (s < 0))
    return tuple(out)


def same_component(X: PComplex, u: Sequence, v: Sequence) -> bool:
    """Whether the segment ``[u, v]`` misses every wall (the walls are linear)."""
    su, sv = component_signature(X, u), component_signature(X, v)
    return 0 not in su and su == sv
