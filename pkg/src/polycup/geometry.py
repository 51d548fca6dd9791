"""Volume cocycles, the subring R*, and volume / mixed volume by cup products.

``beta_U`` is the grade-``q`` multivector with ``int_U w = w(beta_U)`` for
constant forms; ``vol_q(U) = q! beta_U`` is a cocycle (the Pascal equations).
The ``n``-fold cup of ``vol_1`` recovers ``vol_n``, and splitting the edges
of a Minkowski sum by summand turns the same product into a mixed volume.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from . import linalg as la
from .complex import Cochain, PComplex, _facet_enumeration, build_complex, coboundary, is_cocycle
from .cup import cup, is_convenient, NotConvenient, sample_convenient
from .lp import linprog
from .ring import Ext, ext_ring


class DimensionMismatch(ValueError):
    pass


class DegenerateSum(ValueError):
    pass


# -- multivector volumes --------------------------------------------------------

def _pulled_simplices(X: PComplex, g: int) -> List[tuple]:
    """Triangulation of ``g`` by pulling from ``orient[0]``, recursively over facets."""
    key = ("pulled", g)
    if key in X.cache:
        return X.cache[key]
    c = X[g]
    if c.dim == 0:
        out = [(c.vertices[0],)]
    else:
        apex = c.orient[0]
        out = []
        for f in c.facets:
            if apex in X[f].vertices:
                continue
            out += [(apex,) + s for s in _pulled_simplices(X, f)]
    X.cache[key] = out
    return out


def coordinate_volume(X: PComplex, g: int) -> Fraction:
    """Volume of ``g`` measured in its oriented tangent basis (the unit cube has 1)."""
    c = X[g]
    if c.dim == 0:
        return Fraction(1)
    coords = X.vertex_coords(g)
    total = Fraction(0)
    for s in _pulled_simplices(X, g):
        base = coords[s[0]]
        total += abs(la.det([la.sub(coords[v], base) for v in s[1:]]))
    return total / factorial(c.dim)


def cell_multivector(X: PComplex, g: int) -> Ext:
    """``beta_g``: coordinate volume times the wedge of the oriented basis."""
    return Ext.wedge_vectors(X[g].basis, X.n) * coordinate_volume(X, g)


def vol_cocycle(X: PComplex, q: int) -> Cochain:
    """``delta -> q! beta_delta`` on the ``q``-cells."""
    vals = {g: cell_multivector(X, g) * factorial(q) for g in X.cells_of_dim(q)}
    return Cochain(X, q, vals, ext_ring(X.n))


def check_pascal(X: PComplex) -> bool:
    """Pascal equations on every cell, by two independent routes that must agree.

    The first is ``d vol = 0``.  The second sums over the facets ``delta`` of
    each cell ``mu`` the normal ``m`` of ``delta`` inside ``V_mu`` (the part of
    ``bary(delta) - bary(mu)`` orthogonal to ``V_delta``) with the weight
    ``vol(delta) |det_mu(m, B_delta)| / |m|^2``, which is facet volume times
    unit normal up to a factor common to the cell; it stays rational.
    """
    by_cocycle = all(is_cocycle(vol_cocycle(X, q)) for q in range(X.dim))
    by_normals = True
    for mu in range(len(X)):
        if X[mu].dim == 0:
            continue
        total = (Fraction(0),) * X.n
        for f in X[mu].facets:
            delta = X[f]
            nu = la.sub(X.barycenter(f), X.barycenter(mu))
            m = _orthogonal_part(nu, delta.basis)
            w = coordinate_volume(X, f) * abs(la.det([X[mu].coords(x) for x in [m] + delta.basis])) / la.dot(m, m)
            total = la.add(total, la.scale(w, m))
        if not la.is_zero(total):
            by_normals = False
    if by_cocycle != by_normals:
        raise AssertionError("the two Pascal checks disagree")
    return by_cocycle


def _orthogonal_part(v: Sequence, basis: list) -> tuple:
    """``v`` minus its Euclidean projection onto ``span(basis)``."""
    if not basis:
        return tuple(v)
    gram = [[la.dot(a, b) for b in basis] for a in basis]
    rhs = [la.dot(a, v) for a in basis]
    c = la.solve_affine(gram, rhs)[0]
    proj = (Fraction(0),) * len(v)
    for ci, b in zip(c, basis):
        proj = la.add(proj, la.scale(ci, b))
    return la.sub(v, proj)


# -- the subring R* ---------------------------------------------------------------

def _tangent_multiple(val: Ext, blade_of: Ext) -> Optional[Fraction]:
    """``c`` with ``val == c * blade_of``, or ``None``."""
    if not val:
        return Fraction(0)
    k = next(iter(blade_of.terms))
    c = val.coeff(k) / blade_of.terms[k]
    return c if val == blade_of * c else None


def in_R(r: Cochain) -> bool:
    """Closed, with each ``r(delta)`` in ``Lambda^p V_delta`` (a multiple of the wedge of ``B_delta``)."""
    if r.ring.kind != "ext":
        return r.is_zero()
    X = r.carrier
    for g, val in r.values.items():
        if _tangent_multiple(val, Ext.wedge_vectors(X[g].basis, X.n)) is None:
            return False
    return is_cocycle(r)


def R_basis(X: PComplex, p: int) -> List[Cochain]:
    """Basis of ``R^p``: cocycles ``delta -> c_delta wedge(B_delta)``."""
    cells = X.cells_of_dim(p)
    blades = {g: Ext.wedge_vectors(X[g].basis, X.n) for g in cells}
    idx = {g: i for i, g in enumerate(cells)}
    rows = []
    for mu in X.cells_of_dim(p + 1):
        per_blade: Dict[tuple, list] = {}
        for f in X[mu].facets:
            for b, c in blades[f].terms.items():
                per_blade.setdefault(b, [Fraction(0)] * len(cells))[idx[f]] += c * X.incidence(mu, f)
        rows += [tuple(r) for r in per_blade.values()]
    ker = la.nullspace(rows, len(cells)) if rows else la.identity(len(cells))
    ring = ext_ring(X.n)
    return [Cochain(X, p, {g: blades[g] * k[idx[g]] for g in cells if k[idx[g]]}, ring) for k in ker]


# -- polytopes ------------------------------------------------------------------

def _local_coords(pts: Dict[int, tuple]) -> Tuple[Dict[int, tuple], int]:
    """Coordinates of the points in an affine basis of their hull."""
    ids = sorted(pts)
    o = pts[ids[0]]
    basis = la.row_space_basis([la.sub(pts[i], o) for i in ids[1:]], len(o)) if len(ids) > 1 else []
    d = len(basis)
    if d == 0:
        return {i: () for i in ids}, 0
    _, cols = la.rref(basis, len(o))
    inv = la.inverse([[b[j] for j in cols] for b in basis])
    out = {}
    for i in ids:
        w = la.sub(pts[i], o)
        out[i] = tuple(sum((w[cols[a]] * inv[a][k] for a in range(d)), Fraction(0)) for k in range(d))
    return out, d


def extreme_points(points: Sequence[Sequence]) -> List[tuple]:
    """Vertices of the convex hull, in input order, duplicates removed."""
    pts = list(dict.fromkeys(la.vec(p) for p in points))
    if len(pts) <= 2:
        return pts
    local, d = _local_coords(dict(enumerate(pts)))
    if d == 2:
        from .fixtures import _convex_hull
        keep = set(_convex_hull([local[i] for i in range(len(pts))], list(range(len(pts)))))
        return [p for i, p in enumerate(pts) if i in keep]
    out = []
    for i, p in enumerate(pts):
        others = [local[j] for j in range(len(pts)) if j != i]
        rows = [tuple(o[k] for o in others) for k in range(d)] + [(1,) * len(others)]
        if linprog([0] * len(others), rows, list(local[i]) + [1]).status == "infeasible":
            out.append(p)
    return out


def polytope_complex(points: Sequence[Sequence]) -> PComplex:
    """Face complex of the convex hull of ``points``.

    A full-dimensional top cell gets the positive orientation of the ambient
    space.
    """
    verts = extreme_points(points)
    all_faces = set()

    def collect(ids: frozenset):
        if ids in all_faces:
            return
        all_faces.add(ids)
        local, d = _local_coords({i: verts[i] for i in ids})
        for facet in _facet_enumeration(local, d):
            collect(frozenset(facet))

    collect(frozenset(range(len(verts))))
    cells = sorted(all_faces, key=lambda f: (len(f), sorted(f)))
    specs = []
    n = len(verts[0])
    for f in cells:
        ids = sorted(f)
        spec = ids
        if len(f) == len(verts) and la.rank([la.sub(verts[i], verts[ids[0]]) for i in ids[1:]] or [(0,) * n]) == n:
            orient = _greedy_orient(verts, ids)
            if la.det_sign([la.sub(verts[i], verts[orient[0]]) for i in orient[1:]]) < 0:
                orient = orient[:-2] + (orient[-1], orient[-2])
            spec = (ids, orient)
        specs.append(spec)
    return build_complex(verts, specs, check_intersections=False)


def _greedy_orient(verts, ids) -> tuple:
    chosen, basis = [ids[0]], []
    for i in ids[1:]:
        cand = basis + [la.sub(verts[i], verts[ids[0]])]
        if la.rank(cand) == len(cand):
            chosen.append(i)
            basis = cand
    return tuple(chosen)


def top_cell(X: PComplex) -> int:
    tops = X.cells_of_dim(X.dim)
    if len(tops) != 1:
        raise ValueError("expected the face complex of one polytope")
    return tops[0]


def volume_by_triangulation(points: Sequence[Sequence]) -> Fraction:
    """Euclidean volume of a full-dimensional hull; 0 if flat."""
    X = polytope_complex(points)
    if X.dim < X.n:
        return Fraction(0)
    g = top_cell(X)
    return coordinate_volume(X, g) * abs(la.det(X[g].basis))


def _top_coefficient(X: PComplex, val) -> Fraction:
    g = top_cell(X)
    blade = tuple(range(1, X.n + 1))
    return val.coeff(blade) * la.det_sign(X[g].basis)


def volume_by_cup(points: Sequence[Sequence], v: Optional[Sequence] = None, seed: int = 0):
    """``(vol_1)^n`` on the face complex, read against the standard volume form.

    Returns ``(volume, v)``.
    """
    X = polytope_complex(points)
    if X.dim < X.n:
        return Fraction(0), None
    v = _parameter(X, v, seed)
    prod = vol_cocycle(X, 1)
    for _ in range(X.n - 1):
        prod = cup(prod, vol_cocycle(X, 1), v)
    return _top_coefficient(X, prod[top_cell(X)]) / factorial(X.n), v


def _parameter(X: PComplex, v, seed):
    if v is None:
        return sample_convenient(X, seed)
    rep = is_convenient(v, X)
    if not rep:
        raise NotConvenient(rep.kind, rep.cell, rep.pair, rep.degrees)
    return tuple(Fraction(x) for x in v)


# -- Minkowski sums and mixed volume ----------------------------------------------

@dataclass
class EdgePart:
    summand: int
    vertices: tuple  # indices into the summand's extreme points (1 or 2)
    vector: tuple  # contribution to the edge vector, zero for a vertex


@dataclass
class MinkowskiLabel:
    edge: int
    parts: List[EdgePart] = field(default_factory=list)


def minkowski_sum_complex(summands: Sequence[Sequence[Sequence]]):
    """Face complex of the sum plus the unique summand decomposition of each edge.

    An edge's normal cone has a relative-interior covector ``c`` (the sum of
    the facet normals through it); ``c`` is maximised on a vertex or a
    parallel edge of every summand.
    """
    polys = [extreme_points(s) for s in summands]
    if not polys:
        raise ValueError("no summands")
    n = len(polys[0][0])
    if any(len(p) != n for s in polys for p in s):
        raise DimensionMismatch("summands live in different spaces")
    acc = [tuple(Fraction(0) for _ in range(n))]
    for P in polys:
        acc = extreme_points([la.add(a, b) for a in acc for b in P])
    X = polytope_complex(acc)
    labels: Dict[int, MinkowskiLabel] = {}
    g = top_cell(X)
    for e in X.cells_of_dim(1):
        if X.dim == 1:
            c = X[g].lift_covector((Fraction(0),))
        else:
            local = [Fraction(0)] * X[g].dim
            for f, a in X.facet_normals(g).items():
                if set(X[e].vertices) <= set(X[f].vertices):
                    local = [x + y for x, y in zip(local, a)]
            c = X[g].lift_covector(local)
        edge_vec = X[e].basis[0]
        lab = MinkowskiLabel(e)
        total = (Fraction(0),) * n
        for k, P in enumerate(polys):
            vals = [la.dot(c, p) for p in P]
            top = max(vals)
            face = tuple(i for i, x in enumerate(vals) if x == top)
            if len(face) == 1:
                lab.parts.append(EdgePart(k, face, (Fraction(0),) * n))
                continue
            if len(face) > 2 and la.rank([la.sub(P[i], P[face[0]]) for i in face[1:]]) > 1:
                raise DegenerateSum(f"edge {e}: summand {k} contributes a face of dimension > 1")
            ends = _segment_ends([P[i] for i in face])
            vec = la.sub(P[face[ends[1]]], P[face[ends[0]]])
            coef = la.coordinates([edge_vec], vec)
            if coef is None:
                raise DegenerateSum(f"edge {e}: summand {k} edge is not parallel to it")
            if coef[0] < 0:
                vec = la.scale(-1, vec)
            lab.parts.append(EdgePart(k, (face[ends[0]], face[ends[1]]), vec))
            total = la.add(total, vec)
        if total != edge_vec:
            raise DegenerateSum(f"edge {e}: summand edges do not add up to the edge")
        labels[e] = lab
    return X, labels


def _segment_ends(pts: list) -> tuple:
    """Indices of the two extreme points among collinear points."""
    d = la.sub(pts[1], pts[0])
    t = [la.dot(d, p) for p in pts]
    return t.index(min(t)), t.index(max(t))


def edge_cocycles(X: PComplex, labels: Dict[int, MinkowskiLabel], count: int) -> List[Cochain]:
    """``vol_{1,k}``: the summand-``k`` part of each edge vector, zero where it is a vertex."""
    ring = ext_ring(X.n)
    out = []
    for k in range(count):
        vals = {e: Ext.from_vector(lab.parts[k].vector) for e, lab in labels.items()}
        out.append(Cochain(X, 1, vals, ring))
    return out


def mixed_volume(summands: Sequence[Sequence[Sequence]], v: Optional[Sequence] = None, seed: int = 0):
    """Mixed volume of ``n`` polytopes in ``Q^n``, normalised so ``V(P, ..., P) = vol(P)``.

    Returns ``(value, v)``; ``v`` is ``None`` when the sum is flat and the
    value is 0.
    """
    n = len(summands)
    for s in summands:
        for p in s:
            if len(p) != n:
                raise DimensionMismatch(f"{n} summands need points in dimension {n}, got {len(p)}")
    X, labels = minkowski_sum_complex(summands)
    if X.dim < n:
        return Fraction(0), None
    v = _parameter(X, v, seed)
    cocycles = edge_cocycles(X, labels, n)
    prod = cocycles[0]
    for r in cocycles[1:]:
        prod = cup(prod, r, v)
    return _top_coefficient(X, prod[top_cell(X)]) / factorial(n), v


def mixed_volume_by_polarization(a: Sequence, b: Sequence) -> Fraction:
    """``V(A, B) = (vol(A + B) - vol(A) - vol(B)) / 2`` for planar polytopes."""
    ab = [la.add(la.vec(x), la.vec(y)) for x in a for y in b]
    return (volume_by_triangulation(ab) - volume_by_triangulation(a) - volume_by_triangulation(b)) / 2
