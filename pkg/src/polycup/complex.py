"""Polyhedral complexes, oriented cells, chains and cochains.

A cell is the convex hull of its listed vertices.  Its orientation is an
ordered tuple of ``dim + 1`` affinely independent vertices; the difference
vectors from the first one form the oriented tangent basis ``basis``.  All
sign conventions (incidence numbers, pair signs, duality) reduce to
``det_sign`` against these bases.

Incidence convention: ``[gamma : delta] = sign det(nu, B_delta)`` in the
tangent frame of ``gamma``, with ``nu`` pointing out of ``gamma`` across the
facet ``delta`` (outward normal first).  On simplices this is the usual
alternating-face sign, so ``d [a, b] = b - a``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Sequence

from . import linalg as la
from .lp import linprog
from .ring import Ext, Q, Ring, RingMismatch, parity as elem_parity


class ComplexError(ValueError):
    """The input is not a polyhedral complex."""


class NotAFaceClosure(ComplexError):
    def __init__(self, cell, missing):
        self.cell, self.missing = cell, missing
        super().__init__(f"cell {cell}: facet with vertices {sorted(missing)} is not a cell")


class BadIntersection(ComplexError):
    def __init__(self, a, b):
        self.cells = (a, b)
        super().__init__(f"cells {a} and {b} meet outside a common face")


class RedundantVertex(ComplexError):
    def __init__(self, cell, vertex):
        self.cell, self.vertex = cell, vertex
        super().__init__(f"cell {cell}: vertex {vertex} is not an extreme point")


class NotSimplicial(ValueError):
    pass


@dataclass(eq=False)
class Cell:
    id: int
    vertices: tuple  # sorted vertex ids
    orient: tuple  # oriented, affinely independent vertex ids
    dim: int
    origin: tuple  # coordinates of orient[0]
    basis: list  # oriented tangent basis, ambient coordinates
    facets: list = field(default_factory=list)
    cofacets: list = field(default_factory=list)
    # coordinate chart on V_cell: coords(w) = w[cols] @ chart
    cols: tuple = ()
    chart: list = field(default_factory=list)

    def coords(self, w: Sequence) -> tuple:
        """Coordinates of a tangent vector ``w`` in the oriented basis."""
        wj = [w[j] for j in self.cols]
        return tuple(sum((wj[i] * self.chart[i][k] for i in range(self.dim)), Fraction(0))
                     for k in range(self.dim))

    def point_coords(self, x: Sequence) -> tuple:
        return self.coords(la.sub(x, self.origin))

    def project(self, v: Sequence) -> tuple:
        """Restriction of the covector ``v`` to ``V_cell``, in dual coordinates."""
        return tuple(la.dot(v, b) for b in self.basis)

    def lift_covector(self, a: Sequence) -> tuple:
        """An ambient covector agreeing with the dual-coordinate covector ``a`` on ``V_cell``."""
        n = len(self.origin)
        out = [Fraction(0)] * n
        for i, j in enumerate(self.cols):
            out[j] = sum((self.chart[i][k] * a[k] for k in range(self.dim)), Fraction(0))
        return tuple(out)


def _affine_basis(points: Sequence[Sequence]) -> list:
    return [la.sub(p, points[0]) for p in points[1:]]


def _chart(basis: list, n: int):
    if not basis:
        return (), []
    _, cols = la.rref(basis, n)
    sq = [[b[j] for j in cols] for b in basis]
    return tuple(cols), la.inverse(sq)


def _facet_enumeration(pts: Dict[int, tuple], d: int):
    """Facets of a full-dimensional polytope in ``Q^d`` by brute force.

    Returns ``{frozenset(vertex ids): outward normal}``.
    """
    ids = sorted(pts)
    found = {}
    if d == 0:
        return found
    for sub in combinations(ids, d):
        base = [pts[i] for i in sub]
        diffs = _affine_basis(base)
        normal = la.nullspace(diffs, d) if diffs else la.identity(d)
        if len(normal) != 1:
            continue
        a = normal[0]
        off = la.dot(a, base[0])
        on, pos, neg = set(), False, False
        for i in ids:
            s = la.dot(a, pts[i]) - off
            if s == 0:
                on.add(i)
            elif s > 0:
                pos = True
            else:
                neg = True
        if pos and neg:
            continue
        key = frozenset(on)
        if key in found:
            continue
        found[key] = la.scale(-1, a) if pos else a
    return found


class PComplex:
    """A validated polyhedral complex.  Build with :func:`build_complex`."""

    def __init__(self, vertices: List[tuple], cells: List[Cell]):
        self.vertices = vertices
        self.cells = cells
        self.n = len(vertices[0]) if vertices else 0
        self.dim = max((c.dim for c in cells), default=-1)
        self._by_vset = {frozenset(c.vertices): c.id for c in cells}
        self._by_dim: Dict[int, List[int]] = {}
        for c in cells:
            self._by_dim.setdefault(c.dim, []).append(c.id)
        self._incidence: Dict[tuple, int] = {}
        self._normals: Dict[int, Dict[int, tuple]] = {}
        self._faces: Dict[int, List[int]] = {}
        self.cache: dict = {}

    # -- lookup -----------------------------------------------------------
    def __len__(self):
        return len(self.cells)

    def __getitem__(self, i) -> Cell:
        return self.cells[i]

    def cells_of_dim(self, d: int) -> List[int]:
        return list(self._by_dim.get(d, []))

    def find(self, vertex_ids: Iterable[int]) -> Optional[int]:
        return self._by_vset.get(frozenset(vertex_ids))

    def facets(self, g: int) -> List[int]:
        return list(self.cells[g].facets)

    def cofacets(self, g: int) -> List[int]:
        return list(self.cells[g].cofacets)

    def faces(self, g: int) -> List[int]:
        """All faces of ``g`` including ``g`` itself, sorted by (dim, id)."""
        if g not in self._faces:
            vs = set(self.cells[g].vertices)
            fs = [c.id for c in self.cells if set(c.vertices) <= vs]
            self._faces[g] = sorted(fs, key=lambda i: (self.cells[i].dim, i))
        return self._faces[g]

    def is_simplicial(self) -> bool:
        return all(len(c.vertices) == c.dim + 1 for c in self.cells)

    def point(self, v: int) -> tuple:
        return self.vertices[v]

    # -- geometry ---------------------------------------------------------
    def incidence(self, g: int, d: int) -> int:
        return self._incidence[(g, d)]

    def facet_normals(self, g: int) -> Dict[int, tuple]:
        """Outward facet normals of ``g`` as dual-coordinate covectors."""
        return self._normals[g]

    def vertex_coords(self, g: int) -> Dict[int, tuple]:
        c = self.cells[g]
        return {v: c.point_coords(self.vertices[v]) for v in c.vertices}

    def barycenter(self, g: int) -> tuple:
        vs = self.cells[g].vertices
        n = Fraction(len(vs))
        return tuple(sum((self.vertices[v][i] for v in vs), Fraction(0)) / n for i in range(self.n))

    def contains_point(self, g: int, x: Sequence) -> bool:
        c = self.cells[g]
        w = la.sub(x, c.origin)
        if c.dim == 0:
            return la.is_zero(w)
        if c.basis and not la.in_span(w, c.basis):
            return False
        y = c.coords(w)
        coords = self.vertex_coords(g)
        for f, a in self._normals[g].items():
            v0 = self.cells[f].vertices[0]
            if la.dot(a, la.sub(y, coords[v0])) > 0:
                return False
        return True

    def orientation_sign(self, g: int, orient: Sequence[int]) -> int:
        """+1 if the vertex tuple ``orient`` orients ``g`` like the stored tuple."""
        c = self.cells[g]
        if c.dim == 0:
            return 1
        pts = [self.vertices[v] for v in orient]
        basis = _affine_basis(pts)
        return la.det_sign([c.coords(b) for b in basis])

    def tangent_sign(self, g: int, vectors: Sequence[Sequence]) -> int:
        """Sign of ``vectors`` (ambient, in ``V_g``) against the oriented basis of ``g``."""
        c = self.cells[g]
        return la.det_sign([c.coords(v) for v in vectors])


def _choose_orientation(pts: Dict[int, tuple], vids: Sequence[int]) -> tuple:
    chosen = [vids[0]]
    basis = []
    for v in vids[1:]:
        cand = basis + [la.sub(pts[v], pts[vids[0]])]
        if la.rank(cand) == len(cand):
            chosen.append(v)
            basis = cand
    return tuple(chosen)


def build_complex(vertices: Sequence[Sequence], cells: Sequence, check_intersections: bool = True) -> PComplex:
    """Validate and build a complex.

    ``cells`` holds vertex-id lists, ``(vertex_ids, orient)`` pairs or dicts
    ``{"vertices": [...], "orient": [...]}``.  A missing orientation is
    chosen greedily from the sorted vertex ids.
    """
    verts = [la.vec(v) for v in vertices]
    if len(set(verts)) != len(verts):
        raise ComplexError("two vertex ids share coordinates")
    n = len(verts[0]) if verts else 0
    raw = []
    for spec in cells:
        if isinstance(spec, dict):
            vids, orient = spec["vertices"], spec.get("orient")
        elif len(spec) == 2 and isinstance(spec[0], (list, tuple)):
            vids, orient = spec
        else:
            vids, orient = spec, None
        raw.append((tuple(sorted(set(vids))), tuple(orient) if orient else None))
    if len({r[0] for r in raw}) != len(raw):
        raise ComplexError("two cells share a vertex set")

    built = []
    pts = {i: v for i, v in enumerate(verts)}
    for cid, (vids, orient) in enumerate(raw):
        if any(v < 0 or v >= len(verts) for v in vids):
            raise ComplexError(f"cell {cid}: vertex id out of range")
        d = la.rank(_affine_basis([verts[v] for v in vids])) if len(vids) > 1 else 0
        if orient is None:
            orient = _choose_orientation(pts, vids)
        if len(orient) != d + 1 or not set(orient) <= set(vids):
            raise ComplexError(f"cell {cid}: orientation tuple must be {d + 1} of its vertices")
        basis = _affine_basis([verts[v] for v in orient])
        if len(basis) != d or (basis and la.rank(basis) != d):
            raise ComplexError(f"cell {cid}: orientation tuple is affinely dependent")
        cols, chart = _chart(basis, n)
        built.append(Cell(cid, vids, orient, d, verts[orient[0]], basis, cols=cols, chart=chart))

    X = PComplex(verts, built)
    facesets = {}
    for c in built:
        local = X.vertex_coords(c.id)
        found = _facet_enumeration(local, c.dim)
        normals = {}
        for key, a in found.items():
            f = X.find(key)
            if f is None:
                raise NotAFaceClosure(c.id, key)
            normals[f] = a
            c.facets.append(f)
            built[f].cofacets.append(c.id)
        X._normals[c.id] = normals
        for v in c.vertices:
            touching = [a for key, a in found.items() if v in key]
            if c.dim > 0 and (not touching or la.rank(touching) < c.dim):
                raise RedundantVertex(c.id, v)
    for c in built:
        c.facets.sort()
        c.cofacets.sort()
        bary = X.barycenter(c.id)
        for f in c.facets:
            nu = la.sub(X.barycenter(f), bary)
            s = X.tangent_sign(c.id, [nu] + list(built[f].basis))
            X._incidence[(c.id, f)] = s

    def geometric_faces(g):
        if g not in facesets:
            out = {frozenset(built[g].vertices)}
            for f in built[g].facets:
                out |= geometric_faces(f)
            facesets[g] = out
        return facesets[g]

    if check_intersections:
        for a, b in combinations(range(len(built)), 2):
            _check_pair(X, a, b, geometric_faces)
    return X


def _bbox_disjoint(X, a, b):
    for i in range(X.n):
        xa = [X.vertices[v][i] for v in X[a].vertices]
        xb = [X.vertices[v][i] for v in X[b].vertices]
        if max(xa) < min(xb) or max(xb) < min(xa):
            return True
    return False


def _check_pair(X: PComplex, a: int, b: int, geometric_faces):
    va, vb = set(X[a].vertices), set(X[b].vertices)
    shared = frozenset(va & vb)
    if shared and (shared not in geometric_faces(a) or shared not in geometric_faces(b)):
        raise BadIntersection(a, b)
    if shared == va or shared == vb:
        return  # one is a face of the other
    if not shared and _bbox_disjoint(X, a, b):
        return
    A, B = sorted(va), sorted(vb)
    # x = sum alpha_i A_i = sum beta_j B_j, alpha, beta >= 0, sums 1
    rows = []
    for i in range(X.n):
        rows.append([X.vertices[v][i] for v in A] + [-X.vertices[v][i] for v in B])
    rows.append([1] * len(A) + [0] * len(B))
    rows.append([0] * len(A) + [1] * len(B))
    rhs = [0] * X.n + [1, 1]
    if not shared:
        if linprog([0] * (len(A) + len(B)), rows, rhs).status != "infeasible":
            raise BadIntersection(a, b)
        return
    # functional c attaining its max over a exactly on the shared face
    ca = X[a]
    c_local = [Fraction(0)] * ca.dim
    for facet, normal in X.facet_normals(a).items():
        if shared <= set(X[facet].vertices):
            c_local = [x + y for x, y in zip(c_local, normal)]
    c_amb = ca.lift_covector(c_local)
    top = la.dot(c_amb, X.vertices[next(iter(shared))])
    cost = [la.dot(c_amb, X.vertices[v]) for v in A] + [0] * len(B)
    res = linprog(cost, rows, rhs)
    if res.status == "optimal" and res.value != top:
        raise BadIntersection(a, b)


# -- chains and cochains ------------------------------------------------------

class _CellFunction:
    kind = "cochain"

    def __init__(self, carrier, degree: int, values: Optional[dict] = None, ring: Ring = Q):
        self.carrier = carrier
        self.degree = degree
        self.ring = ring
        vals = {}
        for k, v in (values or {}).items():
            v = ring.coerce(v)
            if v:
                vals[int(k)] = v
        self.values = vals

    @property
    def complex(self):
        return self.carrier

    def _like(self, values):
        return type(self)(self.carrier, self.degree, values, self.ring)

    def _compatible(self, other):
        if not isinstance(other, _CellFunction) or other.carrier is not self.carrier \
                or other.degree != self.degree or other.kind != self.kind:
            raise ValueError("incompatible chains/cochains")
        if other.ring != self.ring:
            raise RingMismatch(f"{self.ring} vs {other.ring}")

    def __getitem__(self, cell: int):
        return self.values.get(cell, self.ring.zero())

    def evaluate(self, cell: int, orient: Optional[Sequence[int]] = None):
        val = self[cell]
        if orient is None:
            return val
        return val * self.carrier.orientation_sign(cell, orient)

    def __add__(self, other):
        self._compatible(other)
        out = dict(self.values)
        for k, v in other.values.items():
            out[k] = out[k] + v if k in out else v
        return self._like(out)

    def __neg__(self):
        return self._like({k: -v for k, v in self.values.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, c):
        return self._like({k: v * c for k, v in self.values.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, _CellFunction):
            return NotImplemented
        return (other.carrier is self.carrier and other.degree == self.degree
                and other.ring == self.ring and other.values == self.values)

    def __hash__(self):
        return id(self)

    def is_zero(self) -> bool:
        return not self.values

    def parity(self) -> str:
        ps = {elem_parity(v) for v in self.values.values()}
        if not ps:
            return "even"
        return ps.pop() if len(ps) == 1 else "mixed"

    def __repr__(self):
        body = ", ".join(f"{k}: {v}" for k, v in sorted(self.values.items()))
        return f"{type(self).__name__}(deg={self.degree}, {{{body}}})"


class Cochain(_CellFunction):
    """Odd function on oriented ``degree``-cells; stored on stored orientations."""

    kind = "cochain"


class Chain(_CellFunction):
    kind = "chain"


def zero_cochain(X: PComplex, p: int, ring: Ring = Q) -> Cochain:
    return Cochain(X, p, {}, ring)


def unit_cochain(X: PComplex, ring: Ring = Q) -> Cochain:
    return Cochain(X, 0, {v: ring.one() for v in X.cells_of_dim(0)}, ring)


def coboundary(r: Cochain) -> Cochain:
    X = r.carrier
    out = {}
    for g in X.cells_of_dim(r.degree + 1):
        acc = r.ring.zero()
        for f in X[g].facets:
            if f in r.values:
                acc = acc + r.values[f] * X.incidence(g, f)
        if acc:
            out[g] = acc
    return Cochain(X, r.degree + 1, out, r.ring)


def boundary(c: Chain) -> Chain:
    X = c.carrier
    out = {}
    for g, val in c.values.items():
        for f in X[g].facets:
            out[f] = out[f] + val * X.incidence(g, f) if f in out else val * X.incidence(g, f)
    return Chain(X, c.degree - 1, out, c.ring)


def coboundary_matrix(X: PComplex, p: int) -> list:
    """Matrix of ``d: C^p -> C^{p+1}``; rows (p+1)-cells, columns p-cells."""
    cols = X.cells_of_dim(p)
    idx = {c: i for i, c in enumerate(cols)}
    rows = []
    for g in X.cells_of_dim(p + 1):
        row = [Fraction(0)] * len(cols)
        for f in X[g].facets:
            row[idx[f]] = Fraction(X.incidence(g, f))
        rows.append(tuple(row))
    return rows


def cohomology_rank(X: PComplex, p: int) -> int:
    """``dim H^p(X; Q)``."""
    if p < 0:
        return 0
    n_p = len(X.cells_of_dim(p))
    d_p = coboundary_matrix(X, p)
    d_prev = coboundary_matrix(X, p - 1) if p > 0 else []
    rank_p = la.rank(d_p) if d_p and n_p else 0
    rank_prev = la.rank(d_prev) if d_prev and len(X.cells_of_dim(p - 1)) else 0
    return n_p - rank_p - rank_prev


def _components(r: _CellFunction):
    """Split values into scalar coordinate functions, one per blade."""
    if r.ring.kind == "Q":
        return {None: dict(r.values)}
    comps = {}
    for cell, val in r.values.items():
        for blade, c in val.terms.items():
            comps.setdefault(blade, {})[cell] = c
    return comps


def is_coboundary(r: Cochain) -> Optional[Cochain]:
    """A cochain ``w`` with ``d w == r``, or ``None`` if ``r`` is not exact.

    Solved exactly, one blade component at a time.
    """
    X, p = r.carrier, r.degree
    if p == 0:
        return Cochain(X, -1, {}, r.ring) if r.is_zero() else None
    rows_cells = X.cells_of_dim(p)
    cols_cells = X.cells_of_dim(p - 1)
    D = coboundary_matrix(X, p - 1)
    witness = {}
    for blade, comp in _components(r).items():
        b = [comp.get(c, Fraction(0)) for c in rows_cells]
        sol = la.solve_affine(D, b, len(cols_cells)) if D else None
        if sol is None:
            if D or any(b):
                return None
            continue
        for cell, x in zip(cols_cells, sol[0]):
            if x:
                if blade is None:
                    witness[cell] = x
                else:
                    witness.setdefault(cell, {})[blade] = x
    if r.ring.kind == "ext":
        witness = {c: Ext(r.ring.n, t) for c, t in witness.items()}
    w = Cochain(X, p - 1, witness, r.ring)
    assert coboundary(w) == r
    return w


def is_cocycle(r: Cochain) -> bool:
    return coboundary(r).is_zero()


def cochain_basis(X: PComplex, p: int, ring: Ring = Q) -> List[Cochain]:
    return [Cochain(X, p, {c: ring.one()}, ring) for c in X.cells_of_dim(p)]


def cocycle_basis(X: PComplex, p: int) -> List[Cochain]:
    """A basis of scalar ``p``-cocycles."""
    cols = X.cells_of_dim(p)
    D = coboundary_matrix(X, p)
    ker = la.nullspace(D, len(cols)) if D else la.identity(len(cols))
    return [Cochain(X, p, {c: x for c, x in zip(cols, k) if x}) for k in ker]
