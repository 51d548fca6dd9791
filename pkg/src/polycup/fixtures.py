"""Small complexes used by tests, scripts and the CLI demo inputs."""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations, product
from typing import List, Sequence

from . import linalg as la
from .complex import PComplex, build_complex


def _all_faces(cells: Sequence[Sequence[int]]) -> List[tuple]:
    """Face closure of a list of simplices given by vertex ids."""
    out = set()
    for c in cells:
        for k in range(1, len(c) + 1):
            out.update(tuple(sorted(f)) for f in combinations(c, k))
    return sorted(out, key=lambda f: (len(f), f))


def simplicial(vertices, simplices) -> PComplex:
    return build_complex(vertices, _all_faces(simplices))


def square() -> PComplex:
    """Unit square with its four edges and vertices (a single 2-cell)."""
    V = [(0, 0), (1, 0), (1, 1), (0, 1)]
    cells = [[0], [1], [2], [3], [0, 1], [1, 2], [2, 3], [0, 3], ([0, 1, 2, 3], [0, 1, 3])]
    return build_complex(V, cells)


def square_boundary() -> PComplex:
    V = [(0, 0), (1, 0), (1, 1), (0, 1)]
    return build_complex(V, [[0], [1], [2], [3], [0, 1], [1, 2], [2, 3], [0, 3]])


def triangle() -> PComplex:
    return simplicial([(0, 0), (1, 0), (0, 1)], [(0, 1, 2)])


def simplex3() -> PComplex:
    return simplicial([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], [(0, 1, 2, 3)])


def tetra_boundary() -> PComplex:
    """Boundary of the standard 3-simplex: a 2-sphere in R^3."""
    V = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
    return simplicial(V, list(combinations(range(4), 3)))


def cube(n: int = 3) -> PComplex:
    from .geometry import polytope_complex
    return polytope_complex(list(product((0, 1), repeat=n)))


def diagonal_square() -> PComplex:
    """The unit square split along the diagonal into two triangles."""
    return simplicial([(0, 0), (1, 0), (1, 1), (0, 1)], [(0, 1, 2), (0, 2, 3)])


def barycentric_triangle() -> PComplex:
    """Standard triangle subdivided from its barycenter."""
    V = [(0, 0), (1, 0), (0, 1), (Fraction(1, 3), Fraction(1, 3))]
    return simplicial(V, [(0, 1, 3), (1, 2, 3), (0, 2, 3)])


def midpoint_square_boundary() -> PComplex:
    """Square boundary with each edge split at its midpoint."""
    h = Fraction(1, 2)
    V = [(0, 0), (1, 0), (1, 1), (0, 1), (h, 0), (1, h), (h, 1), (0, h)]
    edges = [(0, 4), (4, 1), (1, 5), (5, 2), (2, 6), (6, 3), (3, 7), (7, 0)]
    return build_complex(V, [[i] for i in range(8)] + [list(e) for e in edges])


def cylinder() -> PComplex:
    """Square boundary times a segment: four rectangles in R^3, with H^1 of rank one."""
    base = [(0, 0), (1, 0), (1, 1), (0, 1)]
    V = [(x, y, z) for z in (0, 1) for x, y in base]
    cells = [[i] for i in range(8)]
    cells += [[i, (i + 1) % 4] for i in range(4)] + [[4 + i, 4 + (i + 1) % 4] for i in range(4)]
    cells += [[i, i + 4] for i in range(4)]
    for i in range(4):
        j = (i + 1) % 4
        cells.append(([i, j, j + 4, i + 4], [i, j, i + 4]))
    return build_complex(V, cells)


def segment() -> PComplex:
    return build_complex([(0,), (1,)], [[0], [1], [0, 1]])


def random_triangulation(npts: int = 7, seed: int = 0, box: int = 6) -> PComplex:
    """A triangulation of random lattice points in general position (incremental sweep)."""
    rng = random.Random(seed)
    pts: set = set()
    while len(pts) < npts:
        p = (rng.randint(0, box), rng.randint(0, box))
        if all(not _collinear(p, a, b) for a, b in combinations(pts, 2)):
            pts.add(p)
    P = sorted(pts)
    tris = []
    done = [0, 1]
    for i in range(2, len(P)):
        # points arrive left to right, so each new one sees part of the hull
        hull = _convex_hull([P[j] for j in done], done)
        for a, b in zip(hull, hull[1:] + hull[:1]):
            if _orient(P[a], P[b], P[i]) < 0:
                tris.append((a, b, i))
        done.append(i)
    return simplicial(P, tris)


def _orient(a, b, c) -> int:
    d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (d > 0) - (d < 0)


def _collinear(a, b, c) -> bool:
    return _orient(a, b, c) == 0


def _convex_hull(pts, ids) -> list:
    """Counterclockwise hull (monotone chain) returned as ids."""
    order = sorted(range(len(pts)), key=lambda k: pts[k])
    lower, upper = [], []
    for k in order:
        while len(lower) >= 2 and _orient(pts[lower[-2]], pts[lower[-1]], pts[k]) <= 0:
            lower.pop()
        lower.append(k)
    for k in reversed(order):
        while len(upper) >= 2 and _orient(pts[upper[-2]], pts[upper[-1]], pts[k]) <= 0:
            upper.pop()
        upper.append(k)
    return [ids[k] for k in lower[:-1] + upper[:-1]]


def random_lattice_polygon(seed: int = 0, npts: int = 6, box: int = 4) -> list:
    """Vertices of the convex hull of random lattice points (at least a triangle)."""
    rng = random.Random(seed)
    while True:
        pts = list({(rng.randint(-box, box), rng.randint(-box, box)) for _ in range(npts)})
        if len(pts) < 3:
            continue
        hull = _convex_hull(pts, list(range(len(pts))))
        if len(hull) >= 3:
            return [pts[k] for k in hull]
