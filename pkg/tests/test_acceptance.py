"""Acceptance criteria 1-11, one printed PASS/FAIL line each.

Every check is exact (zero tolerance).  Run with ``pytest tests/test_acceptance.py -s``
or directly with ``python3 tests/test_acceptance.py``.
"""

import itertools
import os
import random
import sys
from fractions import Fraction
from math import factorial

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from conftest import random_cochain, random_cocycle  # noqa: E402
from polycup import fixtures  # noqa: E402
from polycup.complex import (BadIntersection, ComplexError, NotAFaceClosure, RedundantVertex,  # noqa: E402
                             build_complex, coboundary, cohomology_rank, is_coboundary)
from polycup.cup import cech_cup, cup, is_convenient, pair_set, sample_convenient, v_order  # noqa: E402
from polycup.discriminant import component_signature, discriminant, same_component, wall_crossing  # noqa: E402
from polycup.geometry import (R_basis, in_R, mixed_volume, mixed_volume_by_polarization,  # noqa: E402
                              polytope_complex, vol_cocycle, volume_by_triangulation)
from polycup.ring import Ext, ext_ring  # noqa: E402
from polycup.subdivision import build_subdivision, res, restriction_defect  # noqa: E402

SEED = 20240607


def _rng(k):
    return random.Random(SEED + k)


def _ring_for(X, kind):
    return ext_ring(X.n) if kind == "ext" else None


def _cochain(rng, X, p, ring, grades=None):
    return random_cochain(rng, X, p, ring, grades) if ring else random_cochain(rng, X, p)


def _cocycle(rng, X, p, ring, grades=None):
    return random_cocycle(rng, X, p, ring, grades) if ring else random_cocycle(rng, X, p)


def _parity_sign(r, s):
    odd = {"odd": 1, "even": 0}
    return (-1) ** (odd[r.parity()] * odd[s.parity()])


# -- criteria ----------------------------------------------------------------------

def criterion_1():
    """Cup with a sampled convenient v equals the Cech product in the v-ascending order."""
    rng = _rng(1)
    complexes = [("triangle", fixtures.triangle()), ("tetra_boundary", fixtures.tetra_boundary())]
    complexes += [(f"triangulation{k}", fixtures.random_triangulation(7, k)) for k in range(10)]
    checked = bad = 0
    for name, X in complexes:
        for seed in range(3):
            v = sample_convenient(X, seed)
            order = v_order(X, v)
            for kind in ("Q", "ext"):
                R = _ring_for(X, kind)
                for p in range(X.dim + 1):
                    for q in range(X.dim + 1 - p):
                        r, s = _cochain(rng, X, p, R), _cochain(rng, X, q, R)
                        checked += 1
                        bad += cup(r, s, v) != cech_cup(r, s, order)
    return bad == 0, f"{checked - bad}/{checked} products equal the Cech product"


def criterion_2():
    """Graded commutativity r cup_v s = (-1)^(pq+|r||s|) s cup_v r and Leibniz, 100+ pairs per fixture."""
    rng = _rng(2)
    names = ["square", "cube", "triangle", "tetra_boundary", "triangulation"]
    builds = [fixtures.square, fixtures.cube, fixtures.triangle, fixtures.tetra_boundary,
              lambda: fixtures.random_triangulation(6, 4)]
    comm_ok = comm_total = leib_ok = leib_total = rev_ok = 0
    per_fixture = {}
    grade_choices = [((0,), (0,)), ((0,), (1,)), ((1,), (1,)), ((2,), (1,))]
    for name, build in zip(names, builds):
        X = build()
        R = ext_ring(X.n)
        params = [sample_convenient(X, k) for k in range(4)]
        degs = [(p, q) for p in range(X.dim + 1) for q in range(X.dim + 1 - p)]
        count = 0
        fx_ok = 0
        while count < 100:
            v = params[count % len(params)]
            p, q = degs[count % len(degs)]
            ga, gb = grade_choices[count % len(grade_choices)]
            r, s = _cochain(rng, X, p, R, ga), _cochain(rng, X, q, R, gb)
            sign = (-1) ** (p * q) * _parity_sign(r, s)
            lhs = cup(r, s, v)
            same = lhs == cup(s, r, v) * sign
            comm_ok += same
            fx_ok += same
            rev_ok += lhs == cup(s, r, tuple(-x for x in v)) * sign
            comm_total += 1
            if p + q < X.dim:
                leib_total += 1
                leib_ok += coboundary(lhs) == cup(coboundary(r), s, v) + cup(r, coboundary(s), v) * (-1) ** p
            count += 1
        per_fixture[name] = f"{fx_ok}/{count}"
    ok = comm_ok == comm_total and leib_ok == leib_total
    detail = (f"same-v sign law {comm_ok}/{comm_total} ({', '.join(f'{k} {v}' for k, v in per_fixture.items())}); "
              f"Leibniz {leib_ok}/{leib_total}; with v negated on the right {rev_ok}/{comm_total}")
    return ok, detail


def criterion_3():
    """vol_p cup_v vol_q = vol_(p+q) on the square, cube, 3-simplex and a random lattice polygon."""
    complexes = {"square": fixtures.square(), "cube": fixtures.cube(), "simplex3": fixtures.simplex3(),
                 "lattice_polygon": polytope_complex(fixtures.random_lattice_polygon(3))}
    checked = bad = 0
    for name, X in complexes.items():
        vol = [vol_cocycle(X, q) for q in range(X.dim + 1)]
        for seed in range(5):
            v = sample_convenient(X, seed)
            for p in range(X.dim + 1):
                for q in range(X.dim + 1 - p):
                    checked += 1
                    bad += cup(vol[p], vol[q], v) != vol[p + q]
    return bad == 0, f"{checked - bad}/{checked} identities exact over 5 parameters per complex"


def criterion_4():
    """(vol_1)^n read off the top cell: unit cube -> 3! e123 and volume 1, standard 3-simplex -> 1/6."""
    results = []
    ok = True
    for name, pts, expected in [("cube", list(itertools.product((0, 1), repeat=3)), Fraction(1)),
                                ("simplex3", [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)], Fraction(1, 6))]:
        X = polytope_complex(pts)
        g = X.cells_of_dim(3)[0]
        v1 = vol_cocycle(X, 1)
        for seed in range(3):
            v = sample_convenient(X, seed)
            top = cup(cup(v1, v1, v), v1, v)[g]
            vol = top.coeff((1, 2, 3)) / factorial(3)
            tri = volume_by_triangulation(pts)
            good = vol == expected == tri and top == Ext(3, {(1, 2, 3): 6 * expected})
            ok = ok and good
        results.append(f"{name} {vol} (triangulation {tri})")
    return ok, "; ".join(results)


def criterion_5():
    """Mixed volume: V([0,e1],[0,e2]) = 1/2 and 20 random lattice-polygon pairs against polarization."""
    base = mixed_volume([[(0, 0), (1, 0)], [(0, 0), (0, 1)]])[0]
    bad = 0
    for k in range(20):
        A = fixtures.random_lattice_polygon(100 + k)
        B = fixtures.random_lattice_polygon(200 + k)
        bad += mixed_volume([A, B], seed=k)[0] != mixed_volume_by_polarization(A, B)
    return base == Fraction(1, 2) and bad == 0, f"V(seg, seg) = {base}; {20 - bad}/20 polarization matches"


def criterion_6():
    """Cocycle products are constant over 3+ convenient points in each component, square and cube."""
    rng = _rng(6)
    details = []
    ok = True
    for name, X in [("square", fixtures.square()), ("cube", fixtures.cube())]:
        comps = {}
        seed = 0
        target = 2 ** X.n
        while (len(comps) < target or min(len(v) for v in comps.values()) < 3) and seed < 2000:
            v = sample_convenient(X, seed)
            comps.setdefault(component_signature(X, v), []).append(v)
            seed += 1
        enough = len(comps) == target and all(len(v) >= 3 for v in comps.values())
        segs = all(same_component(X, a, b) for pts in comps.values() for a, b in itertools.combinations(pts[:3], 2))
        equal = True
        for p in range(X.dim + 1):
            for q in range(X.dim + 1 - p):
                r, s = _cocycle(rng, X, p, ext_ring(X.n), (0, 1)), _cocycle(rng, X, q, ext_ring(X.n), (0, 1))
                for pts in comps.values():
                    ref = cup(r, s, pts[0])
                    equal = equal and all(cup(r, s, w) == ref for w in pts[1:3])
        ok = ok and enough and segs and equal
        details.append(f"{name}: {len(comps)} components, products equal {equal}")
    return ok, "; ".join(details)


def criterion_7():
    """Wall crossing on the square across each axis wall; two crossing points per wall give one correction."""
    rng = _rng(7)
    X = fixtures.square()
    walls = {(1, 0): [((1, 2), (-1, 2)), ((3, 1), (-1, 5))],
             (0, 1): [((2, 1), (2, -1)), ((1, 3), (5, -1))]}
    checked = bad = kappa_bad = 0
    for wall, segs in walls.items():
        for _ in range(10):
            r, s = _cocycle(rng, X, 1, None), _cocycle(rng, X, 1, None)
            results = []
            for u, v in segs:
                wc = wall_crossing(r, s, u, v)
                checked += 1
                bad += wc.correction != cup(r, s, v) - cup(r, s, u) or wc.wall.normal != wall
                results.append(wc)
            kappa_bad += results[0].kappa == results[1].kappa or results[0].correction != results[1].correction
    ok = bad == 0 and kappa_bad == 0
    return ok, f"{checked - bad}/{checked} crossings exact; crossing-point independence failures {kappa_bad}"


def criterion_8():
    """On the cylinder, product differences for any convenient u, v are coboundaries and classes agree."""
    rng = _rng(8)
    X = fixtures.cylinder()
    R = ext_ring(3)
    pts = [sample_convenient(X, k) for k in range(6)]
    apart = max(sum(a != b for a, b in zip(component_signature(X, u), component_signature(X, v)))
                for u, v in itertools.combinations(pts, 2))
    checked = bad = 0
    for p in range(3):
        for q in range(3 - p):
            r, s = _cocycle(rng, X, p, R), _cocycle(rng, X, q, R)
            # other representatives of the same classes
            r2 = r + coboundary(_cochain(rng, X, p - 1, R)) if p else r
            s2 = s + coboundary(_cochain(rng, X, q - 1, R)) if q else s
            for u, v in itertools.combinations(pts, 2):
                checked += 2
                bad += is_coboundary(cup(r, s, u) - cup(r, s, v)) is None
                bad += is_coboundary(cup(r, s, u) - cup(r2, s2, v)) is None
    ok = bad == 0 and cohomology_rank(X, 1) == 1
    return ok, f"{checked - bad}/{checked} differences exact; parameters up to {apart} walls apart; H^1 rank 1"


def criterion_9():
    """Products of R* members are identical across 5 sampled convenient parameters."""
    rng = _rng(9)
    checked = bad = 0
    for X in [fixtures.square(), fixtures.cube(), fixtures.simplex3(), fixtures.cylinder()]:
        pts = [sample_convenient(X, k) for k in range(5)]
        members = {p: [vol_cocycle(X, p)] for p in range(X.dim + 1)}
        for p in range(X.dim + 1):
            basis = R_basis(X, p)
            for _ in range(2):
                if basis:
                    members[p].append(sum((b * rng.randint(-3, 3) for b in basis[1:]), basis[0] * rng.randint(1, 3)))
        for p in range(X.dim + 1):
            for q in range(X.dim + 1 - p):
                for r in members[p]:
                    for s in members[q]:
                        assert in_R(r) and in_R(s)
                        ref = cup(r, s, pts[0])
                        checked += 1
                        bad += any(cup(r, s, w) != ref for w in pts[1:])
    return bad == 0, f"{checked - bad}/{checked} products identical across parameters"


def _common_parameter(X, Y):
    for k in range(200):
        v = sample_convenient(X, k)
        if is_convenient(v, Y):
            return v
    raise RuntimeError("no common convenient parameter")


def criterion_10():
    """res commutes with d, res(vol) = vol, the defect is exact (zero on R*), cohomology ranks agree."""
    rng = _rng(10)
    lines = []
    ok = True
    for name, X, Y in [("diagonal square", fixtures.diagonal_square(), fixtures.square()),
                       ("barycentric triangle", fixtures.barycentric_triangle(), fixtures.triangle())]:
        m = build_subdivision(X, Y)
        R = ext_ring(2)
        commute = all(res(coboundary(r), m) == coboundary(res(r, m))
                      for p in range(X.dim) for r in [_cochain(rng, X, p, R) for _ in range(10)])
        vol = all(res(vol_cocycle(X, p), m) == vol_cocycle(Y, p) for p in range(X.dim + 1))
        v = _common_parameter(X, Y)
        exact = zero_R = True
        for p in range(X.dim + 1):
            for q in range(X.dim + 1 - p):
                for _ in range(5):
                    d, w = restriction_defect(_cocycle(rng, X, p, R), _cocycle(rng, X, q, R), v, m)
                    exact = exact and w is not None
                d, _ = restriction_defect(vol_cocycle(X, p), vol_cocycle(X, q), v, m)
                zero_R = zero_R and d.is_zero()
        ranks = all(cohomology_rank(X, p) == cohomology_rank(Y, p) for p in range(3))
        good = commute and vol and exact and zero_R and ranks
        ok = ok and good
        lines.append(f"{name}: res d = d res {commute}, res vol = vol {vol}, defect exact {exact}, "
                     f"R* defect zero {zero_R}, ranks equal {ranks}")
    return ok, "; ".join(lines)


def criterion_11():
    """d d = 0, validation kill-tests, singleton pair sets on simplices, the square's two axis walls."""
    rng = _rng(11)
    dd = True
    for X in [fixtures.square(), fixtures.cube(), fixtures.tetra_boundary(), fixtures.cylinder()]:
        for p in range(X.dim - 1):
            dd = dd and coboundary(coboundary(_cochain(rng, X, p, ext_ring(X.n)))).is_zero()
    V = [(0, 0), (1, 0), (1, 1), (0, 1)]
    good = [[0], [1], [2], [3], [0, 1], [1, 2], [2, 3], [0, 3], [0, 1, 2, 3]]
    h = Fraction(1, 2)
    mutations = [
        (V, [c for c in good if c != [1, 2]], NotAFaceClosure),
        (V + [(h, 0)], [[0], [1], [2], [3], [4], [0, 4], [4, 1], [1, 2], [2, 3], [0, 3], [0, 1, 2, 3, 4]],
         (RedundantVertex, NotAFaceClosure)),
        ([(0, 0), (2, 0), (0, 2), (1, h), (2, 2)], [[0], [1], [2], [3], [4], [0, 1], [1, 2], [0, 2], [0, 3],
                                                   [3, 4], [0, 4], [0, 1, 2], [0, 3, 4]], BadIntersection),
        ([(0, 0), (1, 1), (0, 1), (1, 0)], [[0], [1], [2], [3], [0, 1], [2, 3]], BadIntersection),
        ([(0, 0), (0, 0)], [[0], [1]], ComplexError),
        (V, good + [[3, 0]], ComplexError),
        (V, good[:-1] + [([0, 1, 2, 3], [0, 1, 2, 1])], ComplexError),
    ]
    killed = 0
    for verts, cells, err in mutations:
        try:
            build_complex(verts, cells)
        except err:
            killed += 1
    build_complex(V, good)
    single = True
    for X in [fixtures.triangle(), fixtures.tetra_boundary(), fixtures.simplex3()]:
        for seed in range(3):
            v = sample_convenient(X, seed)
            rank = {u: i for i, u in enumerate(v_order(X, v))}
            for g in range(len(X)):
                us = sorted(X[g].vertices, key=rank.__getitem__)
                for p in range(X[g].dim + 1):
                    ps = pair_set(X, g, p, X[g].dim - p, v)
                    single = single and len(ps) == 1 and \
                        (ps.entries[0].delta, ps.entries[0].lam) == (X.find(us[:p + 1]), X.find(us[p:]))
    walls = [h_.normal for h_ in discriminant(fixtures.square())]
    ok = dd and killed == len(mutations) and single and walls == [(0, 1), (1, 0)]
    return ok, (f"dd=0 {dd}; mutations rejected {killed}/{len(mutations)}; singleton pair sets {single}; "
                f"square walls {walls}")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
            criterion_7, criterion_8, criterion_9, criterion_10, criterion_11]


def _line(k, ok, detail):
    return f"CRITERION {k:2d}: {'PASS' if ok else 'FAIL'} - {detail}"


@pytest.mark.parametrize("k", range(1, 12))
def test_criterion(k, capsys):
    ok, detail = CRITERIA[k - 1]()
    with capsys.disabled():
        print("\n" + _line(k, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    failed = 0
    for k, crit in enumerate(CRITERIA, 1):
        ok, detail = crit()
        print(_line(k, ok, detail), flush=True)
        failed += not ok
    sys.exit(1 if failed else 0)
