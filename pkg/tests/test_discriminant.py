"""Special triples, walls, point classes, theta cochains and wall crossing."""

import itertools

import pytest

from conftest import random_cochain, random_cocycle
from polycup import fixtures
from polycup.complex import Cochain, is_coboundary
from polycup.cup import cup, sample_convenient
from polycup.discriminant import (BadKappa, MultipleCrossings, NoCrossing, PhiOnHyperplane, classify_point,
                                  component_signature, discriminant, special_triples, theta_cochain,
                                  wall_crossing, wall_crossing_delta)
from polycup.geometry import R_basis, vol_cocycle
from polycup.ring import ext_ring


def test_square_special_triples(square):
    trips = special_triples(square, 1, 1)
    assert [(t.delta, t.lam, t.gamma) for t in trips] == [(e, e, e) for e in square.cells_of_dim(1)]
    assert special_triples(square, 1, 0) == []


def test_non_maximal_cells_give_triples(cube):
    edges = set(cube.cells_of_dim(1))
    faces = cube.cells_of_dim(2)
    t11 = {(t.delta, t.lam, t.gamma) for t in special_triples(cube, 1, 1)}
    assert {(e, e, e) for e in edges} <= t11
    t12 = {(t.delta, t.lam, t.gamma) for t in special_triples(cube, 1, 2)}
    for g in faces:
        for d in cube[g].facets:
            assert (d, g, g) in t12


def test_square_discriminant(square):
    assert [h.normal for h in discriminant(square)] == [(0, 1), (1, 0)]


def test_cube_discriminant(cube):
    assert sorted(h.normal for h in discriminant(cube)) == [(0, 0, 1), (0, 1, 0), (1, 0, 0)]


def test_one_dimensional_complex_has_no_walls():
    assert discriminant(fixtures.square_boundary()) == []
    assert discriminant(fixtures.midpoint_square_boundary()) == []


def test_walls_are_orthogonal_to_their_lines(cube):
    from polycup import linalg as la
    for h in discriminant(cube):
        for t in h.triples:
            assert la.primitive_integer(t.line) == h.normal


def test_classify_point(square):
    assert classify_point((1, 2), square).kind == "convenient"
    pc = classify_point((0, 1), square)
    assert pc.kind == "on-unconvenient-hyperplane" and pc.hyperplanes == [(1, 0)]
    assert classify_point((0, 0), square).hyperplanes == [(0, 1), (1, 0)]


def test_theta_scaling_and_sign(square, rng):
    t = special_triples(square, 1, 1)[0]
    r, s = random_cochain(rng, square, 1), random_cochain(rng, square, 1)
    a = theta_cochain(r, s, t, (1, 0))
    assert a == theta_cochain(r, s, t, (2, 5))
    assert theta_cochain(r, s, t, (-1, 0)) == a * -1
    assert set(a.values) <= {t.gamma}
    with pytest.raises(PhiOnHyperplane):
        theta_cochain(r, s, t, (0, 1))
    zero = Cochain(square, 1, {})
    assert theta_cochain(zero, s, t, (1, 0)).is_zero()


def test_theta_vanishes_on_R(cube):
    vol = vol_cocycle(cube, 1)
    for t in special_triples(cube, 1, 1):
        assert theta_cochain(vol, vol, t, (1, 2, 3)).is_zero()


def test_wall_crossing_square_example(square):
    # a scalar 1-coboundary: d of the vertex values (0, 1, 3, 7)
    r = Cochain(square, 1, {4: 1, 5: 2, 6: 4, 7: 7})
    u, v = (1, 2), (-1, 2)
    delta = wall_crossing_delta(r, r, u, v)
    assert delta == cup(r, r, v) - cup(r, r, u)
    # r4 r7 + r5 r6 - r4 r5 - r7 r6, computed by hand from the two pair sets
    assert delta[8] == -15


SEGMENTS = {
    "square": [((1, 2), (-1, 2)), ((2, 1), (2, -1)), ((-3, -1), (3, -1)), ((1, -2), (1, 2))],
    "cube": [((1, 2, 3), (-1, 2, 3)), ((1, 2, 3), (1, -2, 3)), ((3, 1, 2), (3, 1, -2)), ((-2, -1, 5), (-2, 1, 5))],
    "cylinder": [((1, 2, 3), (-1, 2, 3)), ((1, 2, 3), (1, 2, -3)), ((2, -1, 1), (2, 1, 1))],
}
BUILD = {"square": fixtures.square, "cube": fixtures.cube, "cylinder": fixtures.cylinder}


@pytest.mark.parametrize("name", sorted(SEGMENTS))
@pytest.mark.parametrize("ring", ["Q", "ext"])
def test_wall_crossing_identity(name, ring, rng):
    X = BUILD[name]()
    R = ext_ring(X.n) if ring == "ext" else None
    for u, v in SEGMENTS[name]:
        for p in range(1, X.dim):
            for q in range(1, X.dim + 1 - p):
                r = random_cocycle(rng, X, p, R) if R else random_cocycle(rng, X, p)
                s = random_cocycle(rng, X, q, R) if R else random_cocycle(rng, X, q)
                assert wall_crossing_delta(r, s, u, v) == cup(r, s, v) - cup(r, s, u)


def test_wall_crossing_independent_of_kappa(square, rng):
    r, s = random_cocycle(rng, square, 1), random_cocycle(rng, square, 1)
    a = wall_crossing(r, s, (1, 2), (-1, 2))
    b = wall_crossing(r, s, (3, 1), (-1, 5))
    assert a.kappa != b.kappa and a.wall.normal == b.wall.normal
    assert a.correction == b.correction


def test_wall_crossing_errors(square, rng):
    r = random_cocycle(rng, square, 1)
    with pytest.raises(NoCrossing):
        wall_crossing(r, r, (1, 2), (2, 1))
    with pytest.raises(MultipleCrossings):
        wall_crossing(r, r, (1, 2), (-2, -1))
    with pytest.raises(BadKappa):
        wall_crossing(r, r, (1, 1), (-1, -1))
    with pytest.raises(ValueError):
        wall_crossing(Cochain(square, 1, {4: 1}), r, (1, 2), (-1, 2))


def test_R_members_give_zero_correction(cube):
    vol = vol_cocycle(cube, 1)
    assert wall_crossing_delta(vol, vol, (1, 2, 3), (-1, 2, 3)).is_zero()


@pytest.mark.parametrize("name", ["square", "cube"])
def test_products_constant_on_components(name, rng):
    X = BUILD[name]()
    pts = [sample_convenient(X, k) for k in range(30)]
    by_comp = {}
    for v in pts:
        by_comp.setdefault(component_signature(X, v), []).append(v)
    for p in range(1, X.dim):
        for q in range(1, X.dim + 1 - p):
            r, s = random_cocycle(rng, X, p), random_cocycle(rng, X, q)
            for vs in by_comp.values():
                ref = cup(r, s, vs[0])
                assert all(cup(r, s, w) == ref for w in vs[1:])


def test_differences_are_coboundaries_on_cylinder(rng):
    X = fixtures.cylinder()
    R = ext_ring(3)
    pts = [sample_convenient(X, k) for k in range(6)]
    for p in range(3):
        for q in range(3 - p):
            r, s = random_cocycle(rng, X, p, R), random_cocycle(rng, X, q, R)
            for u, v in itertools.combinations(pts, 2):
                assert is_coboundary(cup(r, s, u) - cup(r, s, v)) is not None


@pytest.mark.parametrize("name", ["square", "cube", "cylinder"])
def test_R_products_do_not_depend_on_parameter(name, rng):
    X = BUILD[name]()
    pts = [sample_convenient(X, k) for k in range(5)]
    for p in range(X.dim + 1):
        for q in range(X.dim + 1 - p):
            basis_p, basis_q = R_basis(X, p), R_basis(X, q)
            if not basis_p or not basis_q:
                continue
            r = sum((b * rng.randint(-3, 3) for b in basis_p[1:]), basis_p[0])
            s = sum((b * rng.randint(-3, 3) for b in basis_q[1:]), basis_q[0])
            ref = cup(r, s, pts[0])
            assert all(cup(r, s, w) == ref for w in pts[1:])
