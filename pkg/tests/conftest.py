import random

import pytest

from polycup import fixtures
from polycup.complex import Cochain, cocycle_basis, zero_cochain
from polycup.ring import Ext, Q, ext_ring


def random_ext(rng, n, grades=None):
    grades = range(n + 1) if grades is None else grades
    from itertools import combinations
    terms = {}
    for g in grades:
        for b in combinations(range(1, n + 1), g):
            if rng.random() < 0.6:
                terms[b] = rng.randint(-3, 3)
    return Ext(n, terms)


def random_cochain(rng, X, p, ring=Q, grades=None):
    vals = {}
    for c in X.cells_of_dim(p):
        vals[c] = rng.randint(-4, 4) if ring.kind == "Q" else random_ext(rng, ring.n, grades)
    return Cochain(X, p, vals, ring)


def random_cocycle(rng, X, p, ring=Q, grades=None):
    """Random combination of a scalar cocycle basis, with ring coefficients."""
    out = zero_cochain(X, p, ring)
    for b in cocycle_basis(X, p):
        c = rng.randint(-3, 3) if ring.kind == "Q" else random_ext(rng, ring.n, grades)
        out = out + Cochain(X, p, {k: c * v for k, v in b.values.items()}, ring)
    return out


@pytest.fixture
def rng():
    return random.Random(12345)


@pytest.fixture(scope="session")
def square():
    return fixtures.square()


@pytest.fixture(scope="session")
def cube():
    return fixtures.cube()
