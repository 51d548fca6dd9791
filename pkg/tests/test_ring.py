"""Exterior algebra: supercommutativity, associativity, ring mismatches."""

import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings, strategies as st

from polycup.ring import Ext, Q, RingMismatch, ext_ring, is_zero, mul, parity

N = 3


@st.composite
def homogeneous(draw, n=N):
    g = draw(st.integers(0, n))
    blades = list(combinations(range(1, n + 1), g))
    coeffs = draw(st.lists(st.integers(-3, 3), min_size=len(blades), max_size=len(blades)))
    return Ext(n, dict(zip(blades, coeffs))), g


@st.composite
def elements(draw, n=N):
    out = Ext(n)
    for _ in range(draw(st.integers(1, 3))):
        out = out + draw(homogeneous(n))[0]
    return out


@given(homogeneous(), homogeneous())
def test_supercommutative(a, b):
    (x, p), (y, q) = a, b
    assert x * y == y * x * (-1) ** (p * q)


@given(elements(), elements(), elements())
@settings(max_examples=60)
def test_associative_and_distributive(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


def test_basis_products():
    e1, e2 = Ext.basis(1, 2), Ext.basis(2, 2)
    assert e1 * e2 == Ext(2, {(1, 2): 1})
    assert e2 * e1 == Ext(2, {(1, 2): -1})
    assert e1 * e1 == Ext(2)


def test_wedge_vectors_is_determinant():
    v = Ext.wedge_vectors([(1, 2), (3, 4)], 2)
    assert v.coeff((1, 2)) == -2


def test_blade_validation():
    with pytest.raises(ValueError):
        Ext(3, {(2, 1): 1})
    with pytest.raises(ValueError):
        Ext(2, {(3,): 1})


def test_ring_mismatch():
    with pytest.raises(RingMismatch):
        Ext.basis(1, 2) + Ext.basis(1, 3)
    with pytest.raises(RingMismatch):
        Q.coerce(Ext.basis(1, 2))
    with pytest.raises(RingMismatch):
        ext_ring(3).coerce(Ext.basis(1, 2))


def test_parity_and_helpers():
    assert parity(Fraction(2)) == "even"
    assert parity(Ext.basis(1, 2)) == "odd"
    assert parity(Ext(2, {(): 1, (1,): 1})) == "mixed"
    assert parity(Ext(2)) == "even"
    assert is_zero(Ext(2)) and not is_zero(Fraction(1))
    assert mul(Fraction(2), Fraction(3)) == 6
