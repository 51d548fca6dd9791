"""Exact simplex against scipy's floating-point LP on small random programs."""

from fractions import Fraction as F

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog as sp_linprog

from polycup import linalg as la
from polycup.lp import linprog

small = st.integers(min_value=-3, max_value=3)


@given(st.integers(1, 3), st.integers(1, 5), st.data())
@settings(max_examples=150, deadline=None)
def test_status_and_value_match_scipy(m, n, data):
    A = [data.draw(st.lists(small, min_size=n, max_size=n)) for _ in range(m)]
    b = data.draw(st.lists(small, min_size=m, max_size=m))
    c = data.draw(st.lists(small, min_size=n, max_size=n))
    ours = linprog(c, A, b)
    ref = sp_linprog(c, A_eq=np.array(A, float), b_eq=np.array(b, float), bounds=[(0, None)] * n, method="highs")
    status = {0: "optimal", 2: "infeasible", 3: "unbounded"}[ref.status]
    assert ours.status == status
    if status == "optimal":
        assert float(ours.value) == pytest.approx(ref.fun, abs=1e-7)
        assert la.matvec(A, ours.x) == la.vec(b)
        assert all(x >= 0 for x in ours.x)


def test_redundant_rows():
    res = linprog([1, 1], [[1, 1], [2, 2]], [1, 2])
    assert res.status == "optimal" and res.value == 1


def test_degenerate_cycling_example():
    # Beale's example, which cycles under the textbook rule
    c = [F(-3, 4), 150, F(-1, 50), 6, 0, 0, 0]
    A = [[F(1, 4), -60, F(-1, 25), 9, 1, 0, 0],
         [F(1, 2), -90, F(-1, 50), 3, 0, 1, 0],
         [0, 0, 1, 0, 0, 0, 1]]
    res = linprog(c, A, [0, 0, 1])
    assert res.status == "optimal"
    assert res.value == F(-1, 20)
