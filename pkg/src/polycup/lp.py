"""Exact two-phase simplex over the rationals.

Only the standard form ``min c.x  s.t.  A x = b, x >= 0`` is supported; the
callers (cone intersections, polytope intersections) are naturally in that
form.  Bland's rule guarantees termination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: Optional[tuple] = None
    value: Optional[Fraction] = None

    @property
    def feasible(self) -> bool:
        return self.status != "infeasible"


def _pivot(T, basis, r, c):
    inv = 1 / T[r][c]
    T[r] = [x * inv for x in T[r]]
    for i in range(len(T)):
        if i != r and T[i][c] != 0:
            f = T[i][c]
            T[i] = [x - f * y for x, y in zip(T[i], T[r])]
    basis[r] = c


def _run(T, basis, cost, allowed):
    """Minimise ``cost`` over the tableau in place; returns False if unbounded."""
    m = len(T)
    ncol = len(T[0]) - 1
    while True:
        # reduced costs
        entering = None
        for j in range(ncol):
            if not allowed[j] or j in basis:
                continue
            rc = cost[j] - sum(cost[basis[i]] * T[i][j] for i in range(m))
            if rc < 0:
                entering = j
                break
        if entering is None:
            return True
        best = None
        for i in range(m):
            a = T[i][entering]
            if a > 0:
                ratio = T[i][-1] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return False
        _pivot(T, basis, best[1], entering)


def linprog(c: Sequence, a_eq: Sequence[Sequence], b_eq: Sequence) -> LPResult:
    nvar = len(c)
    rows = [list(map(Fraction, r)) for r in a_eq]
    rhs = [Fraction(b) for b in b_eq]
    if nvar == 0:
        ok = all(b == 0 for b in rhs)
        return LPResult("optimal", (), Fraction(0)) if ok else LPResult("infeasible")
    for i in range(len(rows)):
        if rhs[i] < 0:
            rows[i] = [-x for x in rows[i]]
            rhs[i] = -rhs[i]
    m = len(rows)
    if m == 0:
        if any(Fraction(x) < 0 for x in c):
            return LPResult("unbounded")
        return LPResult("optimal", tuple(Fraction(0) for _ in c), Fraction(0))
    # phase 1 with one artificial per row
    T = [rows[i] + [Fraction(int(i == k)) for k in range(m)] + [rhs[i]] for i in range(m)]
    basis = [nvar + i for i in range(m)]
    cost1 = [Fraction(0)] * nvar + [Fraction(1)] * m
    _run(T, basis, cost1, [True] * (nvar + m))
    if sum(T[i][-1] for i in range(m) if basis[i] >= nvar) != 0:
        return LPResult("infeasible")
    # drive artificials out of the basis, dropping redundant rows
    i = 0
    while i < len(T):
        if basis[i] >= nvar:
            j = next((j for j in range(nvar) if T[i][j] != 0 and j not in basis), None)
            if j is None:
                del T[i]
                del basis[i]
                continue
            _pivot(T, basis, i, j)
        i += 1
    cost2 = [Fraction(x) for x in c] + [Fraction(0)] * m
    allowed = [True] * nvar + [False] * m
    if not T:
        x = tuple(Fraction(0) for _ in range(nvar))
        if any(cj < 0 for cj in cost2[:nvar]):
            return LPResult("unbounded")
        return LPResult("optimal", x, Fraction(0))
    if not _run(T, basis, cost2, allowed):
        return LPResult("unbounded")
    x = [Fraction(0)] * nvar
    for r, b in enumerate(basis):
        if b < nvar:
            x[b] = T[r][-1]
    value = sum((ci * xi for ci, xi in zip(cost2, x)), Fraction(0))
    return LPResult("optimal", tuple(x), value)


def feasible(a_eq: Sequence[Sequence], b_eq: Sequence, nvar: int) -> Optional[tuple]:
    """A nonnegative solution of ``a x = b`` or ``None``."""
    res = linprog([0] * nvar, a_eq, b_eq)
    return res.x if res.status == "optimal" else None
