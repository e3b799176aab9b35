"""Exact rational linear algebra: row reduction, kernels and LP feasibility.

Everything runs on :class:`fractions.Fraction`; matrices are lists of rows.
"""
from __future__ import annotations

from fractions import Fraction

from .errors import InvariantViolation


def _frac_rows(rows):
    return [[Fraction(v) for v in row] for row in rows]


def rref(rows):
    """Reduced row echelon form. Returns ``(R, pivot_columns)``."""
    R = _frac_rows(rows)
    if not R:
        return R, []
    ncols = len(R[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((k for k in range(r, len(R)) if R[k][c] != 0), None)
        if p is None:
            continue
        R[r], R[p] = R[p], R[r]
        inv = 1 / R[r][c]
        R[r] = [v * inv for v in R[r]]
        for k in range(len(R)):
            if k != r and R[k][c] != 0:
                f = R[k][c]
                R[k] = [u - f * w for u, w in zip(R[k], R[r])]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    return R, pivots


def nullspace(rows, ncols):
    """Basis of ``{v : rows @ v = 0}``, one vector per free column."""
    if not rows:
        return [[Fraction(int(k == c)) for k in range(ncols)] for c in range(ncols)]
    R, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -R[r][f]
        basis.append(v)
    return basis


def solve_unique(A, b):
    """The unique ``v`` with ``A v = b``, or None if there is none or infinitely many."""
    ncols = len(A[0])
    R, pivots = rref([list(row) + [rhs] for row, rhs in zip(A, b)])
    if ncols in pivots:
        return None  # inconsistent
    if len(pivots) < ncols:
        return None
    v = [Fraction(0)] * ncols
    for r, c in enumerate(pivots):
        v[c] = R[r][-1]
    return v


def feasible_point(A, b):
    """A vertex ``v >= 0`` with ``A v = b``, or None when the system is infeasible.

    Phase-one simplex on a dense tableau with Bland's smallest-index rule,
    which cannot cycle, so the answer is exact and deterministic.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    if m == 0:
        return [Fraction(0)] * n
    width = n + m
    T = []
    for i, row in enumerate(A):
        sgn = -1 if b[i] < 0 else 1
        T.append(
            [Fraction(sgn * v) for v in row]
            + [Fraction(int(k == i)) for k in range(m)]
            + [Fraction(sgn * b[i])]
        )
    basis = [n + i for i in range(m)]
    # reduced costs of "minimize sum of artificials"; last slot is -objective
    cost = [Fraction(0)] * (width + 1)
    for row in T:
        for k in range(n):
            cost[k] -= row[k]
        cost[-1] -= row[-1]

    while True:
        enter = next((k for k in range(width) if cost[k] < 0), None)
        if enter is None:
            break
        leave = None
        best = None
        for r, row in enumerate(T):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best or (ratio == best and basis[r] < basis[leave]):
                    best, leave = ratio, r
        if leave is None:
            raise InvariantViolation("phase-one objective cannot be unbounded")
        piv = T[leave][enter]
        T[leave] = [v / piv for v in T[leave]]
        for r in range(m):
            if r != leave and T[r][enter] != 0:
                f = T[r][enter]
                T[r] = [u - f * w for u, w in zip(T[r], T[leave])]
        f = cost[enter]
        cost = [u - f * w for u, w in zip(cost, T[leave])]
        basis[leave] = enter

    if cost[-1] != 0:
        return None
    v = [Fraction(0)] * n
    for r, var in enumerate(basis):
        if var < n:
            v[var] = T[r][-1]
    for row, rhs in zip(A, b):
        if sum(Fraction(c) * x for c, x in zip(row, v)) != rhs:
            raise InvariantViolation("simplex returned a point that violates A v = b")
    return v
