"""Small dense exact-rational linear programming.

Two-phase primal simplex with Bland's rule, which terminates without any
degeneracy assumptions.  Problem sizes here are tiny (certifying polytope
vertices and separating weights), so no sparsity or revised-form tricks.
"""

from collections import namedtuple
from fractions import Fraction

LpResult = namedtuple("LpResult", ["status", "value", "x"])


def _run_simplex(rows, rhs, cost, basis):
    """Maximize cost.x over rows.x = rhs, x >= 0, given a starting basis
    whose columns are already reduced to the identity.  Mutates in place;
    returns "optimal" or "unbounded"."""
    m = len(rows)
    nv = len(cost)
    is_basic = [False] * nv
    for j in basis:
        is_basic[j] = True
    while True:
        cb = [cost[basis[i]] for i in range(m)]
        entering = None
        for j in range(nv):
            if is_basic[j]:
                continue
            reduced = cost[j] - sum(cb[i] * rows[i][j] for i in range(m))
            if reduced > 0:
                entering = j
                break
        if entering is None:
            return "optimal"
        leaving = None
        best = None
        for i in range(m):
            a = rows[i][entering]
            if a > 0:
                ratio = rhs[i] / a
                if (best is None or ratio < best
                        or (ratio == best and basis[i] < basis[leaving])):
                    best = ratio
                    leaving = i
        if leaving is None:
            return "unbounded"
        piv = rows[leaving][entering]
        rows[leaving] = [a / piv for a in rows[leaving]]
        rhs[leaving] = rhs[leaving] / piv
        for i in range(m):
            if i == leaving:
                continue
            f = rows[i][entering]
            if f:
                src = rows[leaving]
                rows[i] = [a - f * b for a, b in zip(rows[i], src)]
                rhs[i] = rhs[i] - f * rhs[leaving]
        is_basic[basis[leaving]] = False
        is_basic[entering] = True
        basis[leaving] = entering


def maximize(objective, lhs_le, rhs_le, lhs_eq=(), rhs_eq=()):
    """Maximize objective.x over free x with lhs_le.x <= rhs_le and
    lhs_eq.x = rhs_eq.  Returns LpResult(status, value, x) with status one
    of "optimal", "unbounded", "infeasible"."""
    nfree = len(objective)
    ineqs = [(list(r), v) for r, v in zip(lhs_le, rhs_le)]
    for r, v in zip(lhs_eq, rhs_eq):
        ineqs.append((list(r), v))
        ineqs.append(([-c for c in r], -v))
    m = len(ineqs)
    # columns: y (positive part), z (negative part), slacks, artificials
    nreal = 2 * nfree + m
    art_rows = [i for i, (_, v) in enumerate(ineqs) if Fraction(v) < 0]
    nv = nreal + len(art_rows)
    rows = []
    rhs = []
    basis = []
    art_index = {}
    for k, i in enumerate(art_rows):
        art_index[i] = nreal + k
    for i, (coeffs, v) in enumerate(ineqs):
        row = [Fraction(0)] * nv
        sign = -1 if i in art_index else 1
        for j, c in enumerate(coeffs):
            row[j] = Fraction(sign * c)
            row[nfree + j] = Fraction(-sign * c)
        row[2 * nfree + i] = Fraction(sign)
        if i in art_index:
            row[art_index[i]] = Fraction(1)
            basis.append(art_index[i])
        else:
            basis.append(2 * nfree + i)
        rows.append(row)
        rhs.append(Fraction(sign * v))
    if art_rows:
        phase1 = [Fraction(0)] * nv
        for i in art_rows:
            phase1[art_index[i]] = Fraction(-1)
        _run_simplex(rows, rhs, phase1, basis)
        penalty = sum(rhs[i] for i in range(m)
                      if basis[i] >= nreal)
        if penalty != 0:
            return LpResult("infeasible", None, None)
        # pivot leftover zero-value artificials out on any real column
        for i in range(m):
            if basis[i] < nreal:
                continue
            entering = next((j for j in range(nreal) if rows[i][j] != 0),
                            None)
            if entering is None:
                continue
            piv = rows[i][entering]
            rows[i] = [a / piv for a in rows[i]]
            rhs[i] = rhs[i] / piv
            for k in range(m):
                if k != i and rows[k][entering]:
                    f = rows[k][entering]
                    rows[k] = [a - f * b for a, b in zip(rows[k], rows[i])]
                    rhs[k] = rhs[k] - f * rhs[i]
            basis[i] = entering
        for row in rows:
            for k in range(nreal, nv):
                row[k] = Fraction(0)
    cost = [Fraction(0)] * nv
    for j, c in enumerate(objective):
        cost[j] = Fraction(c)
        cost[nfree + j] = Fraction(-c)
    status = _run_simplex(rows, rhs, cost, basis)
    if status != "optimal":
        return LpResult("unbounded", None, None)
    values = [Fraction(0)] * nv
    for i in range(m):
        values[basis[i]] = rhs[i]
    x = tuple(values[j] - values[nfree + j] for j in range(nfree))
    value = sum(c * v for c, v in zip(objective, x))
    return LpResult("optimal", value, x)
