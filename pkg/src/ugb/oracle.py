"""Independent desk-scale verification machinery.

Everything here exists to check the fast pipeline from a second angle:
textbook division and Buchberger completion, brute-force rank and hull
computations, the matroid edge property, and dual minor coordinates.
Nothing is performance-tuned; sizes are guarded instead.
"""

import random
from collections import namedtuple
from itertools import combinations

from .errors import (BadSubsetError, DimensionUnsupportedError,
                     NonGenericWeightError, SPairBudgetError, TooLargeError)
from .groebner import (check_weight_generic, convert_basis, initial_staircase,
                       normal_form_table, rgb_from_polynomials,
                       validate_reduced_gb)
from .polynomials import Polynomial
from .ratlp import maximize
from .staircases import grlex_key, staircase_sum, staircase_union

_WEIGHT_RANGE = 10 ** 6


def divide(f, gens, order):
    """Multivariate division: f = sum(q_i g_i) + r with no remainder term
    divisible by any head.  The first dividing generator in list order is
    used at every step, which makes the result deterministic."""
    field = f.field
    heads = [g.leading_exponent(order) for g in gens]
    leads = [g.leading_coeff(order) for g in gens]
    quotients = [Polynomial.zero(field) for _ in gens]
    remainder = {}
    work = f
    while work.terms:
        lead = work.leading_exponent(order)
        c = work.terms[lead]
        for i, h in enumerate(heads):
            if all(a >= b for a, b in zip(lead, h)):
                shift = tuple(a - b for a, b in zip(lead, h))
                factor = field.div(c, leads[i])
                quotients[i] = quotients[i].add(
                    Polynomial.monomial(shift, factor, field))
                work = work.sub(gens[i].shift_mul(shift, factor))
                break
        else:
            remainder[lead] = c
            work = Polynomial(
                {e: v for e, v in work.terms.items() if e != lead}, field)
    return Polynomial(remainder, field), quotients


def buchberger(gens, order, spair_budget=10000):
    """Classical Buchberger completion with full reduction, then
    inter-reduction to the unique reduced basis.

    Only the coprime-heads criterion is applied.  The budget bounds the
    number of S-pairs actually reduced."""
    basis = [g.monic(order) for g in gens if not g.is_zero()]
    if not basis:
        raise ValueError("no nonzero generators")
    pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
    processed = 0
    while pairs:
        i, j = pairs.pop(0)
        hi = basis[i].leading_exponent(order)
        hj = basis[j].leading_exponent(order)
        if all(a == 0 or b == 0 for a, b in zip(hi, hj)):
            continue
        processed += 1
        if processed > spair_budget:
            raise SPairBudgetError("S-pair budget %d exceeded" % spair_budget)
        lcm = tuple(max(a, b) for a, b in zip(hi, hj))
        field = basis[i].field
        s = basis[i].shift_mul(
            tuple(a - b for a, b in zip(lcm, hi)), field.one)
        s = s.sub(basis[j].shift_mul(
            tuple(a - b for a, b in zip(lcm, hj)), field.one))
        r, _ = divide(s, basis, order)
        if not r.is_zero():
            k = len(basis)
            basis.append(r.monic(order))
            pairs.extend((m, k) for m in range(k))
    # minimal heads: ascending scan keeps only heads no kept head divides
    basis.sort(key=lambda g: order.key(g.leading_exponent(order)))
    minimal = []
    for g in basis:
        h = g.leading_exponent(order)
        if any(all(a >= b for a, b in
                   zip(h, m.leading_exponent(order))) for m in minimal):
            continue
        minimal.append(g)
    reduced = []
    for g in minimal:
        others = [m for m in minimal if m is not g]
        if others:
            g = divide(g, others, order)[0]
        reduced.append(g.monic(order))
    return rgb_from_polynomials(reduced, order)


def _rank(columns, field):
    """Rank of a list of equal-length column vectors by plain elimination."""
    cols = [list(c) for c in columns]
    rank = 0
    height = len(cols[0]) if cols else 0
    used = [False] * height
    for col in cols:
        pivot = next((i for i in range(height)
                      if not used[i] and col[i] != field.zero), None)
        if pivot is None:
            continue
        used[pivot] = True
        rank += 1
        inv = field.inv(col[pivot])
        scaled = [field.mul(inv, c) for c in col]
        for other in cols:
            f = other[pivot]
            if f != field.zero and other is not col:
                for i in range(height):
                    other[i] = field.sub(other[i],
                                         field.mul(f, scaled[i]))
        for i in range(height):
            col[i] = field.zero
        col[pivot] = field.one
    return rank


def is_basic(table, subset):
    """True iff the table columns of the given n-subset are independent."""
    cols = [tuple(u) for u in subset]
    if len(cols) != table.n or len(set(cols)) != len(cols):
        raise BadSubsetError("need %d distinct columns" % table.n)
    missing = [u for u in cols if u not in table.columns]
    if missing:
        raise BadSubsetError("not table columns: %s" % missing)
    return _rank([table.columns[u] for u in cols], table.field) == table.n


def random_generic_weight(rng, n, d):
    """A strictly positive integer weight, rejection-sampled until it is
    generic for the difference directions of the support set."""
    while True:
        w = tuple(rng.randint(1, _WEIGHT_RANGE) for _ in range(d))
        try:
            check_weight_generic(w, n, d)
        except NonGenericWeightError:
            continue
        return w


def brute_initial_staircases(table, samples, seed=0):
    """Staircases discovered by random generic positive weights.

    The greedy selection depends on the weight only through the induced
    ordering of the eligible columns, so results are memoized per ordering.
    """
    rng = random.Random(seed)
    n, d = table.n, table.d
    support = staircase_union(n, d)
    seen = {}
    found = set()
    for _ in range(samples):
        w = random_generic_weight(rng, n, d)
        perm = tuple(sorted(
            support, key=lambda v: (sum(a * b for a, b in zip(w, v)), v)))
        if perm not in seen:
            seen[perm] = initial_staircase(table, w)
        found.add(seen[perm])
    return found


def positive_hull_vertices(points):
    """Vertices of conv(points) + the nonnegative orthant.

    A point is a vertex exactly when some strictly positive weight is
    strictly minimized there; this is decided by a small exact feasibility
    program per point."""
    pts = sorted({tuple(int(c) for c in p) for p in points})
    if not pts:
        return set()
    d = len(pts[0])
    if d > 3:
        raise DimensionUnsupportedError(
            "exact positive hull implemented for d <= 3 only")
    vertices = set()
    for p in pts:
        # variables (w_1..w_d, t): maximize t
        lhs, rhs = [], []
        for i in range(d):
            row = [0] * (d + 1)
            row[i] = -1
            row[d] = 1
            lhs.append(row)
            rhs.append(0)
        for q in pts:
            if q == p:
                continue
            row = [-(qc - pc) for qc, pc in zip(q, p)] + [1]
            lhs.append(row)
            rhs.append(0)
        res = maximize([0] * d + [1], lhs, rhs,
                       lhs_eq=[[1] * d + [0]], rhs_eq=[d])
        if res.status == "optimal" and res.value > 0:
            vertices.add(p)
    return vertices


def _incidence(base, ground_index):
    vec = [0] * len(ground_index)
    for u in base:
        vec[ground_index[u]] = 1
    return tuple(vec)


def _is_polytope_edge(a, b, others):
    """Exact test: is the segment [a, b] an edge of the polytope with the
    given other vertices?  Looks for a bounded functional maximized on the
    pair with positive margin."""
    m = len(a)
    # variables (f_1..f_m, t): maximize t
    lhs, rhs = [], []
    for point in others:
        for top in (a, b):
            lhs.append([pc - tc for tc, pc in zip(top, point)] + [1])
            rhs.append(0)
    for i in range(m):
        row = [0] * (m + 1)
        row[i] = 1
        lhs.append(list(row))
        rhs.append(1)
        row[i] = -1
        lhs.append(list(row))
        rhs.append(1)
    eq = [[x - y for x, y in zip(a, b)] + [0]]
    res = maximize([0] * m + [1], lhs, rhs, lhs_eq=eq, rhs_eq=[0])
    return res.status == "optimal" and res.value > 0


def matroid_edge_check(table, max_ground=8):
    """Check that every edge of the basis-incidence polytope is a single
    exchange, i.e. has difference e_u - e_v.

    Pairs differing in one exchange already have that form, so only pairs
    with larger symmetric difference need certificates of non-edgeness:
    usually a coinciding midpoint of two other bases, with an exact
    functional search as fallback."""
    n, d = table.n, table.d
    ground = sorted(staircase_union(n, d), key=grlex_key)
    if len(ground) > max_ground:
        raise TooLargeError("ground set size %d exceeds %d"
                            % (len(ground), max_ground))
    ground_index = {u: i for i, u in enumerate(ground)}
    bases = [frozenset(s) for s in combinations(ground, n)
             if is_basic(table, s)]
    basic_set = set(bases)
    if len(bases) <= 1:
        return True
    incidence = {base: _incidence(base, ground_index) for base in bases}
    for a, b in combinations(bases, 2):
        if len(a ^ b) <= 2:
            continue
        certified = False
        for u in a - b:
            for v in b - a:
                first = (a - {u}) | {v}
                second = (b - {v}) | {u}
                if first in basic_set and second in basic_set:
                    certified = True
                    break
            if certified:
                break
        if certified:
            continue
        others = [incidence[c] for c in bases if c not in (a, b)]
        if _is_polytope_edge(incidence[a], incidence[b], others):
            return False
    return True


def plucker_dual(table):
    """All n x n column minors of the table, keyed by sorted n-subsets of
    the support columns."""
    n = table.n
    cols = sorted(table.col_exps, key=grlex_key)
    total = 1
    for i in range(n):
        total = total * (len(cols) - i) // (i + 1)
    if total > 10 ** 5:
        raise TooLargeError("%d minors exceed the guard" % total)
    field = table.field
    result = {}
    for subset in combinations(cols, n):
        result[subset] = _det([table.columns[u] for u in subset], field)
    return result


def _det(columns, field):
    mat = [list(c) for c in columns]  # column-major; determinant unaffected
    n = len(mat)
    det = field.one
    for i in range(n):
        pivot = next((k for k in range(i, n) if mat[k][i] != field.zero),
                     None)
        if pivot is None:
            return field.zero
        if pivot != i:
            mat[i], mat[pivot] = mat[pivot], mat[i]
            det = field.neg(det)
        det = field.mul(det, mat[i][i])
        inv = field.inv(mat[i][i])
        for k in range(i + 1, n):
            if mat[k][i] != field.zero:
                f = field.mul(mat[k][i], inv)
                mat[k] = [field.sub(a, field.mul(f, b))
                          for a, b in zip(mat[k], mat[i])]
    return det


def support_relation_rank(table):
    """Rank of the coefficient matrix of {x^u - residue(u) : u outside the
    staircase} written over the monomials of the support set."""
    field = table.field
    stair = set(table.row_exps)
    index = {u: i for i, u in enumerate(table.col_exps)}
    rows = []
    for u in table.col_exps:
        if u in stair:
            continue
        vec = [field.zero] * len(index)
        vec[index[u]] = field.one
        col = table.columns[u]
        for v, c in zip(table.row_exps, col):
            if c != field.zero:
                vec[index[v]] = field.sub(vec[index[v]], c)
        rows.append(vec)
    return _rank(rows, field)


CheckReport = namedtuple("CheckReport", ["name", "passed", "detail"])


def verify_result(result):
    """Cross-check a pipeline result with the independent machinery here.

    Returns a list of CheckReport, one per check, each carrying the first
    counterexample found (empty detail when passing)."""
    reports = []
    bases = result.reduced_bases
    staircases = result.initial_staircases

    detail = ""
    for stair, basis in sorted(bases.items(),
                               key=lambda kv: kv[0].elements):
        violation = validate_reduced_gb(basis, len(stair))
        if violation is not None:
            detail = "basis for %s: %s" % (stair, violation)
            break
    reports.append(CheckReport("basis-shape", detail == "", detail))

    sums = {staircase_sum(s) for s in staircases}
    ok = (sums == set(result.state_vertices)
          and len(staircases) == len(sums))
    reports.append(CheckReport(
        "staircase-sums", ok,
        "" if ok else "vertex set mismatch: %s vs %s"
        % (sorted(sums), sorted(result.state_vertices))))

    presentation = bases[min(staircases, key=lambda s: s.elements)]
    d = presentation.d
    if d <= 3:
        hull = positive_hull_vertices(result.state_vertices)
        ok = hull == set(result.state_vertices)
        reports.append(CheckReport(
            "hull-vertices", ok,
            "" if ok else "non-vertex sums: %s"
            % sorted(set(result.state_vertices) - hull)))

    detail = ""
    for w, chosen in sorted(result.witness_assignment.items()):
        target = sum(a * b for a, b in zip(w, staircase_sum(chosen)))
        for stair in staircases:
            if stair == chosen:
                continue
            value = sum(a * b for a, b in zip(w, staircase_sum(stair)))
            if value <= target:
                detail = ("witness %s prefers %s over assigned %s"
                          % (w, stair, chosen))
                break
        if detail:
            break
    reports.append(CheckReport("witness-optimality", detail == "", detail))

    union = set()
    for basis in bases.values():
        union.update(basis.polynomials())
    ok = union == set(result.universal_basis)
    reports.append(CheckReport(
        "universal-union", ok,
        "" if ok else "universal basis is not the union of the bases"))

    missing = [s for s in staircases
               if s not in set(result.witness_assignment.values())]
    reports.append(CheckReport(
        "staircases-witnessed", not missing,
        "" if not missing else "unwitnessed: %s" % missing))

    table = normal_form_table(presentation)
    gens = presentation.polynomials()
    detail = ""
    for u in table.col_exps:
        combo = Polynomial(
            {v: c for v, c in zip(table.row_exps, table.columns[u])},
            table.field)
        monomial = Polynomial.monomial(u, field=table.field)
        remainder, _ = divide(monomial, gens, presentation.order)
        if remainder != combo:
            detail = "column %s disagrees with division" % (u,)
            break
    reports.append(CheckReport("table-columns", detail == "", detail))

    detail = ""
    for w, chosen in sorted(result.witness_assignment.items()):
        if initial_staircase(table, w) != chosen:
            detail = "witness %s does not re-select %s" % (w, chosen)
            break
        converted = convert_basis(table, w)
        if converted.basis != bases[chosen]:
            detail = "witness %s reproduces a different basis" % (w,)
            break
    reports.append(CheckReport("witness-conversion", detail == "", detail))

    return reports
