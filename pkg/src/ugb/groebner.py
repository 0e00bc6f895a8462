"""Reduced Groebner bases, the coefficient table of a quotient basis, and
weight-driven conversion between bases.

The central objects are the table whose column u holds the coordinates of
the residue of x^u in the chosen monomial basis, and the greedy conversion
that re-selects that basis to be minimal for a given positive weight.
"""

from collections import namedtuple
from fractions import Fraction

from .errors import (InvalidBasisError, MissingPredecessorError,
                     NonGenericWeightError, NotZeroDimensionalError,
                     RankDeficientError)
from .fields import QQ
from .orders import weight_order
from .polynomials import Polynomial
from .staircases import (Staircase, add_unit, grlex_key, min_gaps,
                         staircase_union, sub_unit, table_support)


class Violation:
    """Structured report of the first reduced-basis shape violation found."""

    __slots__ = ("kind", "message")

    def __init__(self, kind, message):
        self.kind = kind
        self.message = message

    def __str__(self):
        return "%s: %s" % (self.kind, self.message)

    def __repr__(self):
        return "Violation(%r, %r)" % (self.kind, self.message)


class ReducedGroebnerBasis:
    """A staircase together with one tail polynomial per minimal gap.

    Each element of the basis is x^u - tail(u) with u a minimal gap of the
    staircase and tail(u) supported on the staircase.  The defining order is
    carried along but deliberately excluded from equality: two conversions
    landing on the same staircase with the same tails present the same basis.
    """

    __slots__ = ("staircase", "tails", "order", "field")

    def __init__(self, staircase, tails, order, field=QQ):
        if not isinstance(staircase, Staircase):
            staircase = Staircase(staircase)
        self.staircase = staircase
        self.tails = {tuple(u): t for u, t in dict(tails).items()}
        self.order = order
        self.field = field

    @property
    def d(self):
        return self.staircase.d

    @property
    def n(self):
        return len(self.staircase)

    def heads(self):
        return sorted(self.tails, key=grlex_key)

    def element(self, head):
        """The basis element x^head - tail as a single polynomial."""
        f = self.field
        terms = {e: f.neg(c) for e, c in self.tails[tuple(head)].terms.items()}
        terms[tuple(head)] = f.add(terms.get(tuple(head), f.zero), f.one)
        return Polynomial(terms, f)

    def polynomials(self):
        return [self.element(u) for u in self.heads()]

    def __eq__(self, other):
        return (isinstance(other, ReducedGroebnerBasis)
                and other.staircase == self.staircase
                and other.field == self.field
                and other.tails == self.tails)

    def __hash__(self):
        return hash((self.staircase, self.field,
                     frozenset(self.tails.items())))

    def __repr__(self):
        return ("ReducedGroebnerBasis(n=%d, d=%d, heads=%s)"
                % (self.n, self.d, self.heads()))


def validate_reduced_gb(basis, n=None):
    """Return None if the basis has the required shape, else a Violation.

    Checks, in order: expected length, head set equal to the staircase's
    minimal gaps, tail fields, tail support inside the staircase, and every
    tail monomial below its head under the carried order.
    """
    stair = basis.staircase
    if n is not None and len(stair) != n:
        return Violation("WrongLength",
                         "staircase has %d elements, expected %d"
                         % (len(stair), n))
    expected = set(min_gaps(stair))
    got = set(basis.tails)
    if got != expected:
        return Violation("HeadSetMismatch",
                         "heads %s do not match minimal gaps %s"
                         % (sorted(got, key=grlex_key),
                            sorted(expected, key=grlex_key)))
    for head in basis.heads():
        tail = basis.tails[head]
        if tail.field != basis.field:
            return Violation("FieldMismatch",
                             "tail of %s is over a different field"
                             % (head,))
        for v in tail.terms:
            if v not in stair:
                return Violation(
                    "TailOutsideStaircase",
                    "tail of %s contains %s outside the staircase"
                    % (head, v))
            if basis.order.compare(v, head) >= 0:
                return Violation(
                    "HeadNotInitial",
                    "tail monomial %s is not below head %s under the order"
                    % (v, head))
    return None


def rgb_from_polynomials(polys, order, field=None):
    """Interpret a list of polynomials as a reduced Groebner basis.

    Heads are the leading monomials under the given order; each polynomial
    is made monic.  The staircase is recovered as the complement of the
    monomial ideal of the heads, which must be finite.
    """
    polys = list(polys)
    if not polys:
        raise InvalidBasisError(Violation("Empty", "no polynomials given"))
    if field is None:
        field = polys[0].field
    heads = {}
    for p in polys:
        if p.is_zero():
            raise InvalidBasisError(Violation("Zero", "zero polynomial"))
        if p.field != field:
            raise InvalidBasisError(
                Violation("FieldMismatch", "mixed coefficient fields"))
        p = p.monic(order)
        head = p.leading_exponent(order)
        if head in heads:
            raise InvalidBasisError(
                Violation("DuplicateHead", "two elements share head %s"
                          % (head,)))
        heads[head] = p
    d = len(next(iter(heads)))
    if any(len(h) != d for h in heads):
        raise InvalidBasisError(
            Violation("MixedDimensions", "inconsistent variable counts"))
    # finite quotient requires a pure power of every variable among the heads
    box = []
    for i in range(d):
        powers = [h[i] for h in heads
                  if all(h[j] == 0 for j in range(d) if j != i)]
        if not powers:
            raise NotZeroDimensionalError(
                "no pure power of x%d among the heads" % (i + 1))
        box.append(min(powers))
    stair = []
    pending = [()]
    for cap in box:
        pending = [v + (k,) for v in pending for k in range(cap)]
    for v in pending:
        if not any(all(v[i] >= h[i] for i in range(d)) for h in heads):
            stair.append(v)
    tails = {}
    for head, p in heads.items():
        terms = {e: field.neg(c) for e, c in p.terms.items() if e != head}
        tails[head] = Polynomial(terms, field)
    basis = ReducedGroebnerBasis(Staircase(stair), tails, order, field)
    violation = validate_reduced_gb(basis)
    if violation is not None:
        raise InvalidBasisError(violation)
    return basis


class CoeffTable:
    """Immutable n x |U| matrix of basis coordinates.

    Row i is labeled by the i-th basis staircase element, column u by a
    support vector u; the column holds the coordinates of the residue of
    x^u in that basis.  Row and column sequences are part of the value.
    """

    __slots__ = ("row_exps", "col_exps", "columns", "field")

    def __init__(self, row_exps, col_exps, columns, field):
        self.row_exps = tuple(tuple(v) for v in row_exps)
        self.col_exps = tuple(tuple(u) for u in col_exps)
        self.columns = {tuple(u): tuple(c) for u, c in columns.items()}
        self.field = field

    @property
    def n(self):
        return len(self.row_exps)

    @property
    def d(self):
        return len(self.row_exps[0])

    def column(self, u):
        return self.columns[tuple(u)]

    def entry(self, v, u):
        return self.columns[tuple(u)][self.row_exps.index(tuple(v))]

    def staircase(self):
        return Staircase(self.row_exps)

    def __eq__(self, other):
        return (isinstance(other, CoeffTable)
                and other.row_exps == self.row_exps
                and other.col_exps == self.col_exps
                and other.field == self.field
                and other.columns == self.columns)

    def __hash__(self):
        return hash((self.row_exps, self.col_exps, self.field))

    def __repr__(self):
        return "CoeffTable(n=%d, columns=%d)" % (self.n, len(self.col_exps))


def normal_form_table(basis):
    """Build the coefficient table of the basis' staircase over the full
    support set, processing columns in increasing defining order.

    A staircase column is a unit vector and a minimal-gap column is read
    off the corresponding tail.  Any other column u has some u - e_i that
    is a support vector outside the staircase and already processed; the
    column is then assembled from that predecessor's expansion, shifting
    each of its staircase terms by e_i.
    """
    violation = validate_reduced_gb(basis)
    if violation is not None:
        raise InvalidBasisError(violation)
    field = basis.field
    order = basis.order
    n, d = basis.n, basis.d
    stair_set = set(basis.staircase)
    row_exps = sorted(stair_set, key=order.key)
    row_index = {v: i for i, v in enumerate(row_exps)}
    col_exps = sorted(table_support(n, d), key=order.key)
    zero, columns = field.zero, {}
    for u in col_exps:
        if u in stair_set:
            col = [zero] * n
            col[row_index[u]] = field.one
        elif u in basis.tails:
            tail = basis.tails[u]
            col = [tail.coeff(v) for v in row_exps]
        else:
            for i in range(d):
                if u[i] > 0 and sub_unit(u, i) not in stair_set:
                    s = sub_unit(u, i)
                    break
            else:
                raise MissingPredecessorError(
                    "no usable predecessor for column %s" % (u,))
            source = columns.get(s)
            if source is None:
                raise MissingPredecessorError(
                    "predecessor %s of %s not yet available" % (s, u))
            col = [zero] * n
            for j, a in enumerate(source):
                if a == zero:
                    continue
                shifted = columns.get(add_unit(row_exps[j], i))
                if shifted is None:
                    raise MissingPredecessorError(
                        "shifted column for %s missing" % (u,))
                for k in range(n):
                    if shifted[k] != zero:
                        col[k] = field.add(col[k], field.mul(a, shifted[k]))
        columns[u] = tuple(col)
    return CoeffTable(row_exps, col_exps, columns, field)


def weight_sort_key(weight, tiebreak):
    """Sorting key ordering exponent vectors by weight value, then by the
    tiebreak permutation's lexicographic comparison."""
    w = tuple(Fraction(c) for c in weight)

    def key(u):
        return (sum(a * b for a, b in zip(w, u)),
                tuple(u[p] for p in tiebreak))

    return key


def check_weight_generic(weight, n, d):
    """Raise unless the weight is strictly positive and separates all
    staircase-union vectors; equal values would mean the weight lies on a
    hyperplane of some difference direction."""
    w = tuple(Fraction(c) for c in weight)
    if len(w) != d:
        raise NonGenericWeightError("weight has length %d, expected %d"
                                    % (len(w), d))
    if any(c <= 0 for c in w):
        raise NonGenericWeightError("weight must be strictly positive: %s"
                                    % (weight,))
    values = sorted(sum(a * b for a, b in zip(w, v))
                    for v in staircase_union(n, d))
    for x, y in zip(values, values[1:]):
        if x == y:
            raise NonGenericWeightError(
                "weight %s gives equal value %s to two support vectors"
                % (weight, x))
    return w


ConversionResult = namedtuple("ConversionResult",
                              ["staircase", "basis", "table", "ops"])


def _normalize_tiebreak(tiebreak, d):
    if tiebreak is None:
        return tuple(range(d))
    tb = tuple(tiebreak)
    if sorted(tb) != list(range(d)):
        raise ValueError("tiebreak must be a permutation of 0..%d" % (d - 1))
    return tb


def convert_basis(table, weight, tiebreak=None):
    """Re-select the table's basis to be minimal for the given weight.

    Columns are reordered compatibly with the weight; the new basis is
    picked greedily as the first staircase-union column with a nonzero
    entry at or below the current row, taking the lowest such entry as
    pivot; row operations keep picked columns as unit vectors.  Returns
    the new staircase, its reduced basis, the updated table with rows
    relabeled in pick order, and the scalar operation count.
    """
    field = table.field
    n, d = table.n, table.d
    tb = _normalize_tiebreak(tiebreak, d)
    check_weight_generic(weight, n, d)
    key = weight_sort_key(weight, tb)
    col_exps = sorted(table.col_exps, key=key)
    data = [list(table.columns[u]) for u in col_exps]
    eligible = set(staircase_union(n, d))
    ops = 0
    picked = []
    pointer = 0
    for i in range(n):
        pivot_col = None
        while pointer < len(col_exps):
            u = col_exps[pointer]
            pointer += 1
            if u not in eligible:
                continue
            col = data[pointer - 1]
            pivot_row = None
            for k in range(n - 1, i - 1, -1):
                if col[k] != field.zero:
                    pivot_row = k
                    break
            if pivot_row is not None:
                pivot_col = pointer - 1
                break
        if pivot_col is None:
            raise RankDeficientError(
                "table rank %d is below the basis size %d" % (i, n))
        picked.append(col_exps[pivot_col])
        pivot = data[pivot_col][pivot_row]
        inv = field.inv(pivot)
        ops += 1
        for col in data:
            if pivot_row != i:
                col[i], col[pivot_row] = col[pivot_row], col[i]
            if col[i] != field.zero:
                col[i] = field.mul(col[i], inv)
                ops += 1
        factors = data[pivot_col]
        rows = [r for r in range(n) if r != i and factors[r] != field.zero]
        if rows:
            snapshot = [factors[r] for r in rows]
            for col in data:
                lead = col[i]
                if lead == field.zero:
                    continue
                for r, f in zip(rows, snapshot):
                    col[r] = field.sub(col[r], field.mul(f, lead))
                    ops += 2
    stair = Staircase(picked)
    columns = {u: tuple(col) for u, col in zip(col_exps, data)}
    result_table = CoeffTable(picked, col_exps, columns, field)
    tails = {}
    for head in min_gaps(stair):
        col = columns[head]
        terms = {picked[i]: col[i] for i in range(n)}
        tails[head] = Polynomial(terms, field)
    basis = ReducedGroebnerBasis(
        stair, tails, weight_order(weight, tiebreak=tb), field)
    return ConversionResult(stair, basis, result_table, ops)


def initial_staircase(table, weight, tiebreak=None):
    """The staircase the conversion would pick, computed on the eligible
    columns only.  Row operations restricted to those columns see the same
    pivot entries, so the picks agree with the full conversion."""
    field = table.field
    n, d = table.n, table.d
    tb = _normalize_tiebreak(tiebreak, d)
    check_weight_generic(weight, n, d)
    key = weight_sort_key(weight, tb)
    col_exps = sorted(staircase_union(n, d), key=key)
    data = [list(table.columns[u]) for u in col_exps]
    picked = []
    pointer = 0
    for i in range(n):
        pivot_col = None
        while pointer < len(col_exps):
            col = data[pointer]
            pointer += 1
            pivot_row = None
            for k in range(n - 1, i - 1, -1):
                if col[k] != field.zero:
                    pivot_row = k
                    break
            if pivot_row is not None:
                pivot_col = pointer - 1
                break
        if pivot_col is None:
            raise RankDeficientError(
                "table rank %d is below the basis size %d" % (i, n))
        picked.append(col_exps[pivot_col])
        pivot = data[pivot_col][pivot_row]
        inv = field.inv(pivot)
        for j in range(pivot_col, len(col_exps)):
            col = data[j]
            if pivot_row != i:
                col[i], col[pivot_row] = col[pivot_row], col[i]
            if col[i] != field.zero:
                col[i] = field.mul(col[i], inv)
        factors = data[pivot_col]
        rows = [r for r in range(n) if r != i and factors[r] != field.zero]
        if rows:
            snapshot = [factors[r] for r in rows]
            for j in range(pivot_col, len(col_exps)):
                col = data[j]
                lead = col[i]
                if lead == field.zero:
                    continue
                for r, f in zip(rows, snapshot):
                    col[r] = field.sub(col[r], field.mul(f, lead))
    return Staircase(picked)
