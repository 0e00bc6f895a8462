"""Constructors producing reduced Groebner bases for three ideal classes:
monomial ideals, vanishing ideals of finite point sets, and lattice ideals
of full-rank integer lattices, plus the lattice test-set application.

No Buchberger pass happens here: each class admits a direct staircase
selection, greedy over the support set in increasing order.
"""

from fractions import Fraction

from .errors import (ClassDeficitError, DuplicatePointsError,
                     NotBinomialError, RankCollapseError, SingularBasisError)
from .fields import QQ, RationalField
from .groebner import ReducedGroebnerBasis
from .orders import deglex_order
from .polynomials import Polynomial
from .staircases import Staircase, grlex_key, min_gaps, staircase_union


def monomial_ideal(staircase, field=QQ):
    """The monomial ideal whose staircase is the given one: all tails are
    zero, so the basis is valid under every order and is tagged with a
    default graded-lex order."""
    if not isinstance(staircase, Staircase):
        staircase = Staircase(staircase)
    tails = {u: Polynomial.zero(field) for u in min_gaps(staircase)}
    return ReducedGroebnerBasis(staircase, tails, deglex_order(staircase.d),
                                field)


def _coerce(field, value):
    if isinstance(value, int):
        return field.from_int(value)
    if isinstance(value, Fraction) and not isinstance(field, RationalField):
        den = field.from_int(value.denominator)
        return field.mul(field.from_int(value.numerator), field.inv(den))
    return value


def _eval_column(point, v, field):
    acc = field.one
    for base, k in zip(point, v):
        if k:
            acc = field.mul(acc, field.pow(base, k))
    return acc


def _solve_square(matrix, rhs_list, field):
    """Solve M a = r for each r in rhs_list by elimination on one
    augmented copy; M is destroyed.  Returns one solution vector per rhs."""
    n = len(matrix)
    width = len(rhs_list)
    aug = [list(matrix[i]) + [r[i] for r in rhs_list] for i in range(n)]
    for i in range(n):
        pivot = next((k for k in range(i, n) if aug[k][i] != field.zero),
                     None)
        if pivot is None:
            raise RankCollapseError("singular system in tail solve")
        if pivot != i:
            aug[i], aug[pivot] = aug[pivot], aug[i]
        inv = field.inv(aug[i][i])
        aug[i] = [field.mul(inv, c) for c in aug[i]]
        for k in range(n):
            if k != i and aug[k][i] != field.zero:
                f = aug[k][i]
                aug[k] = [field.sub(a, field.mul(f, b))
                          for a, b in zip(aug[k], aug[i])]
    return [tuple(aug[i][n + j] for i in range(n)) for j in range(width)]


def from_points(points, order, field=QQ):
    """Reduced Groebner basis of the vanishing ideal of distinct points.

    The staircase is picked greedily from the support set in increasing
    order, keeping each monomial whose evaluation column is independent of
    the columns already kept; tails then solve the square evaluation
    system for each minimal gap.
    """
    pts = [tuple(_coerce(field, c) for c in p) for p in points]
    if not pts:
        raise DuplicatePointsError("empty point configuration")
    d = len(pts[0])
    if len(set(pts)) != len(pts):
        raise DuplicatePointsError("points must be pairwise distinct")
    n = len(pts)
    stair = []
    echelon = []  # (pivot row, reduced column) pairs
    for v in sorted(staircase_union(n, d), key=order.key):
        col = [_eval_column(p, v, field) for p in pts]
        for pivot, vec in echelon:
            f = col[pivot]
            if f != field.zero:
                col = [field.sub(a, field.mul(f, b))
                       for a, b in zip(col, vec)]
        lead = next((i for i, c in enumerate(col) if c != field.zero), None)
        if lead is None:
            continue
        inv = field.inv(col[lead])
        echelon.append((lead, [field.mul(inv, c) for c in col]))
        stair.append(v)
        if len(stair) == n:
            break
    if len(stair) < n:
        raise RankCollapseError(
            "evaluation columns span rank %d < %d" % (len(stair), n))
    stair = Staircase(stair)
    heads = min_gaps(stair)
    basis_cols = [[_eval_column(p, v, field) for p in pts] for v in stair]
    matrix = [[basis_cols[j][i] for j in range(n)] for i in range(n)]
    rhs = [[_eval_column(p, u, field) for p in pts] for u in heads]
    solved = _solve_square(matrix, rhs, field)
    tails = {}
    for u, coeffs in zip(heads, solved):
        tails[u] = Polynomial(
            {v: c for v, c in zip(stair, coeffs)}, field)
    return ReducedGroebnerBasis(stair, tails, order, field)


class LatticeBasis:
    """Full-rank integer lattice given by d generator columns."""

    __slots__ = ("columns", "d", "det_abs", "_inverse")

    def __init__(self, columns):
        cols = [tuple(int(c) for c in col) for col in columns]
        d = len(cols)
        if any(len(c) != d for c in cols):
            raise SingularBasisError("lattice basis must be square")
        self.columns = tuple(cols)
        self.d = d
        # rows of B have the generators as columns
        matrix = [[Fraction(cols[j][i]) for j in range(d)] for i in range(d)]
        inverse = [[Fraction(1) if i == j else Fraction(0)
                    for j in range(d)] for i in range(d)]
        det = Fraction(1)
        for i in range(d):
            pivot = next((k for k in range(i, d) if matrix[k][i] != 0), None)
            if pivot is None:
                raise SingularBasisError("lattice basis is singular")
            if pivot != i:
                matrix[i], matrix[pivot] = matrix[pivot], matrix[i]
                inverse[i], inverse[pivot] = inverse[pivot], inverse[i]
                det = -det
            det *= matrix[i][i]
            inv = 1 / matrix[i][i]
            matrix[i] = [inv * c for c in matrix[i]]
            inverse[i] = [inv * c for c in inverse[i]]
            for k in range(d):
                if k != i and matrix[k][i] != 0:
                    f = matrix[k][i]
                    matrix[k] = [a - f * b
                                 for a, b in zip(matrix[k], matrix[i])]
                    inverse[k] = [a - f * b
                                  for a, b in zip(inverse[k], inverse[i])]
        self.det_abs = abs(int(det))
        self._inverse = tuple(tuple(row) for row in inverse)

    def coordinates(self, v):
        """Rational coordinates z with B z = v."""
        return tuple(sum(row[j] * v[j] for j in range(self.d))
                     for row in self._inverse)

    def contains(self, v):
        return all(z.denominator == 1 for z in self.coordinates(v))

    def class_label(self, v):
        """Canonical label of v + L: fractional parts of the coordinates."""
        return tuple(z - (z.numerator // z.denominator)
                     for z in self.coordinates(v))

    def __repr__(self):
        return "LatticeBasis(det_abs=%d, columns=%s)" % (self.det_abs,
                                                         self.columns)


def from_lattice(basis, order, field=QQ):
    """Binomial reduced Groebner basis of the lattice ideal.

    The staircase collects the first representative of each residue class
    met while walking the support set in increasing order; each minimal
    gap's tail is the single monomial of its class representative.
    """
    if not isinstance(basis, LatticeBasis):
        basis = LatticeBasis(basis)
    n, d = basis.det_abs, basis.d
    reps = {}
    stair = []
    for v in sorted(staircase_union(n, d), key=order.key):
        label = basis.class_label(v)
        if label in reps:
            continue
        reps[label] = v
        stair.append(v)
        if len(stair) == n:
            break
    if len(stair) < n:
        raise ClassDeficitError(
            "only %d of %d residue classes met in the support set"
            % (len(stair), n))
    stair = Staircase(stair)
    tails = {}
    for u in min_gaps(stair):
        rep = reps.get(basis.class_label(u))
        if rep is None:
            raise ClassDeficitError(
                "no staircase representative for gap %s" % (u,))
        tails[u] = Polynomial.monomial(rep, field=field)
    return ReducedGroebnerBasis(stair, tails, order, field)


class TestSet:
    """Integer moves read off a binomial universal basis."""

    __slots__ = ("moves",)

    def __init__(self, moves):
        self.moves = tuple(sorted({tuple(int(c) for c in m) for m in moves}))

    def __iter__(self):
        return iter(self.moves)

    def __len__(self):
        return len(self.moves)

    def __eq__(self, other):
        return isinstance(other, TestSet) and other.moves == self.moves

    def __hash__(self):
        return hash(self.moves)

    def __repr__(self):
        return "TestSet(%s)" % (list(self.moves),)


def lattice_test_set(ugb):
    """Exponent differences u - v over all binomials x^u - x^v given."""
    moves = []
    for poly in ugb:
        if len(poly.terms) != 2:
            raise NotBinomialError("not a binomial: %s" % (poly,))
        field = poly.field
        plus = [e for e, c in poly.terms.items() if c == field.one]
        minus = [e for e, c in poly.terms.items()
                 if c == field.neg(field.one)]
        if len(plus) != 1 or len(minus) != 1:
            raise NotBinomialError("non-unit coefficients in %s" % (poly,))
        moves.append(tuple(a - b for a, b in zip(plus[0], minus[0])))
    return TestSet(moves)


def lattice_minimize(test_set, x, w):
    """Augmentation walk to a w-minimal point of the fiber of x.

    Scans moves in sorted order, both signs, and applies the first
    improving one; restarts until no move improves.
    """
    w = tuple(Fraction(c) for c in w)
    if any(c <= 0 for c in w):
        raise ValueError("weight must be strictly positive")
    current = tuple(int(c) for c in x)
    if any(c < 0 for c in current):
        raise ValueError("starting point must be nonnegative")
    improved = True
    while improved:
        improved = False
        for move in test_set:
            for t in (move, tuple(-c for c in move)):
                gain = sum(wc * tc for wc, tc in zip(w, t))
                if gain <= 0:
                    continue
                candidate = tuple(a - b for a, b in zip(current, t))
                if all(c >= 0 for c in candidate):
                    current = candidate
                    improved = True
                    break
            if improved:
                break
    return current
