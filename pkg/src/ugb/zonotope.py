"""Primitive difference directions, their central hyperplane arrangement,
and exact chamber enumeration with integer witnesses.

Chambers are computed on the standard simplex cross-section, one orthant at
a time: every direction set here contains all unit vectors, so no chamber
straddles an orthant boundary and the simplex pieces are bounded cells.
"""

from fractions import Fraction
from math import gcd

from .errors import NonGenericWeightError, TooLargeError
from .fields import gcd_vector
from .staircases import grlex_key, staircase_union


def _negate(v):
    return tuple(-c for c in v)


def _dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def _canonical_rep(v):
    """Flip sign so the first nonzero entry is positive."""
    for c in v:
        if c > 0:
            return tuple(v)
        if c < 0:
            return _negate(v)
    raise ValueError("zero vector has no sign representative")


class DirectionSet:
    """One representative per antipodal pair of primitive directions."""

    __slots__ = ("generators", "n", "d")

    def __init__(self, generators, n, d):
        self.generators = tuple(tuple(v) for v in generators)
        self.n = n
        self.d = d

    def full(self):
        """Both antipodes of every generator."""
        return self.generators + tuple(_negate(v) for v in self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __contains__(self, v):
        return tuple(v) in self.generators

    def __eq__(self, other):
        return (isinstance(other, DirectionSet)
                and other.generators == self.generators)

    def __hash__(self):
        return hash(self.generators)

    def __repr__(self):
        return "DirectionSet(n=%d, d=%d, size=%d)" % (self.n, self.d,
                                                      len(self.generators))


def primitive_differences(n, d):
    """Primitive pairwise differences of the n-staircase union.

    A difference is primitive when it is not an integer multiple k >= 2 of
    another difference.  For n = 1 the difference set is trivial and the
    unit vectors are used instead.
    """
    units = [tuple(1 if j == i else 0 for j in range(d)) for i in range(d)]
    if n == 1:
        return DirectionSet(units, n, d)
    support = staircase_union(n, d)
    diffs = {tuple(a - b for a, b in zip(u, v))
             for u in support for v in support if u != v}
    reps = set()
    for v in diffs:
        g = 0
        for c in v:
            g = gcd(g, abs(c))
        if any(g % k == 0 and tuple(c // k for c in v) in diffs
               for k in range(2, g + 1)):
            continue
        reps.add(_canonical_rep(v))
    return DirectionSet(sorted(reps, key=grlex_key), n, d)


def zonotope_vertex(w, dirset):
    """The vertex of the segment sum minimized by w: the sum of all full
    antipodal directions with negative w-value."""
    total = [0] * dirset.d
    for v in dirset.full():
        s = _dot(w, v)
        if s == 0:
            raise NonGenericWeightError(
                "weight %s is orthogonal to direction %s" % (tuple(w), v))
        if s < 0:
            for i in range(dirset.d):
                total[i] += v[i]
    return tuple(total)


class Chamber:
    """A full-dimensional cell of the direction arrangement."""

    __slots__ = ("witness", "vertex", "signs")

    def __init__(self, witness, vertex, signs):
        self.witness = tuple(witness)
        self.vertex = tuple(vertex)
        self.signs = signs

    def __eq__(self, other):
        return (isinstance(other, Chamber)
                and other.witness == self.witness
                and other.vertex == self.vertex
                and other.signs == self.signs)

    def __hash__(self):
        return hash((self.witness, self.vertex, self.signs))

    def __repr__(self):
        return "Chamber(witness=%s, vertex=%s, signs=%s)" % (
            self.witness, self.vertex, self.signs)


def _split_cells(hyperplanes, d, max_cells):
    """Cut the standard simplex by the given hyperplanes.

    Cells are kept as exact rational point sets containing every vertex of
    the cell's closure, so the coordinate average is an interior point.
    """
    one = Fraction(1)
    zero = Fraction(0)
    simplex = frozenset(tuple(one if j == i else zero for j in range(d))
                        for i in range(d))
    cells = [simplex]
    for v in hyperplanes:
        updated = []
        for pts in cells:
            pos, neg, on = [], [], []
            for p in pts:
                s = _dot(v, p)
                if s > 0:
                    pos.append(p)
                elif s < 0:
                    neg.append(p)
                else:
                    on.append(p)
            if not pos or not neg:
                updated.append(pts)
                continue
            cross = set()
            for a in pos:
                sa = _dot(v, a)
                for b in neg:
                    sb = _dot(v, b)
                    cross.add(tuple((sa * y - sb * x) / (sa - sb)
                                    for x, y in zip(a, b)))
            shared = frozenset(on) | cross
            updated.append(frozenset(pos) | shared)
            updated.append(frozenset(neg) | shared)
        cells = updated
        if len(cells) > max_cells:
            raise TooLargeError("more than %d chambers" % max_cells)
    return cells


def _witness_of(pts, d):
    avg = [Fraction(0)] * d
    for p in pts:
        for i in range(d):
            avg[i] += p[i]
    scale = 1
    for c in avg:
        scale = scale * c.denominator // gcd(scale, c.denominator)
    w = [int(c * scale) for c in avg]
    g = gcd_vector(w)
    return tuple(c // g for c in w)


def _chamber_for(witness, dirset):
    signs = []
    for v in dirset.generators:
        s = _dot(witness, v)
        if s == 0:
            raise NonGenericWeightError(
                "witness %s lies on direction %s" % (witness, v))
        signs.append("+" if s > 0 else "-")
    return Chamber(witness, zonotope_vertex(witness, dirset), "".join(signs))


def positive_chambers(n, d, max_chambers=10 ** 6):
    """One chamber per arrangement cell meeting the open positive orthant.

    Witnesses are strictly positive, scaled to smallest integer vectors.
    """
    dirset = primitive_differences(n, d)
    cells = _split_cells(dirset.generators, d, max_chambers)
    chambers = [_chamber_for(_witness_of(pts, d), dirset) for pts in cells]
    chambers.sort(key=lambda c: c.witness)
    return chambers


def all_chambers(n, d, max_chambers=10 ** 6):
    """Every chamber of the central arrangement, via one positive-style
    enumeration per orthant and antipodal completion."""
    dirset = primitive_differences(n, d)
    chambers = []
    for mask in range(2 ** (d - 1)):
        eps = [1] + [1 - 2 * ((mask >> i) & 1) for i in range(d - 1)]
        flipped = [tuple(e * c for e, c in zip(eps, v))
                   for v in dirset.generators]
        cells = _split_cells(flipped, d, max_chambers)
        for pts in cells:
            u = _witness_of(pts, d)
            w = tuple(e * c for e, c in zip(eps, u))
            chambers.append(_chamber_for(w, dirset))
            chambers.append(_chamber_for(_negate(w), dirset))
        if len(chambers) > max_chambers:
            raise TooLargeError("more than %d chambers" % max_chambers)
    chambers.sort(key=lambda c: c.witness)
    return chambers
