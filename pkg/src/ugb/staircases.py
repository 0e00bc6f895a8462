"""Staircase combinatorics on exponent vectors.

An n-staircase is a downward-closed set of n exponent vectors in N^d.  Every
n-staircase lives inside the union support `staircase_union(n, d)` (vectors v
with prod(v_i + 1) <= n), and the normal-form tables downstream are indexed
by `table_support(n, d)`, the union support plus its unit shifts.

Canonical ordering of vector sets is graded lexicographic; every set-valued
function returns a sorted tuple.
"""

from functools import lru_cache
from itertools import combinations

from .errors import NotAStaircaseError, ParseError, TooLargeError


def grlex_key(v):
    return (sum(v), v)


def format_vector(v):
    return "(" + ",".join(str(x) for x in v) + ")"


def parse_vector(text, d):
    """Parse "(3,0)" or, for d <= 9, the compact digit form "30"."""
    s = text.strip().replace("−", "-")
    if s.startswith("(") and s.endswith(")"):
        parts = s[1:-1].split(",")
        if len(parts) != d:
            raise ParseError("expected %d coordinates in %r" % (d, text))
        try:
            return tuple(int(p) for p in parts)
        except ValueError:
            raise ParseError("bad vector %r" % text) from None
    if d <= 9 and len(s) == d and s.isdigit():
        return tuple(int(c) for c in s)
    raise ParseError("bad vector %r" % text)


def unit_vector(i, d):
    return tuple(1 if j == i else 0 for j in range(d))


def add_unit(v, i):
    return v[:i] + (v[i] + 1,) + v[i + 1:]


def sub_unit(v, i):
    return v[:i] + (v[i] - 1,) + v[i + 1:]


@lru_cache(maxsize=None)
def staircase_union(n, d):
    """All v in N^d with prod(v_i + 1) <= n: the union of all n-staircases."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    out = []

    def grow(prefix, budget):
        if len(prefix) == d:
            out.append(tuple(prefix))
            return
        v = 0
        while (v + 1) <= budget:
            grow(prefix + [v], budget // (v + 1))
            v += 1

    grow([], n)
    return tuple(sorted(out, key=grlex_key))


@lru_cache(maxsize=None)
def table_support(n, d):
    """staircase_union(n, d) together with every unit shift of its elements."""
    base = staircase_union(n, d)
    seen = set(base)
    for v in base:
        for i in range(d):
            seen.add(add_unit(v, i))
    return tuple(sorted(seen, key=grlex_key))


def is_staircase(vectors):
    """True iff the collection is a duplicate-free downward-closed set."""
    elems = list(vectors)
    seen = set(elems)
    if len(seen) != len(elems) or not elems:
        return False
    for v in seen:
        if len(v) != len(elems[0]):
            return False
        for i, x in enumerate(v):
            if x < 0:
                return False
            if x > 0 and sub_unit(v, i) not in seen:
                return False
    return True


class Staircase:
    """A validated n-staircase; elements are kept graded-lex sorted."""

    __slots__ = ("elements", "d")

    def __init__(self, vectors):
        elems = tuple(sorted(set(tuple(v) for v in vectors), key=grlex_key))
        if not is_staircase(elems):
            raise NotAStaircaseError("not a staircase: %r" % (sorted(vectors),))
        self.elements = elems
        self.d = len(elems[0])

    @property
    def n(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, v):
        return v in self.elements

    def __len__(self):
        return len(self.elements)

    def __eq__(self, other):
        return isinstance(other, Staircase) and other.elements == self.elements

    def __hash__(self):
        return hash(self.elements)

    def __repr__(self):
        return "Staircase(%s)" % (" ".join(format_vector(v) for v in self.elements))


def staircase_sum(stair):
    """Coordinatewise sum of the staircase's elements."""
    elems = stair.elements if isinstance(stair, Staircase) else list(stair)
    d = len(next(iter(elems)))
    total = [0] * d
    for v in elems:
        for i in range(d):
            total[i] += v[i]
    return tuple(total)


def min_gaps(stair):
    """Minimal elements of the complement of a staircase.

    A gap u is minimal iff every coordinate is zero or steps back into the
    staircase; all minimal gaps lie in table_support(n, d), so a scan of that
    set is exhaustive.
    """
    if not isinstance(stair, Staircase):
        stair = Staircase(stair)
    inside = set(stair.elements)
    out = []
    for u in table_support(stair.n, stair.d):
        if u in inside:
            continue
        if all(u[i] == 0 or sub_unit(u, i) in inside for i in range(stair.d)):
            out.append(u)
    return tuple(out)


def _gen_stairs(n, d):
    # stream n-staircases as frozensets, built slab by slab along the last
    # axis: slabs are (d-1)-staircases nested by containment
    if d == 1:
        yield frozenset((i,) for i in range(n))
        return

    def rec(limit, remaining):
        if remaining == 0:
            yield ()
            return
        cap = remaining if limit is None else min(remaining, len(limit))
        for m in range(1, cap + 1):
            for slab in _gen_stairs(m, d - 1):
                if limit is not None and not slab <= limit:
                    continue
                for rest in rec(slab, remaining - m):
                    yield (slab,) + rest

    for slabs in rec(None, n):
        yield frozenset(v + (k,) for k, slab in enumerate(slabs) for v in slab)


def enumerate_staircases(n, d, limit=10 ** 6):
    """All n-staircases in N^d, canonically sorted; guarded by `limit`."""
    if n < 1 or d < 1:
        raise ValueError("need n >= 1 and d >= 1")
    raw = []
    for s in _gen_stairs(n, d):
        raw.append(s)
        if len(raw) > limit:
            raise TooLargeError(
                "staircase count for (n=%d, d=%d) exceeds limit %d" % (n, d, limit))
    stairs = [Staircase(s) for s in raw]
    stairs.sort(key=lambda s: s.elements)
    return tuple(stairs)


def subsets_of_support(n, d):
    """All size-n subsets of staircase_union(n, d), canonically ordered."""
    return combinations(staircase_union(n, d), n)
