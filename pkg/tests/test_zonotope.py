import random
from functools import cmp_to_key
from math import gcd

import pytest

from ugb.errors import NonGenericWeightError, TooLargeError
from ugb.staircases import staircase_union
from ugb.zonotope import (Chamber, all_chambers, positive_chambers,
                          primitive_differences, zonotope_vertex)


def dot(a, b):
    return sum(x * y for x, y in zip(a, b))


def signs_of(w, dirset):
    out = []
    for g in dirset.generators:
        s = dot(w, g)
        assert s != 0
        out.append("+" if s > 0 else "-")
    return "".join(out)


def brute_vertex(w, dirset):
    total = [0] * len(w)
    for v in dirset.full():
        if dot(w, v) < 0:
            for i, x in enumerate(v):
                total[i] += x
    return tuple(total)


def test_primitive_differences_of_the_running_example():
    dirset = primitive_differences(3, 2)
    assert set(dirset.generators) == {(1, 0), (0, 1), (1, -1), (1, -2),
                                      (2, -1)}
    assert set(dirset.full()) == {(1, 0), (0, 1), (1, -1), (1, -2), (2, -1),
                                  (-1, 0), (0, -1), (-1, 1), (-1, 2),
                                  (-2, 1)}
    assert dirset.n == 3 and dirset.d == 2


def test_single_point_directions_are_the_units():
    assert set(primitive_differences(1, 3).generators) == {
        (1, 0, 0), (0, 1, 0), (0, 0, 1)}


def test_generators_are_primitive_and_span_all_differences():
    for n, d in [(3, 2), (5, 2), (2, 3), (3, 3)]:
        dirset = primitive_differences(n, d)
        support = staircase_union(n, d)
        diffs = {tuple(a - b for a, b in zip(u, v))
                 for u in support for v in support if u != v}
        full = set(dirset.full())
        assert full <= diffs
        # membership rule: a difference is kept iff no proper divisor of it
        # is itself a difference
        for v in diffs:
            bound = max(abs(x) for x in v)
            reducible = any(
                all(x % k == 0 for x in v)
                and tuple(x // k for x in v) in diffs
                for k in range(2, bound + 1))
            assert (v in full) == (not reducible), v
        # consequence: every difference is a multiple of a kept direction
        for v in diffs:
            g = gcd(*[abs(x) for x in v])
            assert tuple(x // g for x in v) in full, v
        # canonical representatives lead with a positive entry
        for g_ in dirset.generators:
            first = next(x for x in g_ if x != 0)
            assert first > 0


def test_zonotope_vertex_matches_brute_sum():
    dirset = primitive_differences(3, 2)
    rng = random.Random(3)
    for _ in range(200):
        w = (rng.randint(-40, 40), rng.randint(-40, 40))
        if any(dot(w, g) == 0 for g in dirset.generators):
            continue
        assert zonotope_vertex(w, dirset) == brute_vertex(w, dirset)


def test_zonotope_vertex_rejects_weights_on_a_hyperplane():
    dirset = primitive_differences(3, 2)
    with pytest.raises(NonGenericWeightError):
        zonotope_vertex((1, 1), dirset)
    with pytest.raises(NonGenericWeightError):
        zonotope_vertex((2, 1), dirset)


def test_all_chambers_of_the_running_example():
    chambers = all_chambers(3, 2)
    assert len(chambers) == 10
    expected = {(-5, 5), (-5, 3), (-3, -1), (-1, -3), (3, -5)}
    expected |= {tuple(-x for x in v) for v in expected}
    assert {c.vertex for c in chambers} == expected
    assert len({c.signs for c in chambers}) == 10


def test_positive_chambers_of_the_running_example():
    dirset = primitive_differences(3, 2)
    chambers = positive_chambers(3, 2)
    assert len(chambers) == 4
    reference = [(3, 1), (3, 2), (2, 3), (1, 3)]
    got = {signs_of(w, dirset) for w in reference}
    assert {c.signs for c in chambers} == got
    for c in chambers:
        assert all(x > 0 for x in c.witness)
        assert signs_of(c.witness, dirset) == c.signs
        assert c.vertex == brute_vertex(c.witness, dirset)


def test_positive_chambers_are_a_subset_of_all_chambers():
    for n, d in [(2, 2), (3, 2), (4, 2), (2, 3)]:
        every = {(c.signs, c.vertex) for c in all_chambers(n, d)}
        positive = {(c.signs, c.vertex) for c in positive_chambers(n, d)}
        assert positive <= every


def test_all_chambers_antipodal_symmetry():
    for n, d in [(3, 2), (4, 2), (2, 3)]:
        chambers = all_chambers(n, d)
        table = {c.signs: c for c in chambers}
        flip = str.maketrans("+-", "-+")
        for c in chambers:
            mirror = table[c.signs.translate(flip)]
            assert mirror.vertex == tuple(-x for x in c.vertex)
            assert mirror.witness == tuple(-x for x in c.witness)


def _angular_chambers(dirset):
    """Independent plane oracle: walk the unit circle between consecutive
    hyperplane normals; one arc per chamber."""
    def canon(v):
        g = gcd(abs(v[0]), abs(v[1]))
        return (v[0] // g, v[1] // g)

    rays = set()
    for gvec in dirset.generators:
        perp = (-gvec[1], gvec[0])
        rays.add(canon(perp))
        rays.add(canon((-perp[0], -perp[1])))

    def half(v):
        return 0 if (v[1] > 0 or (v[1] == 0 and v[0] > 0)) else 1

    def cmp(a, b):
        if half(a) != half(b):
            return half(a) - half(b)
        cross = a[0] * b[1] - a[1] * b[0]
        return -1 if cross > 0 else (1 if cross < 0 else 0)

    ordered = sorted(rays, key=cmp_to_key(cmp))
    arcs = []
    for i, a in enumerate(ordered):
        b = ordered[(i + 1) % len(ordered)]
        arcs.append((a[0] + b[0], a[1] + b[1]))
    return {signs_of(w, dirset) for w in arcs}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_plane_chambers_match_the_angular_sweep(n):
    dirset = primitive_differences(n, 2)
    chambers = all_chambers(n, 2)
    expected = _angular_chambers(dirset)
    assert {c.signs for c in chambers} == expected
    assert len(chambers) == 2 * len(dirset.generators)


def test_random_weights_never_leave_the_enumerated_chambers():
    rng = random.Random(11)
    for n, d, complete in [(3, 2, True), (2, 3, True), (3, 3, False)]:
        dirset = primitive_differences(n, d)
        known = {c.signs for c in all_chambers(n, d)}
        seen = set()
        for _ in range(10000):
            w = tuple(rng.randint(-30, 30) for _ in range(d))
            if any(dot(w, g) == 0 for g in dirset.generators):
                continue
            pattern = signs_of(w, dirset)
            assert pattern in known
            seen.add(pattern)
        if complete:
            # every chamber is fat enough to be hit by dense sampling
            assert seen == known


def test_positive_chamber_counts_in_three_variables():
    # two points: the weight order is decided by which coordinate is
    # smallest first; six orderings, six chambers
    chambers = positive_chambers(2, 3)
    assert len(chambers) == 6
    assert len({c.signs for c in chambers}) == 6
    for c in chambers:
        assert all(x > 0 for x in c.witness)


def test_chamber_guard():
    with pytest.raises(TooLargeError):
        positive_chambers(3, 2, max_chambers=2)
    with pytest.raises(TooLargeError):
        all_chambers(3, 2, max_chambers=5)


def test_chamber_value_semantics():
    a = Chamber((1, 2), (3, 4), "+-")
    b = Chamber((1, 2), (3, 4), "+-")
    assert a == b
    assert a != Chamber((1, 2), (3, 4), "++")
