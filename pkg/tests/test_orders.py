import random
from itertools import product

import pytest

from ugb.errors import ParseError
from ugb.orders import (MonomialOrder, deglex_order, degrevlex_order,
                        lex_order, order_to_spec, parse_order_spec,
                        weight_order)


def test_lex_comparison():
    # default priority: x1 > x2
    o = lex_order(2)
    assert o.compare((1, 0), (0, 5)) == 1
    assert o.compare((0, 5), (1, 0)) == -1
    assert o.compare((2, 1), (2, 1)) == 0
    # x2 > x1
    o = lex_order(2, (1, 0))
    assert o.compare((0, 1), (5, 0)) == 1


def test_deglex_comparison():
    o = deglex_order(2)
    assert o.compare((0, 3), (2, 0)) == 1
    assert o.compare((1, 1), (0, 2)) == 1
    assert o.compare((1, 1), (2, 0)) == -1


def test_degrevlex_differs_from_deglex_at_d3():
    # x1*x3 and x2^2 tie in degree and under lex-of-exponents deglex
    # they order by x1; degrevlex ranks by the last variable, reversed
    dl = deglex_order(3)
    drl = degrevlex_order(3)
    a, b = (1, 0, 1), (0, 2, 0)
    assert dl.compare(a, b) == 1
    assert drl.compare(a, b) == -1


def test_degrevlex_matches_textbook_on_quadratics():
    drl = degrevlex_order(3)
    ranked = sorted([(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1),
                     (0, 1, 1), (0, 0, 2)], key=drl.key, reverse=True)
    assert ranked == [(2, 0, 0), (1, 1, 0), (0, 2, 0), (1, 0, 1),
                      (0, 1, 1), (0, 0, 2)]


def test_weight_order_with_tiebreak():
    o = weight_order((3, 2))
    assert o.compare((1, 0), (0, 1)) == 1
    # (2,0) and (0,3) both weigh 6; the default tiebreak reads x1 first
    assert o.compare((2, 0), (0, 3)) == 1
    o2 = weight_order((3, 2), tiebreak=(1, 0))
    assert o2.compare((2, 0), (0, 3)) == -1


def test_weight_rows_must_match_dimension():
    with pytest.raises(ValueError):
        MonomialOrder(2, ((1, 2, 3),))
    with pytest.raises(ValueError):
        MonomialOrder(2, tiebreak=(0, 0))


def test_orders_are_total_and_multiplicative():
    rng = random.Random(7)
    orders = [lex_order(3), deglex_order(3), degrevlex_order(3),
              weight_order((5, 3, 1)), weight_order((1, 1, 1), (2, 0, 1))]
    vecs = list(product(range(3), repeat=3))
    for o in orders:
        for _ in range(200):
            u, v, t = (rng.choice(vecs) for _ in range(3))
            cu, cv = o.compare(u, v), o.compare(v, u)
            assert cu == -cv
            if cu == 0:
                assert u == v
            # translation invariance
            ut = tuple(a + b for a, b in zip(u, t))
            vt = tuple(a + b for a, b in zip(v, t))
            assert o.compare(ut, vt) == cu
        # zero is the global minimum among nonnegative vectors
        for v in vecs:
            if v != (0, 0, 0):
                assert o.compare((0, 0, 0), v) == -1


def test_leading_picks_the_maximum():
    o = deglex_order(2)
    assert o.leading([(1, 0), (0, 2), (1, 1)]) == (1, 1)


def test_order_spec_round_trip():
    for spec, d in [("lex:x2>x1", 2), ("deglex", 2), ("degrevlex:x3>x1>x2", 3),
                    ("weights:[(3,2)];tiebreak:x1>x2", 2),
                    ("weights:[(1,1),(0,-1)]", 2),
                    ("weights:[(1/2,3)];tiebreak:x2>x1", 2)]:
        o = parse_order_spec(spec, d)
        assert parse_order_spec(order_to_spec(o), d) == o


def test_order_spec_rejects_malformed_text():
    for bad, d in [("", 2), ("lex:x1", 2), ("lex:x1>x1", 2), ("lex:x3>x1", 2),
                   ("weights:", 2), ("weights:[(1,2,3)]", 2),
                   ("weights:[(1,2)];cut:x1>x2", 2), ("magic", 2),
                   ("weights:[]", 2)]:
        with pytest.raises(ParseError):
            parse_order_spec(bad, d)


def test_named_orders_compile_to_expected_towers():
    assert lex_order(2).weight_rows == ()
    assert deglex_order(2).weight_rows == ((1, 1),)
    assert degrevlex_order(2).weight_rows == ((1, 1), (0, -1), (-1, 0))
