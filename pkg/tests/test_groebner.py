from fractions import Fraction
from itertools import combinations

import pytest

from ugb.errors import (InvalidBasisError, NonGenericWeightError,
                        NotZeroDimensionalError)
from ugb.fields import QQ, PrimeField
from ugb.groebner import (CoeffTable, ReducedGroebnerBasis,
                          check_weight_generic, convert_basis,
                          initial_staircase, normal_form_table,
                          rgb_from_polynomials, validate_reduced_gb,
                          weight_sort_key)
from ugb.orders import deglex_order, lex_order, weight_order
from ugb.polynomials import Polynomial, parse_polynomial
from ugb.staircases import Staircase, staircase_sum, staircase_union


def cubic_basis():
    """Heads x1^3 and x2 over the staircase of pure x1 powers."""
    g1 = parse_polynomial("x1^3 - 3*x1^2 + 3*x1 - 1", 2)
    g2 = parse_polynomial("x2 - x1 + 1", 2)
    return rgb_from_polynomials([g1, g2], lex_order(2, (1, 0)))


# residues of every support monomial in the pure-power basis, derived by
# repeated substitution x2 = x1 - 1 and x1^3 = 3x1^2 - 3x1 + 1
CUBIC_COLUMNS = {
    (0, 0): (1, 0, 0),
    (1, 0): (0, 1, 0),
    (2, 0): (0, 0, 1),
    (3, 0): (1, -3, 3),
    (0, 1): (-1, 1, 0),
    (1, 1): (0, -1, 1),
    (2, 1): (1, -3, 2),
    (0, 2): (1, -2, 1),
    (1, 2): (1, -2, 1),
    (0, 3): (0, 0, 0),
}

# the same table after re-selecting the basis for weight (3,2): the cheap
# staircase flips to pure x2 powers and every column is rewritten
CONVERTED_COLUMNS = {
    (0, 0): (1, 0, 0),
    (0, 1): (0, 1, 0),
    (0, 2): (0, 0, 1),
    (1, 0): (1, 1, 0),
    (1, 1): (0, 1, 1),
    (0, 3): (0, 0, 0),
    (2, 0): (1, 2, 1),
    (1, 2): (0, 0, 1),
    (2, 1): (0, 1, 2),
    (3, 0): (1, 3, 3),
}


def test_rgb_from_polynomials_recovers_staircase_and_tails():
    basis = cubic_basis()
    assert basis.n == 3 and basis.d == 2
    assert basis.staircase == Staircase([(0, 0), (1, 0), (2, 0)])
    assert basis.heads() == [(0, 1), (3, 0)]
    assert basis.tails[(0, 1)] == parse_polynomial("x1 - 1", 2)
    assert basis.tails[(3, 0)] == parse_polynomial("3*x1^2 - 3*x1 + 1", 2)
    assert basis.element((0, 1)) == parse_polynomial("x2 - x1 + 1", 2)
    assert validate_reduced_gb(basis) is None


def test_rgb_from_polynomials_rejects_bad_input():
    order = lex_order(2)
    x1 = parse_polynomial("x1", 2)
    with pytest.raises(InvalidBasisError):
        rgb_from_polynomials([], order)
    with pytest.raises(InvalidBasisError):
        rgb_from_polynomials([Polynomial.zero(QQ)], order)
    with pytest.raises(InvalidBasisError):
        rgb_from_polynomials([x1, parse_polynomial("x1 - 1", 2)], order)
    with pytest.raises(NotZeroDimensionalError):
        rgb_from_polynomials([x1], order)
    mixed = [x1, parse_polynomial("x2", 2, PrimeField(5))]
    with pytest.raises(InvalidBasisError):
        rgb_from_polynomials(mixed, order)


def test_rgb_from_polynomials_scales_to_monic():
    p = parse_polynomial("2*x1 - 4", 1)
    basis = rgb_from_polynomials([p], lex_order(1))
    assert basis.element((1,)) == parse_polynomial("x1 - 2", 1)


def test_validate_catches_each_violation_kind():
    basis = cubic_basis()
    assert validate_reduced_gb(basis, n=4).kind == "WrongLength"

    wrong_heads = ReducedGroebnerBasis(
        basis.staircase, {(0, 1): basis.tails[(0, 1)]}, basis.order)
    assert validate_reduced_gb(wrong_heads).kind == "HeadSetMismatch"

    outside = dict(basis.tails)
    outside[(0, 1)] = parse_polynomial("x1*x2", 2)
    bad = ReducedGroebnerBasis(basis.staircase, outside, basis.order)
    assert validate_reduced_gb(bad).kind == "TailOutsideStaircase"

    # under plain lex with x1 largest, the tail x1 - 1 sits above head x2
    flipped = ReducedGroebnerBasis(basis.staircase, basis.tails, lex_order(2))
    assert validate_reduced_gb(flipped).kind == "HeadNotInitial"

    alien = dict(basis.tails)
    alien[(0, 1)] = parse_polynomial("1", 2, PrimeField(5))
    mixed = ReducedGroebnerBasis(basis.staircase, alien, basis.order)
    assert validate_reduced_gb(mixed).kind == "FieldMismatch"


def test_normal_form_table_matches_hand_derivation():
    table = normal_form_table(cubic_basis())
    assert table.row_exps == ((0, 0), (1, 0), (2, 0))
    assert set(table.col_exps) == set(CUBIC_COLUMNS)
    for u, col in CUBIC_COLUMNS.items():
        assert table.column(u) == tuple(Fraction(c) for c in col), u


def test_normal_form_table_on_a_monomial_staircase_basis():
    # tails all zero: columns are units inside, zero outside
    from ugb.ideals import monomial_ideal
    basis = monomial_ideal(Staircase([(0, 0), (1, 0), (0, 1)]))
    table = normal_form_table(basis)
    for u in table.col_exps:
        if u in basis.staircase:
            expected = tuple(QQ.one if r == u else QQ.zero
                             for r in table.row_exps)
        else:
            expected = (QQ.zero,) * 3
        assert table.column(u) == expected


def test_weight_sort_key_orders_ties_by_plain_exponents():
    key = weight_sort_key((Fraction(3), Fraction(2)), (0, 1))
    ranked = sorted(CUBIC_COLUMNS, key=key)
    assert ranked == [(0, 0), (0, 1), (1, 0), (0, 2), (1, 1), (0, 3),
                      (2, 0), (1, 2), (2, 1), (3, 0)]


def test_check_weight_generic():
    assert check_weight_generic((3, 2), 3, 2) == (Fraction(3), Fraction(2))
    for bad in [(1, 1), (2, 1), (0, 1), (-1, 2), (1,)]:
        with pytest.raises(NonGenericWeightError):
            check_weight_generic(bad, 3, 2)
    # (1,1) separates nothing at n=3 but is fine at n=1
    assert check_weight_generic((1, 1), 1, 2) == (Fraction(1), Fraction(1))


def test_convert_basis_reproduces_hand_derivation():
    table = normal_form_table(cubic_basis())
    result = convert_basis(table, (3, 2))
    assert result.staircase == Staircase([(0, 0), (0, 1), (0, 2)])
    assert result.table.row_exps == ((0, 0), (0, 1), (0, 2))
    assert result.table.col_exps == tuple(sorted(
        CUBIC_COLUMNS, key=weight_sort_key((Fraction(3), Fraction(2)),
                                           (0, 1))))
    for u, col in CONVERTED_COLUMNS.items():
        assert result.table.column(u) == tuple(Fraction(c) for c in col), u
    assert result.basis.heads() == [(1, 0), (0, 3)]
    assert result.basis.element((1, 0)) == parse_polynomial("x1 - x2 - 1", 2)
    assert result.basis.element((0, 3)) == parse_polynomial("x2^3", 2)
    assert result.ops > 0


def test_convert_basis_keeps_the_input_staircase_when_cheapest():
    basis = cubic_basis()
    table = normal_form_table(basis)
    result = convert_basis(table, (2, 3))
    assert result.staircase == basis.staircase
    assert result.basis == basis  # same staircase and tails; order differs


def test_convert_basis_is_idempotent():
    table = normal_form_table(cubic_basis())
    once = convert_basis(table, (3, 2))
    twice = convert_basis(once.table, (3, 2))
    assert twice.table == once.table
    assert twice.basis == once.basis


def test_converted_basis_is_valid_under_its_weight_order():
    table = normal_form_table(cubic_basis())
    for w in [(3, 2), (2, 3), (1, 5), (5, 1), (7, 5), (5, 7)]:
        result = convert_basis(table, w)
        assert validate_reduced_gb(result.basis) is None
        assert result.basis.order == weight_order(w, tiebreak=(0, 1))


def test_initial_staircase_agrees_with_full_conversion():
    table = normal_form_table(cubic_basis())
    for w in [(3, 2), (2, 3), (1, 5), (5, 1), (7, 5), (5, 7), (9, 11)]:
        assert initial_staircase(table, w) == convert_basis(table, w).staircase


def test_conversion_picks_the_cheapest_basic_subset():
    # greedy optimality: no independent size-3 column subset is cheaper
    from ugb.oracle import is_basic
    table = normal_form_table(cubic_basis())
    for w in [(3, 2), (2, 3), (1, 5), (5, 1)]:
        chosen = convert_basis(table, w).staircase
        cost = sum(a * b for a, b in zip(w, staircase_sum(chosen)))
        for subset in combinations(staircase_union(3, 2), 3):
            if not is_basic(table, subset):
                continue
            alt = sum(a * b for a, b in zip(w, staircase_sum(subset)))
            assert cost <= alt


def test_conversion_result_is_independent_of_input_presentation():
    # same ideal presented on the other staircase gives the same conversion
    first = normal_form_table(cubic_basis())
    other = rgb_from_polynomials(
        [parse_polynomial("x2^3", 2), parse_polynomial("x1 - x2 - 1", 2)],
        weight_order((3, 2)))
    second = normal_form_table(other)
    for w in [(3, 2), (2, 3), (1, 5), (5, 1)]:
        a = convert_basis(first, w)
        b = convert_basis(second, w)
        assert a.staircase == b.staircase
        assert a.basis == b.basis
        assert a.table == b.table


def test_conversion_over_a_prime_field():
    F = PrimeField(7)
    g1 = parse_polynomial("x1^3 - 3*x1^2 + 3*x1 - 1", 2, F)
    g2 = parse_polynomial("x2 - x1 + 1", 2, F)
    basis = rgb_from_polynomials([g1, g2], lex_order(2, (1, 0)), F)
    table = normal_form_table(basis)
    result = convert_basis(table, (3, 2))
    assert result.staircase == Staircase([(0, 0), (0, 1), (0, 2)])
    assert result.basis.element((0, 3)) == parse_polynomial("x2^3", 2, F)


def test_coeff_table_value_semantics():
    t1 = normal_form_table(cubic_basis())
    t2 = normal_form_table(cubic_basis())
    assert t1 == t2 and hash(t1) == hash(t2)
    assert t1.entry((1, 0), (3, 0)) == Fraction(-3)
    assert t1.staircase() == Staircase([(0, 0), (1, 0), (2, 0)])
