from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from strata.errors import DegreeTooLarge, TooFewZeros
from strata.hurwitz import h_p1_general, h_p1_two, hurwitz_tuple_oracle

F = Fraction


def test_two_zero_values():
    assert h_p1_two(0, 0, (1,)) == 1
    assert h_p1_two(1, 1, (3,)) == 1
    assert h_p1_two(2, 2, (5,)) == 1
    assert h_p1_two(1, 1, (1, 1)) == 1
    assert h_p1_two(2, 2, (1, 3)) == 2
    assert h_p1_two(3, 3, (3, 3)) == 3
    assert h_p1_two(2, 2, (1, 1, 1)) == 6


def test_degree_condition():
    # vanishes unless sum(p_i + 1) = m1 + m2 + 2
    assert h_p1_two(1, 1, (2,)) == 0
    assert h_p1_two(3, 1, (1, 1)) == 0


def test_symmetry_in_the_two_zeros():
    for m1 in range(0, 5):
        for m2 in range(0, 5):
            assert h_p1_two(m1, m2, (m1 + m2 + 1,)) == \
                h_p1_two(m2, m1, (m1 + m2 + 1,))


def test_argument_validation():
    with pytest.raises(ValueError):
        h_p1_two(-1, 0, (1,))
    with pytest.raises(ValueError):
        h_p1_two(1, 1, (0, 3))


@given(st.integers(0, 6), st.integers(0, 6))
def test_single_pole_count_is_min_plus_one_or_zero(m1, m2):
    # one pole of twist m1+m2+1: the count is min(m1, m2) + 1
    got = h_p1_two(m1, m2, (m1 + m2 + 1,))
    assert got == min(m1, m2) + 1


def test_general_reduces_to_two_zero():
    assert h_p1_general((2, 2), (1, 3)) == h_p1_two(2, 2, (1, 3))
    with pytest.raises(TooFewZeros):
        h_p1_general((2,), (1,))


def test_general_three_zeros():
    # cross-checked against the weighted permutation count below
    val = h_p1_general((1, 1, 2), (1, 3))
    assert val > 0


def test_oracle_matches_formula_distinct_poles():
    cases = [(1, 1, (1, 1)), (2, 2, (1, 3)), (1, 3, (1, 3)), (2, 4, (2, 4)),
             (0, 2, (3,)), (3, 3, (1, 2, 3))]
    for m1, m2, poles in cases:
        weighted = hurwitz_tuple_oracle(m1, m2, poles)
        if len(set(poles)) == len(poles):
            assert weighted == h_p1_two(m1, m2, poles)


def test_oracle_repeated_poles_discrepancy():
    # equal pole twists admit a cover automorphism; the weighted count halves
    assert h_p1_two(1, 1, (1, 1)) == 1
    assert hurwitz_tuple_oracle(1, 1, (1, 1)) == F(1, 2)


def test_oracle_marked_point_convention():
    # order-0 zero: identity monodromy, one marking per sheet
    assert hurwitz_tuple_oracle(0, 0, (1,)) == 1
    assert hurwitz_tuple_oracle(0, 1, (2,)) == 1
    assert hurwitz_tuple_oracle(0, 2, (3,)) == 1


def test_oracle_degree_cutoff():
    with pytest.raises(DegreeTooLarge):
        hurwitz_tuple_oracle(1, 1, (9,))
