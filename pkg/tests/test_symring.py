from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from strata.errors import EvenIndex, MissingGenerator, WrongBasis
from strata.symring import (WeightedPoly, bold_h_in_p, convert, h_in_p,
                            multi_point, p_in_h, pairing_coefficient,
                            partial2, two_point)

F = Fraction


def gen(idx):
    return WeightedPoly.gen("h", idx)


def test_ring_basics():
    x = gen(1)
    y = gen(2)
    assert (x + y) * (x - y) == x * x - y * y
    assert (x * y).weight() == 5
    assert (x + 3).constant() == 3
    assert WeightedPoly.zero("h").weight() is None


def test_homogeneity():
    assert (gen(1) * gen(1)).is_homogeneous()
    assert not (gen(1) + gen(2)).is_homogeneous()


def test_bold_basis_rejects_even_index():
    with pytest.raises(EvenIndex):
        WeightedPoly.gen("bold_h", 2)


def test_mixing_bases_raises():
    with pytest.raises(WrongBasis):
        gen(1) + WeightedPoly.gen("p", 1)


def test_substitute():
    poly = gen(1) * gen(1) * 2 + gen(3)
    assert poly.substitute({1: F(1, 2), 3: F(5)}) == F(1, 2) + 5
    with pytest.raises(MissingGenerator):
        poly.substitute({1: F(1)})


def test_deriv():
    poly = gen(1) * gen(1) * gen(2)
    assert poly.deriv(1) == 2 * gen(1) * gen(2)
    assert poly.deriv(3).is_zero()


def test_h_in_p_anchors():
    p1 = WeightedPoly.gen("p", 1)
    p2 = WeightedPoly.gen("p", 2)
    p3 = WeightedPoly.gen("p", 3)
    assert h_in_p(1) == p1
    assert h_in_p(2) == p2
    assert h_in_p(3) == p3 - F(3, 2) * p1 * p1
    assert h_in_p(4).is_homogeneous() and h_in_p(4).weight() == 5


@pytest.mark.parametrize("l", range(1, 6))
def test_h_p_round_trip(l):
    back = convert(convert(WeightedPoly.gen("h", l), "p"), "h")
    assert back == WeightedPoly.gen("h", l)
    back_p = convert(convert(WeightedPoly.gen("p", l), "h"), "p")
    assert back_p == WeightedPoly.gen("p", l)


@pytest.mark.parametrize("l", (1, 3, 5))
def test_bold_round_trip(l):
    back = convert(convert(WeightedPoly.gen("bold_h", l), "bold_p"), "bold_h")
    assert back == WeightedPoly.gen("bold_h", l)
    assert bold_h_in_p(l).is_homogeneous()


small_polys = st.builds(
    lambda c0, c1, c2, c11: WeightedPoly("h", {(): c0, (1,): c1, (2,): c2,
                                               (1, 1): c11}),
    *(st.builds(F, st.integers(-9, 9), st.integers(1, 4)) for _ in range(4)))


@given(small_polys, small_polys)
def test_conversion_is_a_ring_map(f, g):
    assert convert(f * g, "p") == convert(f, "p") * convert(g, "p")
    assert convert(f + g, "p") == convert(f, "p") + convert(g, "p")


def test_two_point_anchors():
    ts = two_point(3, 3)
    g1 = WeightedPoly.gen("h", 1)
    g2 = WeightedPoly.gen("h", 2)
    g3 = WeightedPoly.gen("h", 3)
    assert ts.coeff((1, 1)) == 2 * g1
    assert ts.coeff((2, 1)) == 3 * g2
    assert ts.coeff((2, 2)) == 2 * g1 * g1 + 4 * g3
    assert ts.coeff((1, 2)) == ts.coeff((2, 1))


def test_two_point_weight_matches_exponents():
    ts = two_point(4, 4)
    for (a, b), poly in ts.terms.items():
        assert poly.is_homogeneous()
        assert poly.weight() == a + b


def test_multi_point_reduces_to_two_point():
    assert multi_point((2, 3)).terms == two_point(2, 3).terms


def test_multi_point_symmetric():
    ms = multi_point((2, 2, 2))
    for vec, poly in ms.terms.items():
        assert ms.coeff(tuple(reversed(vec))) == poly


def test_pairing_coefficient_three_points():
    g1 = WeightedPoly.gen("h", 1)
    g2 = WeightedPoly.gen("h", 2)
    assert pairing_coefficient((1, 1, 1)) == 6 * g1
    assert pairing_coefficient((2, 1, 1)) == 12 * g2


def test_multi_point_weight_drops_with_points():
    # top coefficient of n bounds has weight sum(bounds) - (n - 2)
    for bounds in ((1, 1, 1), (2, 1, 1), (2, 2, 1), (1, 1, 1, 1)):
        poly = pairing_coefficient(bounds)
        assert poly.is_homogeneous()
        assert poly.weight() == sum(bounds) - (len(bounds) - 2)


def test_partial2_on_p_basis():
    p1 = WeightedPoly.gen("p", 1)
    p3 = WeightedPoly.gen("p", 3)
    assert partial2(p1) == WeightedPoly.one("p")
    assert partial2(p3) == 6 * p1
    assert partial2(p1 * p1) == 2 * p1
    with pytest.raises(WrongBasis):
        partial2(gen(1))
