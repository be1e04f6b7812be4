from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from strata.errors import BadValuation, NotInvertible
from strata import series as S
from strata.series import LaurentSeries

F = Fraction


def series_from(terms, order=10):
    return LaurentSeries.from_terms(terms, order)


small_units = st.builds(
    lambda c1, c2, c3: series_from({0: 1, 1: c1, 2: c2, 3: c3}, 8),
    *(st.builds(F, st.integers(-9, 9), st.integers(1, 5)) for _ in range(3)))


def test_canonical_form_drops_leading_zeros():
    s = LaurentSeries(-2, [0, 0, 3, 1], 1)
    assert s.min_exp == 0
    assert s.valuation() == 0
    assert s.coeff(-5) == 0


def test_coeff_beyond_truncation_raises():
    s = series_from({0: 1}, 4)
    with pytest.raises(ValueError):
        s.coeff(5)


def test_truncation_tracks_through_multiplication():
    # conservative rule: the unknown tail of one factor meets the lowest
    # exponent of the other, so a z^-1 factor costs one order of knowledge
    a = series_from({-1: 1}, 3)
    b = series_from({2: 1}, 3)
    prod = a * b
    assert prod.trunc_order == 2
    assert prod.terms() == {1: F(1)}


def test_inverse_of_geometric():
    s = series_from({0: 1, 1: -1}, 8)
    inv = s.inverse()
    assert all(inv.coeff(n) == 1 for n in range(9))


def test_inverse_with_pole():
    s = series_from({-1: 2, 0: 1}, 5)
    inv = s.inverse()
    assert inv.valuation() == 1
    prod = s * inv
    assert all(prod.coeff(n) == (1 if n == 0 else 0)
               for n in range(prod.min_exp, prod.trunc_order + 1))


def test_zero_series_not_invertible():
    with pytest.raises(NotInvertible):
        LaurentSeries.zero(5).inverse()


@given(small_units)
def test_inverse_round_trip(s):
    prod = s * s.inverse()
    assert prod.coeff(0) == 1
    assert all(prod.coeff(n) == 0 for n in range(1, prod.trunc_order + 1))


@given(small_units)
def test_exp_log_round_trip(s):
    assert s.log().exp().agrees_with(s, s.trunc_order)


def test_derivative_integrate():
    s = series_from({1: 2, 4: F(1, 3)}, 9)
    assert s.derivative().integrate() == s
    with pytest.raises(BadValuation):
        series_from({-1: 1}, 4).integrate()


def test_compose_and_revert():
    f = series_from({1: 1, 2: 1}, 8)
    g = f.revert()
    assert f.compose(g).agrees_with(LaurentSeries.identity(8), g.trunc_order)
    with pytest.raises(BadValuation):
        series_from({0: 1, 1: 1}, 4).revert()


def test_arctan_series():
    x = LaurentSeries.identity(9)
    at = x.arctan()
    assert at.coeff(1) == 1
    assert at.coeff(3) == F(-1, 3)
    assert at.coeff(5) == F(1, 5)
    assert at.coeff(2) == 0


# -- named series -----------------------------------------------------


def test_b_table():
    b = S.b_table(6)
    assert b[0] == 1
    assert b[2] == F(-1, 24)
    assert b[4] == F(7, 5760)
    assert b[1] == b[3] == b[5] == 0


def test_alpha_table():
    alpha = S.alpha_table(9)
    assert alpha[1] == F(-1, 24)
    assert alpha[3] == F(3, 640)
    assert alpha[5] == F(-1525, 580608)
    assert alpha[7] == F(615881, 199065600)
    assert all(alpha[l] == 0 for l in (2, 4, 6, 8))


def test_A_series_leading():
    a = S.A_series(5)
    assert a.coeff(-1) == 1
    assert a.coeff(0) == 0


def test_bold_alpha_table():
    # opposite leading sign to the plain family; anchored downstream by the
    # spin volume differences
    bold = S.bold_alpha_table(7)
    assert bold[1] == F(1, 24)
    assert bold[3] == F(-3, 640)
    assert bold[5] == F(715, 580608)
    assert bold[2] == bold[4] == 0


def test_lagrange_consistency():
    assert S.lagrange_consistency_check(10)


def test_delta_series():
    d = S.delta_series(8)
    assert d.coeff(2) == F(1, 2)
    assert d.coeff(4) == F(-1, 16)
    assert d.coeff(6) == F(91, 2304)
    assert d.coeff(8) == F(-41737, 829440)
    assert d.coeff(3) == 0


def test_delta_identity_holds_at_even_steps():
    # even steps are not used to solve; they must hold as consistency checks
    for j in (2, 4, 6):
        assert S.delta_identity_residual(8, j) == 0


def test_d_min_series():
    d = S.d_min_series(7)
    assert d.coeff(1) == 1
    assert d.coeff(3) == F(-1, 8)
    assert d.coeff(5) == F(91, 1152)
    assert d.coeff(2) == d.coeff(4) == 0


def test_d_min_series_is_twice_delta_shifted():
    lhs = S.d_min_series(9).shift(1)
    rhs = S.delta_series(10) * 2
    assert lhs.agrees_with(rhs, 10)


def test_arctan_identities():
    assert S.arctan_identity_one(16)
    assert S.arctan_identity_two(16)
