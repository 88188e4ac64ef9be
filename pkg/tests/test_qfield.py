from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qhook.qfield import (
    FactorProduct,
    PolyQ,
    RatQ,
    TruncSeries,
    inverse_factor_series,
    one_minus_q,
    one_plus_q,
    pochhammer,
    poly_gcd,
    poly_mul,
    q_pow,
    rat_arith,
    series_expand,
)


def P(*coeffs):
    return PolyQ.from_terms(dict(enumerate(coeffs)))


def test_poly_mul_examples():
    assert poly_mul(P(1, -1), P(1, 1)) == P(1, 0, -1)
    assert poly_mul(P(1, -1), P(1, 0, -1)) == P(1, -1, -1, 1)
    assert poly_mul(P(0), P(3, 4)).is_zero()


def _same_up_to_sign(a, b):
    return a == b or a == poly_mul(b, P(-1))


def test_poly_gcd_examples():
    assert _same_up_to_sign(poly_gcd(one_minus_q(2), one_minus_q(3)), one_minus_q(1))
    assert _same_up_to_sign(poly_gcd(one_minus_q(4), one_minus_q(6)), one_minus_q(2))
    p = P(2, 4, 6)
    g = poly_gcd(p, P(0))
    assert _same_up_to_sign(g, P(1, 2, 3))


def test_rat_examples():
    r = RatQ(one_minus_q(2), one_minus_q(1))
    assert r.den.is_one()
    assert r.num == one_plus_q(1)
    x = RatQ(P(3, 1), P(1, 5))
    assert x + RatQ(0) == x
    assert RatQ(1, one_minus_q(1)) * RatQ(one_minus_q(1)) == RatQ(1)
    assert rat_arith(x, x, "sub").is_zero()
    assert rat_arith(x, x, "div") == RatQ(1)
    with pytest.raises(ZeroDivisionError):
        RatQ(1, 0)


def test_pochhammer_examples():
    assert pochhammer(1, 0).is_one()
    assert pochhammer(1, 1) == one_minus_q(1)
    assert pochhammer(2, 2) == poly_mul(one_minus_q(2), one_minus_q(3))


def test_series_examples():
    assert series_expand(RatQ(1, one_minus_q(1)), 3).as_ints() == [1, 1, 1, 1]
    assert series_expand(RatQ(one_minus_q(1), one_minus_q(1)), 5).as_ints() == [1, 0, 0, 0, 0, 0]
    s = series_expand(RatQ(1, poly_mul(one_minus_q(1), one_minus_q(2))), 4)
    assert s.as_ints() == [1, 1, 2, 2, 3]
    assert inverse_factor_series([1, 2], 4) == s


def test_series_rejects_pole_at_zero():
    with pytest.raises((ValueError, ZeroDivisionError)):
        series_expand(RatQ(1, P(0, 1)), 3)


def test_factor_product_matches_direct():
    fp = FactorProduct().neg().qpow(3).om(2, 2).poch(1, 3, -1)
    direct = RatQ(-1) * q_pow(3) * RatQ(poly_mul(one_minus_q(2), one_minus_q(2)), pochhammer(1, 3))
    assert fp.value() == direct


small_poly = st.lists(st.integers(-4, 4), min_size=1, max_size=5).map(lambda c: P(*c))
nonzero_poly = small_poly.filter(lambda p: not p.is_zero())
# denominators that are invertible as power series
unit_den = st.lists(st.integers(-3, 3), min_size=0, max_size=4).map(lambda c: P(1, *c))


@given(small_poly, unit_den, small_poly, unit_den)
def test_series_multiplicative(a, b, c, d):
    x, y = RatQ(a, b), RatQ(c, d)
    N = 12
    assert series_expand(x * y, N) == series_expand(x, N) * series_expand(y, N)


@given(small_poly, nonzero_poly, small_poly, nonzero_poly, st.sampled_from(["add", "sub", "mul"]))
def test_normal_form_is_fixed_point(a, b, c, d, op):
    r = rat_arith(RatQ(a, b), RatQ(c, d), op)
    again = RatQ(r.num, r.den)
    assert again.num == r.num and again.den == r.den
    assert r.den.leading() > 0
    assert poly_gcd(r.num, r.den).degree() == 0


@given(st.integers(0, 6), st.integers(0, 6), st.integers(0, 6))
def test_pochhammer_additive(s, n, m):
    assert poly_mul(pochhammer(s, n), pochhammer(s + n, m)) == pochhammer(s, n + m)


def test_truncseries_ops():
    a = TruncSeries([1, 2, 3], 2)
    assert (a + a).coeffs == (2, 4, 6)
    assert a.shift(1).coeffs == (0, 1, 2)
    assert a.first_mismatch(TruncSeries([1, 2, 4], 2)) == 2
    with pytest.raises(ValueError):
        TruncSeries([Fraction(1, 2)], 0).as_ints()
