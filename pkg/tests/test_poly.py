from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from snweb.errors import DivisionByZero, NotDivisible
from snweb.poly import LaurentPoly, RationalFunc, divide_exact, t_power

polys = st.dictionaries(st.integers(-6, 6), st.integers(-5, 5), max_size=5).map(LaurentPoly)
nonzero = polys.filter(lambda p: not p.is_zero())


def at(p, x):
    return sum(Fraction(x) ** e * c for e, c in p.items())


@given(polys, polys, st.sampled_from([2, 3, -2]))
def test_ring_ops_match_evaluation(a, b, x):
    assert at(a + b, x) == at(a, x) + at(b, x)
    assert at(a - b, x) == at(a, x) - at(b, x)
    assert at(a * b, x) == at(a, x) * at(b, x)


@given(polys, polys, polys)
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(polys, nonzero)
def test_divide_exact_inverts_multiplication(a, b):
    assert divide_exact(a * b, b) == a


def test_not_divisible():
    with pytest.raises(NotDivisible):
        divide_exact(LaurentPoly({0: 1}), LaurentPoly({0: 1, 1: 1}))
    with pytest.raises(NotDivisible):
        divide_exact(LaurentPoly({0: 1}), LaurentPoly({0: 2}))
    with pytest.raises(DivisionByZero):
        divide_exact(LaurentPoly({0: 1}), LaurentPoly())


@given(polys, st.integers(1, 4))
def test_substitute_then_rescale(p, k):
    assert p.substitute_power(k).rescale(k) == p


@given(polys)
def test_negate_variable(p):
    assert at(p.negate_variable(), 3) == at(p, -3)


@given(polys, st.integers(-5, 5))
def test_shift(p, k):
    assert p.shift(k) == p * t_power(k)


@given(polys, st.integers(0, 4))
def test_power(p, k):
    expect = LaurentPoly.const(1)
    for _ in range(k):
        expect = expect * p
    assert p ** k == expect


def test_negative_power_of_monomial():
    assert t_power(3, -1) ** -2 == t_power(-6)


def test_render():
    p = LaurentPoly({2: 1, 0: -3, -2: 1})
    assert p.render() == "t^-2 - 3 + t^2"
    assert p.render("q", scale=2, descending=True) == "q - 3 + q^-1"
    assert LaurentPoly().render() == "0"
    assert LaurentPoly({1: -2}).render() == "-2*t"


def test_zero_terms_dropped():
    assert LaurentPoly({1: 0, 2: 1}) == t_power(2)
    assert LaurentPoly({1: 0}).is_zero()


def test_mod():
    assert LaurentPoly({0: 4, 1: 3}).mod(2) == t_power(1)


@given(polys, nonzero)
def test_rational_roundtrip(a, b):
    r = RationalFunc(a * b, b)
    assert r.is_poly()
    assert r.to_poly() == a
    assert RationalFunc(a) + RationalFunc(a * b, b) == RationalFunc(a + a)
