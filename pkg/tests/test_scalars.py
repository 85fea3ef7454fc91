import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tits3.scalars import GF3, GF5, GF7, Q, Field, FieldError, binomial, parse_field


def test_gf3_examples():
    assert GF3.add(2, 2) == 1
    assert GF3.inv(2) == 2


def test_one_third_exists_over_q():
    third = Q.inv(Q(3))
    assert third == Fraction(1, 3)
    assert Q.mul(third, 3) == 1


@pytest.mark.parametrize("p", [2, 4, 9, 15])
def test_bad_characteristics_rejected(p):
    with pytest.raises(FieldError):
        Field(p)


def test_inverse_of_zero_is_a_domain_error():
    for f in (GF3, GF7, Q):
        with pytest.raises(ZeroDivisionError):
            f.inv(f.zero)


elements = st.integers(min_value=-10**6, max_value=10**6)
fields = st.sampled_from([GF3, GF5, GF7, Field(101), Q])


@settings(max_examples=300, deadline=None)
@given(fields, elements, elements, elements)
def test_field_axioms(f, a, b, c):
    a, b, c = f(a), f(b), f(c)
    assert f.add(f.add(a, b), c) == f.add(a, f.add(b, c))
    assert f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c))
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == f.zero
    if a != 0:
        assert f.mul(a, f.inv(a)) == f.one


@settings(max_examples=100, deadline=None)
@given(st.fractions(max_denominator=50))
def test_rationals_stay_canonical(x):
    y = Q.parse(Q.to_str(x))
    assert y == x
    assert y.denominator > 0 and math.gcd(y.numerator, y.denominator) == 1


def test_scalar_strings():
    assert GF7.to_str(-1) == "6"
    assert Q.to_str(Fraction(-2, 4)) == "-1/2"
    assert GF7.parse("1/2") == 4
    assert Q.parse("3") == 3


def test_binomial_examples():
    assert binomial(1, 1, GF3) == 2
    assert binomial(1, 2, GF3) == 0
    assert binomial(4, 4, GF3) == 1 == math.comb(8, 4) % 3


@pytest.mark.parametrize("p", [3, 5, 7])
def test_lucas_matches_factorials(p):
    f = Field(p)
    for r in range(31):
        for s in range(31 - r):
            assert binomial(r, s, f) == math.comb(r + s, r) % p


def test_binomial_over_q():
    assert binomial(5, 3, Q) == 56


def test_parse_field():
    assert parse_field("gf3") == GF3
    assert parse_field("gfp:11").char == 11
    assert parse_field("Q") == Q
    with pytest.raises(FieldError):
        parse_field("gf4")
    with pytest.raises(FieldError):
        parse_field("reals")


def test_array_reduction():
    a = GF3.array([[4, -1], [Fraction(1, 2), "5"]])
    assert a.dtype == np.int64
    assert a.tolist() == [[1, 2], [2, 2]]
    assert GF3.is_zero(GF3.array([3, 6, -9]))
