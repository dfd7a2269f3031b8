from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lfac.errors import ScalarDomainError
from lfac.scalar import Scalar
from lfac.splitrat import (SplitRational, ideal_generator, ring_mul, shift,
                           vanishing_order)

a, b = Scalar.symbol("a"), Scalar.symbol("b")
v = Scalar.v_power(1)


def f(*pairs, unit=1, xpower=0):
    return SplitRational(unit=unit, xpower=xpower, factors=pairs)


def test_merge_and_sort():
    g = SplitRational(factors=[(a, -1), (b, -1), (a, -1)])
    assert g.factors == ((a, -2), (b, -1))
    assert SplitRational(factors=[(a, 1), (a, -1)]).is_one


def test_zero_beta_dropped():
    assert SplitRational(factors=[(Scalar.zero, 3)]).is_one


def test_zero_unit_rejected():
    with pytest.raises(ScalarDomainError):
        SplitRational(unit=0)


def test_from_poles():
    g = SplitRational.from_poles([a, b * v ** -1])
    assert str(g) == "1/((1 - a*X)(1 - b*v^-1*X))"
    assert g.is_lfactor


def test_display_forms():
    assert str(f((a, -1))) == "1/(1 - a*X)"
    assert str(f((a, 2), (b, -1), unit=2, xpower=1)) == \
        "2*X(1 - a*X)^2/(1 - b*X)"
    assert str(SplitRational.one()) == "1"
    neg = f((-a * v ** -1, -1))
    assert str(neg) == "1/(1 - (-a*v^-1)*X)"


def test_mul_div_pow():
    g = f((a, -1))
    h = f((b, -2), unit=3)
    assert (g * h).factors == ((a, -1), (b, -2))
    assert (g / g).is_one
    assert (g ** -2).factors == ((a, 2),)
    assert (g * h).unit == Scalar.from_rational(3)


def test_shift():
    g = f((a, -1), unit=a, xpower=2)
    s = g.shift(Fraction(1, 2))
    assert s.factors == ((a * v ** -1, -1),)
    assert s.unit == a * v ** -2
    # L(s + 1/2) then L(s + 1/2) again is L(s + 1)
    assert g.shift(Fraction(1, 2)).shift(Fraction(1, 2)) == g.shift(1)
    assert g.shift(0) == g


def test_lfactor_predicates():
    assert f((a, -1), (b, -3)).is_lfactor
    assert not f((a, -1), unit=2).is_lfactor
    assert not f((a, -1), xpower=1).is_lfactor
    assert not f((a, 1)).is_lfactor
    # (1 - aX) generates a principal ideal without units
    assert not f((a, 1)).contains_units
    assert f((a, -1)).contains_units


def test_vanishing_order():
    g = f((a, 2), (b, -1))
    assert vanishing_order(g, a) == 2
    assert vanishing_order(g, b) == -1
    assert vanishing_order(g, a * b) == 0
    assert g.pole_roots() == (b,)
    assert g.zero_roots() == (a,)


def test_eq_coerces_units():
    assert SplitRational.one() == 1
    assert SplitRational(unit=a) == a
    assert hash(SplitRational(unit=a)) == hash(a)
    assert SplitRational(factors=[(a, 1)]) != a


def test_substitute():
    g = f((a, -1), unit=b)
    h = g.substitute({"a": 2, "b": 3})
    assert h.unit == 3
    assert h.factors == ((Scalar.from_rational(2), -1),)
    # a beta collapsing to zero just removes the factor
    assert f((a, -1)).substitute({"a": 0}).is_one


def test_ideal_generator_basics():
    g1 = f((a, -2), (b, 1))
    g2 = f((a, -1))
    gen = ideal_generator([g1, g2])
    # per root: min(-2, 0) and min(1, 0) over both inputs
    assert gen.generator.factors == ((a, -2),)
    assert gen.is_lfactor
    assert not ideal_generator([f((a, 1))]).is_lfactor
    with pytest.raises(ValueError):
        ideal_generator([])


def test_ideal_generator_duplicates_irrelevant():
    g = f((a, -1), (b, 2))
    assert ideal_generator([g, g, g]) == ideal_generator([g])


betas = st.sampled_from([a, b, a * v, b * v ** -2, a * b])
exps = st.integers(min_value=-3, max_value=3).filter(bool)


@st.composite
def splitrats(draw):
    pairs = [(draw(betas), draw(exps))
             for _ in range(draw(st.integers(0, 3)))]
    return SplitRational(unit=Scalar.from_rational(draw(st.integers(1, 4))),
                         xpower=draw(st.integers(0, 2)), factors=pairs)


@settings(max_examples=60, deadline=None)
@given(splitrats(), splitrats())
def test_group_laws(x, y):
    assert x * y == y * x
    assert (x * y) / y == x
    assert x * x.inverse() == SplitRational(unit=1)


@settings(max_examples=60, deadline=None)
@given(splitrats(), st.sampled_from([0, 1, Fraction(1, 2), Fraction(-3, 2)]),
       st.sampled_from([0, 1, Fraction(1, 2)]))
def test_shift_homomorphism(x, s, t):
    assert shift(shift(x, s), t) == shift(x, s + t)
    assert shift(x, s).xpower == x.xpower


@settings(max_examples=60, deadline=None)
@given(st.lists(splitrats(), min_size=1, max_size=4))
def test_generator_divides_inputs(fs):
    gen = ideal_generator(fs).generator
    for g in fs:
        for beta, _ in gen.factors:
            assert vanishing_order(gen, beta) <= vanishing_order(g, beta)


@settings(max_examples=40, deadline=None)
@given(st.lists(splitrats(), min_size=1, max_size=3))
def test_generator_idempotent(fs):
    gen = ideal_generator(fs).generator
    again = ideal_generator(fs + [gen]).generator
    assert again == gen


@settings(max_examples=60, deadline=None)
@given(splitrats(), splitrats())
def test_ring_mul_matches_operator(x, y):
    assert ring_mul(x, y) == x * y
