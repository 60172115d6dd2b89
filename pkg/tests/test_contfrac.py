import itertools
import math
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from markov_lyapunov.arith import QuadraticSurd, continuant, word_matrix
from markov_lyapunov.contfrac import (
    ContinuedFraction, cf_of_rational, cf_of_surd, continuant_triple, convergents, digits_to_turns,
    evaluate_finite, even_period_view, expand, markov_rotation, periodic_value, reduce_to_unit, tails_equivalent,
)

C = ContinuedFraction.parse
periods = st.lists(st.integers(1, 6), min_size=1, max_size=5).map(tuple)
prefixes = st.lists(st.integers(1, 6), max_size=4).map(tuple)


def float_cf(x: float, n: int) -> list[int]:
    # oracle: textbook float recursion, reliable for the first handful of digits
    out = []
    for _ in range(n):
        y = 1 / x
        a = math.floor(y)
        out.append(a)
        x = y - a
    return out


def test_rational_examples():
    assert cf_of_rational(Fraction(1, 2)) == C("[2]")
    assert cf_of_rational(Fraction(2, 5)).preperiod == (2, 2)
    assert cf_of_rational(Fraction(1)).preperiod == (1,)
    with pytest.raises(ValueError):
        cf_of_rational(Fraction(3, 2))


def test_surd_examples():
    assert cf_of_surd(QuadraticSurd.make(-1, 1, 5, 2)) == C("[;1]")
    assert cf_of_surd(QuadraticSurd.make(-1, 1, 2, 1)) == C("[;2]")
    x5 = cf_of_surd(QuadraticSurd.make(-9, 1, 221, 14))
    assert x5.preperiod == () and x5.period == (2, 2, 1, 1)
    with pytest.raises(ValueError):
        cf_of_surd(QuadraticSurd.rational(Fraction(1, 3)))


def test_parse_spellings():
    assert C("[2, overline{1}]") == ContinuedFraction((2,), (1,))
    assert C("[5,3;2,2]") == ContinuedFraction((5, 3), (2,))
    assert str(C("[1,2;3,4]")) == "[1,2;3,4]"


def test_even_period_view():
    assert even_period_view(C("[;1]")).period == (1, 1)
    assert even_period_view(C("[;2,2]")).period == (2, 2)
    assert even_period_view(C("[;1,2]")).period == (1, 2)


def test_convergent_examples():
    assert convergents(C("[;1]"), 5)[-1].q == 8
    assert convergents(C("[2,2]"), 2)[-1].value == Fraction(2, 5)
    assert convergents(C("[7;3]"), 1)[0].q == 7
    assert len(convergents(C("[2,2]"), 9)) == 2


def test_tails_examples():
    assert tails_equivalent(C("[;1]"), C("[2;1]"))
    assert not tails_equivalent(C("[;1]"), C("[;2]"))
    assert tails_equivalent(C("[3;1,2]"), C("[3;1,2]"))
    assert tails_equivalent(C("[2]"), C("[3,4]"))
    assert not tails_equivalent(C("[2]"), C("[;2]"))


def test_turn_examples():
    assert digits_to_turns(C("[;2,2]")).period == "RRLL"
    assert digits_to_turns(C("[;1,1]")).period == "RL"
    assert digits_to_turns(C("[;1]")).period == "RL"
    assert digits_to_turns(C("[;4,4]")).period == "RRRRLLLL"
    assert digits_to_turns(C("[3;1,2]")).prefix == "RRR"


def test_markov_rotation_and_continuants():
    r = markov_rotation((2, 2, 1, 1))
    assert r == (2, 1, 1, 2)
    assert continuant_triple(r) == (5, 2, 1)
    assert markov_rotation((2, 2)) is None


def test_reduce_to_unit():
    y, steps = reduce_to_unit(QuadraticSurd.sqrt(2))
    assert y == QuadraticSurd.make(-1, 1, 2, 1) and steps == ["frac"]
    assert reduce_to_unit(Fraction(-7, 3)) == (Fraction(1, 3), ["abs", "frac"])
    assert reduce_to_unit(Fraction(4))[0] == 1


@given(st.fractions(min_value=Fraction(1, 10 ** 6), max_value=1))
def test_rational_round_trip(x):
    cf = cf_of_rational(x)
    assert evaluate_finite(cf.preperiod) == x
    assert len(cf.preperiod) == 1 or cf.preperiod[-1] >= 2


@given(prefixes, periods)
def test_surd_round_trip(pre, per):
    cf = ContinuedFraction(pre, per)
    x = cf.value()
    back = cf_of_surd(x)
    assert back == cf
    assert back.value() == x
    # independent float check of the first digits
    with mpmath.workprec(200):
        xf = x.to_mpf(200)
        digits = []
        for _ in range(8):
            y = 1 / xf
            a = int(mpmath.floor(y))
            digits.append(a)
            xf = y - a
    assert digits == list(itertools.islice(cf.digits(), 8))


@given(st.lists(st.integers(1, 50), min_size=1, max_size=200))
def test_convergent_denominators_are_continuants(ds):
    cs = convergents(ContinuedFraction(tuple(ds)), len(ds))
    for k, c in enumerate(cs, start=1):
        assert c.q == continuant(ds[:k])
        assert math.gcd(c.p, c.q) == 1
    assert all(a.q < b.q for a, b in zip(cs[1:], cs[2:]))


@given(prefixes, periods)
def test_convergents_approximate(pre, per):
    cf = ContinuedFraction(pre, per)
    x = cf.value()
    for c in convergents(cf, 12):
        err = x - c.value
        assert abs(float(err)) < 1 / c.q ** 2


@given(periods)
def test_turn_word_length_is_digit_sum(per):
    cf = ContinuedFraction((), per)
    even = even_period_view(cf).period
    assert len(digits_to_turns(cf).period) == sum(even)


@given(periods)
def test_periodic_value_is_fixed_point(per):
    x = periodic_value(per)
    y = x
    for a in reversed(per):
        y = (y + a).reciprocal()
    assert y == x


@given(st.lists(st.tuples(prefixes, periods), min_size=3, max_size=3))
def test_tails_is_equivalence(items):
    cfs = [ContinuedFraction(p, q) for p, q in items]
    a, b, c = cfs
    assert tails_equivalent(a, a)
    assert tails_equivalent(a, b) == tails_equivalent(b, a)
    if tails_equivalent(a, b) and tails_equivalent(b, c):
        assert tails_equivalent(a, c)


@given(prefixes, periods, st.integers(0, 5))
def test_tails_detects_shifted_copies(pre, per, k):
    rot = per[k % len(per):] + per[:k % len(per)]
    assert tails_equivalent(ContinuedFraction(pre, per), ContinuedFraction((), rot))


@given(periods)
def test_expand_inverts_value(per):
    assert expand(periodic_value(per)) == ContinuedFraction((), per)
