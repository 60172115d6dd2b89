import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from markov_lyapunov.contfrac import ContinuedFraction, cf_of_rational, digits_to_turns
from markov_lyapunov.minkowski import (
    BinaryWord, cohn_letters, cohn_matrix_from_word, conjunction_property_check, farey_node_word,
    mediant_mean_check, minkowski_path_from_turns, path_function, period_bits, question_mark,
    question_mark_rational, salem_value,
)
from markov_lyapunov.paths import TreePath
from markov_lyapunov.trees import enumerate_tree, cohn_matrix

C = ContinuedFraction.parse
periods = st.lists(st.integers(1, 6), min_size=1, max_size=3).map(lambda t: tuple(t) * 2 if len(t) % 2 else tuple(t))


def salem_truncated(cf: ContinuedFraction, terms: int) -> Fraction:
    # oracle: the alternating series summed term by term
    total, acc = Fraction(0), 0
    for k, a in enumerate(itertools.islice(cf.digits(), terms)):
        acc += a
        total += (-1) ** k * Fraction(2, 2 ** acc)
    return total


def stern_brocot_question_mark(x: Fraction) -> Fraction:
    # oracle: descend the Farey tree of [0, 1]; each step halves the dyadic interval
    qlo, qhi = Fraction(0), Fraction(1)
    ln, ld, hn, hd = 0, 1, 1, 1
    while True:
        m = Fraction(ln + hn, ld + hd)
        qm = (qlo + qhi) / 2
        if m == x:
            return qm
        if x < m:
            hn, hd, qhi = ln + hn, ld + hd, qm
        else:
            ln, ld, qlo = ln + hn, ld + hd, qm


def test_examples():
    assert question_mark(C("[2]")) == (Fraction(1, 2), BinaryWord("1"))
    v, w = question_mark(C("[;1,1]"))
    assert w.period == "10" and v == Fraction(2, 3)
    v, w = question_mark(C("[;2,2]"))
    assert w.period == "0110" and v == Fraction(2, 5)
    assert question_mark(C("[;2,2,1,1]"))[1].period == "011010"


def test_endpoints():
    assert question_mark_rational(0)[0] == 0
    assert question_mark_rational(1)[0] == 1


def test_path_function_examples():
    assert path_function(TreePath("", "LR"), 6) == BinaryWord("101010")
    assert path_function(TreePath("", "LR")).value() == Fraction(2, 3)
    assert path_function(TreePath("", "R")).value() == 0
    assert path_function(TreePath("", "L")).value() == 1


def test_mediant_examples():
    assert mediant_mean_check(0, 1)
    assert mediant_mean_check(0, Fraction(1, 2)) and question_mark_rational(Fraction(1, 3))[0] == Fraction(1, 4)
    assert mediant_mean_check(Fraction(1, 2), 1) and question_mark_rational(Fraction(2, 3))[0] == Fraction(3, 4)
    with pytest.raises(ValueError):
        mediant_mean_check(0, Fraction(2, 3))


def test_conjunction_examples():
    assert conjunction_property_check((2, 2), (1, 1))
    assert question_mark(C("[;2,2,1,1]"))[1] == BinaryWord("", "011010")
    assert conjunction_property_check((3, 1), (3, 1))
    assert conjunction_property_check((1, 2), (3, 1))


def test_binary_word_text_and_canonical():
    w = BinaryWord("01", "1010")
    assert str(w) == "0.01(1010)"
    assert w == BinaryWord("0110", "10") and w.value() == Fraction(5, 12)
    assert BinaryWord.parse("0.01(10)") == w
    assert BinaryWord("1", "0").canonical() == BinaryWord("1")


def test_adapters():
    turns = digits_to_turns(C("[;2,2,1,1]"))
    path = minkowski_path_from_turns(turns)
    assert path.period.replace("R", "0").replace("L", "1") == "011010"
    assert cohn_letters("011010") == "LRRLRL"
    assert cohn_matrix_from_word((2, 2, 1, 1)) == cohn_matrix("1/3")
    with pytest.raises(ValueError):
        minkowski_path_from_turns(TreePath("LR"))


def test_pi_equals_question_mark_depth_10():
    for x, w in farey_node_word(10):
        v, word = question_mark_rational(x)
        assert word == BinaryWord(w + "1")
        assert v == stern_brocot_question_mark(x)


def test_strictly_monotone_on_farey_depth_10():
    xs = sorted(x for x, _ in farey_node_word(10))
    vals = [question_mark_rational(x)[0] for x in xs]
    assert all(a < b for a, b in zip(vals, vals[1:]))


def test_markov_hurwitz_images_are_non_dyadic_rationals():
    for node in enumerate_tree("minkowski", 6):
        v = node.payload.value()
        d = v.denominator
        assert d & (d - 1) != 0  # not a power of two
        assert not node.payload.is_finite


@given(st.integers(2, 10 ** 4).flatmap(lambda q: st.tuples(st.integers(1, q - 1), st.just(q))).map(lambda t: Fraction(*t)))
def test_rational_gives_finite_word(x):
    v, w = question_mark_rational(x)
    assert w.is_finite
    assert v == salem_value(cf_of_rational(x))
    assert v.denominator & (v.denominator - 1) == 0


@given(st.lists(st.integers(1, 6), max_size=3).map(tuple), periods)
def test_periodic_value_matches_truncated_series(pre, per):
    cf = ContinuedFraction(pre, per)
    v, w = question_mark(cf)
    assert not w.is_finite
    assert abs(v - salem_truncated(cf, 400)) < Fraction(1, 2 ** 300)
    assert w.value() == v


@given(periods, periods)
def test_conjunction_property(a, b):
    assert conjunction_property_check(a, b)
    assert period_bits(a + b) == period_bits(a) + period_bits(b)


@given(periods)
def test_self_conjunction_doubles(a):
    assert period_bits(a + a) == period_bits(a) * 2
