"""Minkowski's question-mark function, exactly.

For x = [a1, a2, ...] Salem's alternating series

    ?(x) = 2 * sum_k (-1)^(k+1) 2^-(a1 + ... + ak)

has the binary expansion 0.0^(a1-1) 1^a2 0^a3 1^a4 ...  A finite expansion
gives a dyadic rational; an eventually periodic one gives a rational whose
binary word is eventually periodic, summed here in closed form.

Bit convention: 0 is a right turn (towards smaller fractions) and 1 a left
turn, so the word of ?(x) is the turn word of x on the Farey tree of [0, 1].
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import Mat2, R, word_matrix
from .contfrac import ContinuedFraction, cf_of_rational
from .paths import TreePath, from_bits, to_bits


def _primitive(s: str) -> str:
    n = len(s)
    for k in range(1, n + 1):
        if n % k == 0 and s[:k] * (n // k) == s:
            return s[:k]
    return s


@dataclass(frozen=True, eq=False)
class BinaryWord:
    """0.pre(period): ``pre`` then ``period`` repeated; an empty period is a finite (dyadic) word."""

    pre: str = ""
    period: str = ""

    def __post_init__(self):
        if set(self.pre + self.period) - {"0", "1"}:
            raise ValueError(f"binary words use 0 and 1 only: {self.pre!r} {self.period!r}")

    @property
    def is_finite(self) -> bool:
        return not self.period

    def canonical(self) -> "BinaryWord":
        if not self.period:
            return BinaryWord(self.pre.rstrip("0"))
        per = _primitive(self.period)
        pre = self.pre
        while pre and pre[-1] == per[-1]:
            pre, per = pre[:-1], per[-1] + per[:-1]
        if per == "0":
            return BinaryWord(pre.rstrip("0"))
        return BinaryWord(pre, per)

    def value(self) -> Fraction:
        k = len(self.pre)
        head = int(self.pre, 2) if self.pre else 0
        if not self.period:
            return Fraction(head, 2 ** k)
        n = len(self.period)
        return (head + Fraction(int(self.period, 2), 2 ** n - 1)) / 2 ** k

    def __eq__(self, other):
        if not isinstance(other, BinaryWord):
            return NotImplemented
        a, b = self.canonical(), other.canonical()
        return (a.pre, a.period) == (b.pre, b.period)

    def __hash__(self):
        c = self.canonical()
        return hash((c.pre, c.period))

    def __str__(self):
        return f"0.{self.pre}({self.period})" if self.period else f"0.{self.pre}"

    @classmethod
    def parse(cls, text: str) -> "BinaryWord":
        s = text.strip()
        if s.startswith("0."):
            s = s[2:]
        if "(" in s:
            pre, per = s.split("(", 1)
            return cls(pre, per.rstrip(")"))
        return cls(s)


def _blocks(digits: Sequence[int], start: int = 0) -> str:
    """a1 copies of the start symbol, a2 of the other, alternating by global index."""
    return "".join(("0" if (start + i) % 2 == 0 else "1") * a for i, a in enumerate(digits))


def salem_value(cf: ContinuedFraction) -> Fraction:
    """The alternating series summed in closed form (geometric over a doubled period)."""
    pre, per = cf.preperiod, cf.period
    total, sign, acc = Fraction(0), 1, 0
    for a in pre:
        acc += a
        total += sign * Fraction(2, 2 ** acc)
        sign = -sign
    if not per:
        return total
    if len(per) % 2:
        per = per * 2
    one_period, s = Fraction(0), 0
    for a in per:
        s += a
        one_period += sign * Fraction(2, 2 ** (acc + s))
        sign = -sign
    return total + one_period / (1 - Fraction(1, 2 ** s))


def question_mark(cf: ContinuedFraction) -> tuple[Fraction, BinaryWord]:
    """Exact ?(x) and its binary word for a finite or eventually periodic expansion."""
    if cf.is_rational:
        c = cf.canonical()
        digits = list(c.preperiod)
        # turn word of the Farey node (drop the first right turn, last block one short) then a 1
        digits[-1] -= 1
        word = BinaryWord(_blocks(digits)[1:] + "1")
    else:
        per = cf.period if len(cf.period) % 2 == 0 else cf.period * 2
        head = _blocks(cf.preperiod)
        body = _blocks(per, len(cf.preperiod))
        if head:
            word = BinaryWord(head[1:], body)
        else:
            word = BinaryWord("", body[1:] + body[0])
    value = word.value()
    assert value == salem_value(cf), "binary word and Salem series disagree"
    return value, word


def question_mark_periodic(period: Sequence[int]) -> tuple[Fraction, BinaryWord]:
    return question_mark(ContinuedFraction((), tuple(period)))


def question_mark_rational(x) -> tuple[Fraction, BinaryWord]:
    """?(x) for rational x in [0, 1]; ?(0) = 0 and ?(1) = 1."""
    x = Fraction(x)
    if x == 0:
        return Fraction(0), BinaryWord()
    if x == 1:
        return Fraction(1), BinaryWord("", "1")
    if not 0 < x < 1:
        raise ValueError(f"{x} is outside [0, 1]")
    return question_mark(cf_of_rational(x))


def period_bits(period: Sequence[int]) -> str:
    """Repeating block of the binary word of ?([overline{period}])."""
    return question_mark_periodic(period)[1].period


def path_function(path: TreePath, n: int | None = None) -> BinaryWord:
    """Binary word of a turn path (right -> 0, left -> 1).

    With ``n`` the first n digits are returned as a finite word; without it the
    path must be eventually periodic and the exact word is returned.
    """
    if n is not None:
        return BinaryWord(to_bits(path.take(n)))
    if path.is_finite:
        raise ValueError("a finite path needs no n; pass n=len(path) for its digits")
    return BinaryWord(to_bits(path.prefix), to_bits(path.period))


# -- adapters between the digit conventions ---------------------------------


def minkowski_path_from_turns(turns: TreePath) -> TreePath:
    """Turn word of x in (0, 1) from the identity edge -> path below the node 1/2.

    The matrix word R^a1 L^a2 ... always starts with R (the step from the
    whole tree into [0, 1]); the binary word of ?(x) is what remains.
    """
    first = turns.take(1)
    if first != "R":
        raise ValueError("the turn word of a number in (0, 1) starts with R")
    if turns.prefix:
        return TreePath(turns.prefix[1:], turns.period)
    return TreePath("", turns.period[1:] + turns.period[0])


def cohn_letters(bits: str) -> str:
    """Binary digits of ? read as Cohn letters: 0 -> L, 1 -> R (the mirrored alphabet)."""
    return bits.replace("0", "L").replace("1", "R")


def cohn_matrix_from_word(period: Sequence[int]) -> Mat2:
    """Product of the Cohn letters of the repeating block of ?([overline{period}])."""
    return word_matrix(cohn_letters(period_bits(period)))


# -- identities --------------------------------------------------------------


def mediant_mean_check(f1, f2) -> bool:
    """?(mediant) is the mean of ? at two Farey neighbours."""
    f1, f2 = Fraction(f1), Fraction(f2)
    a, c, b, d = f1.numerator, f1.denominator, f2.numerator, f2.denominator
    if abs(a * d - b * c) != 1:
        raise ValueError(f"{f1} and {f2} are not Farey neighbours")
    med = Fraction(a + b, c + d)
    return question_mark_rational(med)[0] == (question_mark_rational(f1)[0] + question_mark_rational(f2)[0]) / 2


def conjunction_property_check(a: Sequence[int], b: Sequence[int]) -> bool:
    """Word of [overline{ab}] is the word of [overline{a}] followed by that of [overline{b}]."""
    a, b = tuple(a), tuple(b)
    if len(a) % 2 or len(b) % 2:
        raise ValueError("periods must have even length")
    wa, wb = period_bits(a), period_bits(b)
    val, word = question_mark_periodic(a + b)
    return word.period == wa + wb and val == BinaryWord("", wa + wb).value()


def farey_node_word(depth: int):
    """(x, path bits) for every node of the Farey tree of [0, 1] down to ``depth``.

    The root is 1/2; the node at bit word w is the mediant of the columns of R W.
    """
    level = [""]
    for k in range(depth + 1):
        for w in level:
            M = R @ word_matrix(from_bits(w))
            yield Fraction(M.a + M.b, M.c + M.d), w
        if k < depth:
            level = [w + b for w in level for b in "01"]
