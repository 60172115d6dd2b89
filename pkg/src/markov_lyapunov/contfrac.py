"""Continued fractions [a1, a2, ...] = 1/(a1 + 1/(a2 + ...)) with all a_i >= 1.

Rationals in (0, 1] have finite expansions; quadratic irrationals in (0, 1)
have eventually periodic ones.  The text form used on the command line is
``[a1,a2;b1,b2]`` with the period after the semicolon.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .arith import QuadraticSurd, continuant
from .paths import TreePath


def primitive_period(period: Sequence[int]) -> tuple[int, ...]:
    period = tuple(period)
    n = len(period)
    for k in range(1, n + 1):
        if n % k == 0 and period[:k] * (n // k) == period:
            return period[:k]
    return period


def min_rotation(period: Sequence[int]) -> tuple[int, ...]:
    period = tuple(period)
    return min(period[i:] + period[:i] for i in range(len(period))) if period else ()


@dataclass(frozen=True, eq=False)
class ContinuedFraction:
    preperiod: tuple[int, ...] = ()
    period: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(int(a) for a in self.preperiod))
        object.__setattr__(self, "period", tuple(int(b) for b in self.period))
        if not self.preperiod and not self.period:
            raise ValueError("empty continued fraction")
        if any(a < 1 for a in self.preperiod + self.period):
            raise ValueError("partial quotients must be >= 1")

    @property
    def is_rational(self) -> bool:
        return not self.period

    def canonical(self) -> "ContinuedFraction":
        """Shortest preperiod and primitive period; finite ones end in a quotient >= 2."""
        if self.is_rational:
            pre = list(self.preperiod)
            if len(pre) > 1 and pre[-1] == 1:
                pre.pop()
                pre[-1] += 1
            return ContinuedFraction(tuple(pre))
        pre = list(self.preperiod)
        per = primitive_period(self.period)
        while pre and pre[-1] == per[-1]:
            pre.pop()
            per = per[-1:] + per[:-1]
        return ContinuedFraction(tuple(pre), per)

    def _ident(self):
        c = self.canonical()
        return c.preperiod, c.period

    def __eq__(self, other):
        if not isinstance(other, ContinuedFraction):
            return NotImplemented
        return self._ident() == other._ident()

    def __hash__(self):
        return hash(self._ident())

    def digits(self) -> Iterator[int]:
        yield from self.preperiod
        if self.period:
            yield from itertools.cycle(self.period)

    def value(self):
        """Exact value: a Fraction for finite expansions, a QuadraticSurd otherwise."""
        if self.is_rational:
            return evaluate_finite(self.preperiod)
        tail = periodic_value(self.period)
        return _apply_prefix(self.preperiod, tail)

    def __str__(self):
        pre = ",".join(map(str, self.preperiod))
        if self.is_rational:
            return f"[{pre}]"
        return f"[{pre};{','.join(map(str, self.period))}]"

    @classmethod
    def parse(cls, text: str) -> "ContinuedFraction":
        """Accept ``[1,2;3,4]``, ``[;1]`` and the ``[2, overline{1}]`` spelling."""
        s = text.strip().replace(" ", "")
        if not (s.startswith("[") and s.endswith("]")):
            raise ValueError(f"not a continued fraction: {text!r}")
        body = s[1:-1]
        m = re.fullmatch(r"((?:\d+,)*)overline\{([\d,]+)\}", body)
        if m:
            pre = [int(a) for a in m.group(1).split(",") if a]
            return cls(tuple(pre), tuple(int(b) for b in m.group(2).split(",")))
        pre_txt, _, per_txt = body.partition(";")
        pre = tuple(int(a) for a in pre_txt.split(",") if a)
        per = tuple(int(b) for b in per_txt.split(",") if b)
        return cls(pre, per)


@dataclass(frozen=True)
class Convergent:
    index: int
    p: int
    q: int

    @property
    def value(self) -> Fraction:
        return Fraction(self.p, self.q)


def evaluate_finite(digits: Sequence[int]) -> Fraction:
    x = Fraction(0)
    for a in reversed(digits):
        x = 1 / (a + x)
    return x


def _pq(digits: Sequence[int]) -> tuple[int, int, int, int]:
    """(p_{n-1}, q_{n-1}, p_n, q_n) for the convergents of [a1..an]."""
    p0, q0, p1, q1 = 1, 0, 0, 1
    for a in digits:
        p0, q0, p1, q1 = p1, q1, a * p1 + p0, a * q1 + q0
    return p0, q0, p1, q1


def periodic_value(period: Sequence[int]) -> QuadraticSurd:
    """The root in (0,1) of x = [b1, ..., bn + x]."""
    pm, qm, pn, qn = _pq(period)
    # x (qn + x qm) = pn + x pm  ->  qm x^2 + (qn - pm) x - pn = 0
    B = qn - pm
    return QuadraticSurd.make(-B, 1, B * B + 4 * qm * pn, 2 * qm)


def _apply_prefix(prefix: Sequence[int], tail: QuadraticSurd) -> QuadraticSurd:
    pm, qm, pn, qn = _pq(prefix)
    return (tail * pm + pn) / (tail * qm + qn)


def cf_of_rational(x) -> ContinuedFraction:
    x = Fraction(x)
    if not 0 < x <= 1:
        raise ValueError(f"{x} is outside (0, 1]")
    digits = []
    p, q = x.numerator, x.denominator
    while p:
        a, r = divmod(q, p)
        digits.append(a)
        q, p = p, r
    return ContinuedFraction(tuple(digits))


def cf_of_surd(x: QuadraticSurd) -> ContinuedFraction:
    """Eventually periodic expansion of a quadratic irrational in (0, 1)."""
    if x.is_rational:
        raise ValueError("rational input; use cf_of_rational")
    if not (x.sign() > 0 and x < 1):
        raise ValueError(f"{x} is outside (0, 1)")
    seen = {x: 0}
    digits = []
    while True:
        y = x.reciprocal()
        a = y.floor()
        digits.append(a)
        x = y - a
        if x in seen:
            i = seen[x]
            return ContinuedFraction(tuple(digits[:i]), tuple(digits[i:])).canonical()
        seen[x] = len(digits)


def reduce_to_unit(x):
    """Map a real number to its representative in (0, 1].

    Returns ``(y, steps)`` where ``steps`` lists the moves applied: ``abs``
    and ``frac`` (drop the integer part).  Neither changes the Lyapunov
    exponent.  Positive integers reduce to 1.
    """
    steps = []
    if x < 0:
        x, steps = -x, ["abs"]
    if x == 0:
        return x, steps
    n = x.floor() if isinstance(x, QuadraticSurd) else (Fraction(x).numerator // Fraction(x).denominator)
    if x > 1:
        if x == n:
            return (QuadraticSurd.rational(1) if isinstance(x, QuadraticSurd) else Fraction(1)), steps + ["frac"]
        x = x - n
        steps.append("frac")
    return x, steps


def expand(x) -> ContinuedFraction:
    """Continued fraction of a Fraction or QuadraticSurd in (0, 1]."""
    if isinstance(x, QuadraticSurd):
        return cf_of_rational(x.as_fraction()) if x.is_rational else cf_of_surd(x)
    return cf_of_rational(x)


def even_period_view(cf: ContinuedFraction) -> ContinuedFraction:
    if not cf.period:
        raise ValueError("finite continued fraction has no period")
    per = cf.period if len(cf.period) % 2 == 0 else cf.period * 2
    return ContinuedFraction(cf.preperiod, per)


def convergents(cf: ContinuedFraction, n: int) -> list[Convergent]:
    if n < 1:
        raise ValueError("need n >= 1")
    out = []
    p0, q0, p1, q1 = 1, 0, 0, 1
    for k, a in enumerate(itertools.islice(cf.digits(), n), start=1):
        p0, q0, p1, q1 = p1, q1, a * p1 + p0, a * q1 + q0
        out.append(Convergent(k, p1, q1))
    return out


def tails_equivalent(x: ContinuedFraction, y: ContinuedFraction) -> bool:
    """Whether the expansions eventually coincide (GL2(Z)-equivalence).

    All rationals form one class, so two finite expansions are equivalent and
    a finite one is never equivalent to an infinite one.
    """
    if x.is_rational or y.is_rational:
        return x.is_rational and y.is_rational
    return min_rotation(primitive_period(x.period)) == min_rotation(primitive_period(y.period))


def digits_to_turns(cf: ContinuedFraction) -> TreePath:
    """b1 right turns, b2 left turns, b3 right turns, ...

    The period is doubled first when its length is odd so that the repeating
    block of turns is well defined.
    """
    if cf.period:
        cf = even_period_view(cf)
    letters = []
    for i, a in enumerate(cf.preperiod):
        letters.append(("R" if i % 2 == 0 else "L") * a)
    start = len(cf.preperiod)
    per = [("R" if (start + j) % 2 == 0 else "L") * b for j, b in enumerate(cf.period)]
    return TreePath("".join(letters), "".join(per))


def markov_rotation(period: Sequence[int]) -> tuple[int, ...] | None:
    """Rotation of a Markov period with a1 = a_2n = 2, a_2n-2 = a_2n-1 = 1 and a
    palindromic middle a2..a_2n-3; ``None`` if there is none (e.g. the period (2,2))."""
    period = tuple(period)
    n = len(period)
    for i in range(n):
        r = period[i:] + period[:i]
        if n >= 4 and r[0] == 2 and r[-1] == 2 and r[-2] == 1 and r[-3] == 1:
            mid = r[1:-3]
            if mid == mid[::-1]:
                return r
    return None


def continuant_triple(rotation: Sequence[int]) -> tuple[int, int, int]:
    """(K(a1..a_2n-1), K(a2..a_2n-1), K(a2..a_2n-3)) of a Markov rotation."""
    r = tuple(rotation)
    return continuant(r[:-1]), continuant(r[1:-1]), continuant(r[1:-3])
