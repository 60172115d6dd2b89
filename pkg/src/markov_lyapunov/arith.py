"""Exact arithmetic: 2x2 integer matrices, quadratic surds, continuants.

Everything here is exact big-integer arithmetic. Floating point only appears
in :func:`surd_log` and :func:`log_spectral_radius`, which go through mpmath
or integer logarithms so that huge entries never get squeezed into a double.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

# primes used to strip square factors from a radicand; anything left over is
# only checked for being a perfect square (no full factorisation)
_SMALL_PRIMES = [p for p in range(2, 200) if all(p % k for k in range(2, int(p ** 0.5) + 1))]


@dataclass(frozen=True)
class Mat2:
    """Row-major 2x2 integer matrix [[a, b], [c, d]] with determinant +-1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c not in (1, -1):
            raise ValueError(f"determinant of {self} is not +-1")

    def __matmul__(self, other: "Mat2") -> "Mat2":
        return mat_mul(self, other)

    def __pow__(self, n: int) -> "Mat2":
        if n < 0:
            return self.inverse() ** (-n)
        result, base = IDENTITY, self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def __iter__(self):
        yield from (self.a, self.b, self.c, self.d)

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def transpose(self) -> "Mat2":
        return Mat2(self.a, self.c, self.b, self.d)

    def inverse(self) -> "Mat2":
        s = self.det
        return Mat2(s * self.d, -s * self.b, -s * self.c, s * self.a)

    def swap_conjugate(self) -> "Mat2":
        """S^-1 A S with S = [[0,1],[1,0]]; swaps the roles of L and R."""
        return Mat2(self.d, self.c, self.b, self.a)

    def is_sl2n(self) -> bool:
        return self.det == 1 and min(self.a, self.b, self.c, self.d) >= 0

    def apply(self, x: int, y: int) -> tuple[int, int]:
        return self.a * x + self.b * y, self.c * x + self.d * y

    def columns(self) -> tuple[tuple[int, int], tuple[int, int]]:
        """The two column vectors (a, c) and (b, d), read as fractions a/c, b/d."""
        return (self.a, self.c), (self.b, self.d)


def mat_mul(A: Mat2, B: Mat2) -> Mat2:
    return Mat2(
        A.a * B.a + A.b * B.c,
        A.a * B.b + A.b * B.d,
        A.c * B.a + A.d * B.c,
        A.c * B.b + A.d * B.d,
    )


IDENTITY = Mat2(1, 0, 0, 1)
L = Mat2(1, 1, 0, 1)
R = Mat2(1, 0, 1, 1)
S = Mat2(0, 1, 1, 0)

LETTERS = {"L": L, "R": R}


def word_matrix(word: Iterable[str]) -> Mat2:
    """Product X1 X2 ... Xn of the letter matrices of a word over {L, R}."""
    a, b, c, d = 1, 0, 0, 1
    for letter in word:
        if letter == "R":
            a, c = a + b, c + d
        elif letter == "L":
            b, d = a + b, c + d
        else:
            raise ValueError(f"not a turn letter: {letter!r}")
    return Mat2(a, b, c, d)


def continuant(seq: Sequence[int]) -> int:
    """K(s1..sn): K() = 1, K(s1) = s1, K(..sn) = sn K(..s_{n-1}) + K(..s_{n-2})."""
    prev, cur = 0, 1
    for s in seq:
        if s < 1:
            raise ValueError(f"continuant entries must be positive, got {s}")
        prev, cur = cur, s * cur + prev
    return cur


def _split_square(d: int) -> tuple[int, int]:
    """Write d = k^2 * r, pulling squares of small primes (and a square cofactor) out."""
    k = 1
    for p in _SMALL_PRIMES:
        pp = p * p
        if pp > d:
            break
        while d % pp == 0:
            d //= pp
            k *= p
    s = math.isqrt(d)
    if s * s == d:
        return k * s, 1
    return k, d


def _sign_in_field(p: int, b: int, d: int) -> int:
    """Exact sign of p + b*sqrt(d) for d >= 0."""
    sp = (p > 0) - (p < 0)
    sb = (b > 0) - (b < 0)
    if sb == 0 or d == 0:
        return sp
    if sp == 0 or sp == sb:
        return sb
    diff = p * p - b * b * d
    return sp if diff > 0 else (-sp if diff < 0 else 0)


@dataclass(frozen=True, eq=False)
class QuadraticSurd:
    """The real number (p + b*sqrt(d)) / q, stored in lowest terms.

    ``q > 0``; ``d`` is either 0 (and then ``b == 0``, a rational) or a
    non-square integer > 1 whose small square factors have been folded
    into ``b``.  Equality is numerical and needs no factorisation.
    """

    p: int
    b: int
    d: int
    q: int

    @classmethod
    def make(cls, p: int, b: int = 0, d: int = 0, q: int = 1) -> "QuadraticSurd":
        if q == 0:
            raise ZeroDivisionError("surd with zero denominator")
        if d < 0:
            raise ValueError("negative radicand")
        if b == 0 or d == 0:
            b, d = 0, 0
        else:
            k, d = _split_square(d)
            b *= k
            if d == 1:
                p, b, d = p + b, 0, 0
        if q < 0:
            p, b, q = -p, -b, -q
        g = math.gcd(math.gcd(p, b), q)
        return cls(p // g, b // g, d, q // g)

    @classmethod
    def rational(cls, x) -> "QuadraticSurd":
        x = Fraction(x)
        return cls.make(x.numerator, 0, 0, x.denominator)

    @classmethod
    def sqrt(cls, n: int) -> "QuadraticSurd":
        return cls.make(0, 1, n, 1)

    # structure ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.p, self.q)

    def conjugate(self) -> "QuadraticSurd":
        return QuadraticSurd(self.p, -self.b, self.d, self.q)

    def norm(self) -> Fraction:
        return Fraction(self.p * self.p - self.b * self.b * self.d, self.q * self.q)

    def sign(self) -> int:
        return _sign_in_field(self.p, self.b, self.d)

    def floor(self) -> int:
        if self.b == 0:
            return self.p // self.q
        r = math.isqrt(self.b * self.b * self.d)
        n = self.p + (r if self.b > 0 else -r - 1)
        return n // self.q

    def _key(self):
        return Fraction(self.p, self.q), Fraction(self.b * self.b * self.d, self.q * self.q), self.b > 0

    # field alignment ---------------------------------------------------

    def _coerce(self, other) -> "QuadraticSurd":
        if isinstance(other, QuadraticSurd):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticSurd.rational(other)
        return NotImplemented

    def _common(self, other: "QuadraticSurd"):
        """Return (d, (p1, b1, q1), (p2, b2, q2)) with both numbers over sqrt(d)."""
        if other.b == 0 or self.d == other.d:
            return self.d, (self.p, self.b, self.q), (other.p, other.b, other.q)
        if self.b == 0:
            return other.d, (self.p, 0, self.q), (other.p, other.b, other.q)
        prod = self.d * other.d
        s = math.isqrt(prod)
        if s * s != prod:
            raise ValueError(f"{self} and {other} lie in different quadratic fields")
        # sqrt(d2) = s * sqrt(d1) / d1
        return self.d, (self.p, self.b, self.q), (other.p * self.d, other.b * s, other.q * self.d)

    # arithmetic --------------------------------------------------------

    def __neg__(self):
        return QuadraticSurd(-self.p, -self.b, self.d, self.q)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d, (p1, b1, q1), (p2, b2, q2) = self._common(other)
        return QuadraticSurd.make(p1 * q2 + p2 * q1, b1 * q2 + b2 * q1, d, q1 * q2)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        d, (p1, b1, q1), (p2, b2, q2) = self._common(other)
        return QuadraticSurd.make(p1 * p2 + b1 * b2 * d, p1 * b2 + p2 * b1, d, q1 * q2)

    __rmul__ = __mul__

    def reciprocal(self) -> "QuadraticSurd":
        n = self.p * self.p - self.b * self.b * self.d
        if n == 0:
            raise ZeroDivisionError("reciprocal of zero")
        return QuadraticSurd.make(self.q * self.p, -self.q * self.b, self.d, n)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.reciprocal()

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    # comparison --------------------------------------------------------

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    def compare(self, other) -> int:
        """Exact sign of self - other, also across different quadratic fields."""
        other = self._coerce(other)
        try:
            return (self - other).sign()
        except ValueError:
            pass
        # sign of (r + u sqrt(d1)) + v sqrt(d2) with unrelated d1, d2
        r = self.p * other.q - other.p * self.q
        u = self.b * other.q
        v = -other.b * self.q
        sa = _sign_in_field(r, u, self.d)
        sc = (v > 0) - (v < 0)
        if sa == sc:
            return sa
        # |A|^2 vs |C|^2 where A^2 = (r^2 + u^2 d1) + 2ru sqrt(d1)
        cmp = _sign_in_field(r * r + u * u * self.d - v * v * other.d, 2 * r * u, self.d)
        return sa if cmp > 0 else sc

    def __lt__(self, other):
        return self.compare(other) < 0

    def __le__(self, other):
        return self.compare(other) <= 0

    def __gt__(self, other):
        return self.compare(other) > 0

    def __ge__(self, other):
        return self.compare(other) >= 0

    # numerics ----------------------------------------------------------

    def to_mpf(self, prec: int = 128):
        with mpmath.workprec(prec):
            if self.b == 0:
                return mpmath.mpf(self.p) / self.q
            p, b, d = self.p, self.b, self.d
            if p == 0 or (p > 0) == (b > 0):
                num = mpmath.mpf(p) + mpmath.mpf(b) * mpmath.sqrt(d)
            else:
                # opposite signs cancel; divide the norm by the conjugate instead
                num = mpmath.mpf(p * p - b * b * d) / (mpmath.mpf(p) - mpmath.mpf(b) * mpmath.sqrt(d))
            return num / self.q

    def __float__(self):
        return float(self.to_mpf())

    def __repr__(self):
        return f"QuadraticSurd({self})"

    def __str__(self):
        if self.b == 0:
            return f"{self.p}/{self.q}" if self.q != 1 else str(self.p)
        sign = "+" if self.b > 0 else "-"
        return f"({self.p}{sign}{abs(self.b)}√{self.d})/{self.q}"


def spectral_radius(A: Mat2) -> QuadraticSurd:
    """Largest eigenvalue (t + sqrt(t^2 - 4))/2 of a det-1 matrix with trace t >= 2."""
    if A.det != 1:
        raise ValueError("spectral_radius expects determinant +1")
    t = A.trace
    if t < 2:
        raise ValueError(f"trace {t} < 2: not hyperbolic or parabolic")
    if t == 2:
        return QuadraticSurd.rational(1)
    return QuadraticSurd.make(t, 1, t * t - 4, 2)


def surd_log(x: QuadraticSurd) -> float:
    """Natural log of a positive surd, with relative error well below 1e-12."""
    if not isinstance(x, QuadraticSurd):
        x = QuadraticSurd.rational(x)
    if x.sign() <= 0:
        raise ValueError(f"log of non-positive number {x}")
    if x == 1:
        return 0.0
    with mpmath.workprec(160):
        return float(mpmath.log(x.to_mpf(160)))


def log_spectral_radius(trace: int) -> float:
    """ln((t + sqrt(t^2-4))/2) straight from an integer trace t >= 2.

    Used inside long estimator loops where building a canonical surd per step
    would be wasteful. ``math.log`` accepts arbitrarily large ints.
    """
    if trace < 2:
        raise ValueError(f"trace {trace} < 2")
    if trace == 2:
        return 0.0
    if trace < 1 << 40:
        return math.acosh(trace / 2)
    # ln t + ln((1 + sqrt(1 - 4/t^2))/2); the correction is below 1e-24 here
    return math.log(trace)
