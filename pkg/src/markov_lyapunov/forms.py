"""Markov binary quadratic forms, Markov constants and the trace identities.

Forms are f(x, y) = A x^2 + B xy + C y^2 with integer coefficients.  The
Markov form of a triple (k, l, m) with m largest is

    f_m = m x^2 + (3m - 2p) xy + (q - 3p) y^2,   q = (p^2 + 1)/m,

where p is the least non-negative solution of l p = +-k (mod m).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .arith import Mat2, QuadraticSurd, spectral_radius
from .contfrac import ContinuedFraction, periodic_value
from .trees import MarkovTriple, cohn_matrix, find_markov, hurwitz_number, hurwitz_word, markov_triple_of_farey


@dataclass(frozen=True)
class BinaryForm:
    A: int
    B: int
    C: int

    @property
    def discriminant(self) -> int:
        return self.B * self.B - 4 * self.A * self.C

    def __call__(self, x, y):
        return self.A * x * x + self.B * x * y + self.C * y * y

    def substitute(self, M: Mat2) -> "BinaryForm":
        """f(ax + by, cx + dy)."""
        a, b, c, d = M.a, M.b, M.c, M.d
        A, B, C = self.A, self.B, self.C
        return BinaryForm(
            A * a * a + B * a * c + C * c * c,
            2 * A * a * b + B * (a * d + b * c) + 2 * C * c * d,
            A * b * b + B * b * d + C * d * d,
        )

    def __str__(self):
        return f"{self.A},{self.B},{self.C}"


@dataclass(frozen=True)
class MarkovForm:
    m: int
    p: int
    q: int
    form: BinaryForm


@dataclass(frozen=True)
class MarkovConstantValue:
    exact: QuadraticSurd

    def __float__(self):
        return float(self.exact)

    def __str__(self):
        return f"{self.exact} ~ {float(self):.15g}"


def markov_p(triple: MarkovTriple | Sequence[int]) -> int:
    """Least p >= 0 with l p = +-k (mod m) for the sorted triple k <= l <= m."""
    k, l, m = sorted(triple)
    if m == 1:
        return 0
    inv = pow(l, -1, m)
    return min(k * inv % m, -k * inv % m)


def markov_form(triple: MarkovTriple | Sequence[int]) -> MarkovForm:
    k, l, m = sorted(triple)
    if k * k + l * l + m * m != 3 * k * l * m:
        raise ValueError(f"{(k, l, m)} is not a Markov triple")
    p = markov_p((k, l, m))
    if (p * p + 1) % m:
        raise ValueError(f"p^2 + 1 = {p * p + 1} is not divisible by m = {m}")
    q = (p * p + 1) // m
    return MarkovForm(m, p, q, BinaryForm(m, 3 * m - 2 * p, q - 3 * p))


def form_minimum(f: BinaryForm, bound: int = 50) -> int:
    """min |f(x, y)| over the box 0 < max(|x|, |y|) <= bound; an upper bound on the true minimum."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    best = None
    for x in range(-bound, bound + 1):
        for y in range(0, bound + 1):
            if y == 0 and x <= 0:
                continue  # f(-v) = f(v): half the box suffices
            v = abs(f(x, y))
            if best is None or v < best:
                best = v
    return best


def form_from_matrix(M: Mat2) -> BinaryForm:
    """Q_M = c x^2 + (d - a) xy - b y^2, the form whose isometry group contains M."""
    if abs(M.trace) <= 2:
        raise ValueError(f"{M} is not hyperbolic")
    return BinaryForm(M.c, M.d - M.a, -M.b)


def _triple_at(m: int) -> tuple[MarkovTriple, Mat2]:
    f = find_markov(m)
    return markov_triple_of_farey(f), cohn_matrix(f)


def cohn_form_identity_check(m: int, triple: MarkovTriple | None = None, A: Mat2 | None = None) -> bool:
    """f_m(x, y) = Q_{A_m}(x + y, y) as polynomials."""
    if triple is None or A is None:
        triple, A = _triple_at(m)
    f = markov_form(triple).form
    shifted = form_from_matrix(A).substitute(Mat2(1, 1, 0, 1))
    return f == shifted


def aigner_matrix(m: int, p: int, q: int) -> Mat2:
    M = Mat2(m + p, 2 * m + p - q, m, 2 * m - p)
    if M.det != 1:
        raise ValueError(f"inconsistent (m, p, q) = {(m, p, q)}")
    return M


def markov_constant(cf: ContinuedFraction) -> MarkovConstantValue:
    """Exact mu(alpha) for an eventually periodic alpha.

    The liminf over N only sees the period: for each rotation
    (r1, ..., rn) the sum is r1 + [overline{r2..rn, r1}] + [overline{rn, ..., r1}],
    and mu is one over the largest of these.
    """
    if cf.is_rational:
        raise ValueError("the Markov constant is defined for irrational numbers")
    per = cf.canonical().period
    n = len(per)
    best = None
    for i in range(n):
        rot = per[i:] + per[:i]
        fwd = periodic_value(rot[1:] + rot[:1]) + rot[0]
        back = periodic_value(tuple(reversed(rot)))
        s = fwd + back
        if best is None or s > best:
            best = s
    return MarkovConstantValue(best.reciprocal())


def markov_bound(m: int) -> QuadraticSurd:
    """m / sqrt(9 m^2 - 4)."""
    D = 9 * m * m - 4
    return QuadraticSurd.make(0, m, D, D)


def markov_theorem_check(m: int) -> bool:
    f = find_markov(m)
    word = hurwitz_word(f)
    return markov_constant(ContinuedFraction((), word.period)).exact == markov_bound(m)


def eigenvector_formula_check(m: int) -> bool:
    """y_m = (5c - 2d + sqrt(9c^2 - 4)) / (2c) and (y_m - 1, 1) is the top eigenvector of A_m."""
    f = find_markov(m)
    A = cohn_matrix(f)
    y, _ = hurwitz_number(hurwitz_word(f))
    c, d = A.c, A.d
    formula = QuadraticSurd.make(5 * c - 2 * d, 1, 9 * c * c - 4, 2 * c)
    lam = spectral_radius(A)
    v = y - 1
    ok_first = A.a * v + A.b == lam * v
    ok_second = A.c * v + A.d == lam
    return y == formula and ok_first and ok_second


@dataclass(frozen=True)
class FrickeReport:
    sum_identity: bool
    cubic_identity: bool
    commutator_trace: int

    @property
    def ok(self) -> bool:
        return self.sum_identity and self.cubic_identity


def fricke_check(A: Mat2, B: Mat2) -> FrickeReport:
    """tr(AB) + tr(AB^-1) = trA trB and the cubic relation for (A, B, AB)."""
    if A.det != 1 or B.det != 1:
        raise ValueError("Fricke identities need determinant 1")
    C = A @ B
    tA, tB, tC = A.trace, B.trace, C.trace
    comm = (A @ B @ A.inverse() @ B.inverse()).trace
    return FrickeReport(
        tC + (A @ B.inverse()).trace == tA * tB,
        tA * tA + tB * tB + tC * tC == tA * tB * tC + comm + 2,
        comm,
    )


def mordell_residual(X: int, Y: int, Z: int, a: int) -> int:
    """X^2 + Y^2 + Z^2 - XYZ - 4 + 4a^6; zero on the surface."""
    return X * X + Y * Y + Z * Z - X * Y * Z - 4 + 4 * a ** 6


def cosh_identity_check(u: float, v: float, tol: float = 1e-12) -> bool:
    """x, y, z = (2/3) cosh(u, v, u + v) satisfy x^2 + y^2 + z^2 = 3xyz + 4/9."""
    if u < 0 or v < 0:
        raise ValueError("u and v must be non-negative")
    x, y, z = (2 / 3 * math.cosh(t) for t in (u, v, u + v))
    lhs = x * x + y * y + z * z
    rhs = 3 * x * y * z + 4 / 9
    return abs(lhs - rhs) <= tol * max(1.0, abs(rhs))


def hurwitz_bound_holds(cf: ContinuedFraction) -> bool:
    return markov_constant(cf).exact <= QuadraticSurd.make(0, 1, 5, 5)

