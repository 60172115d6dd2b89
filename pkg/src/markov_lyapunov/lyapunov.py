"""Lyapunov exponent of paths on the Farey tree.

Along a path X1 X2 ... (letters L, R) the exponent is the growth rate of the
spectral radius of A_n = X1 ... Xn.  For a quadratic irrational the rate is
exact: ln lambda(B) / s where B = R^b1 L^b2 ... runs over an even-length period
and s = b1 + ... + b2n.  On Markov-Hurwitz numbers this reduces to
arcosh(3m/2) / (2q).
"""
from __future__ import annotations

import itertools
import math
import random
import statistics
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import IDENTITY, LETTERS, Mat2, QuadraticSurd, log_spectral_radius, spectral_radius, surd_log
from .contfrac import ContinuedFraction, even_period_view
from .paths import TreePath
from .trees import FareyFraction, farey_points, markov_of_farey, trace_of_farey

LN_PHI = math.log((1 + math.sqrt(5)) / 2)
LEVY = math.pi ** 2 / (12 * math.log(2))


def _log_int(n: int) -> float:
    return math.log(n) if n > 0 else float("-inf")


@dataclass(frozen=True)
class LyapunovEstimate:
    """ln rho(A_n)/n after n letters, with the Euclid variant ln w_n/n (w_n = c + d of A_n)."""

    n: int
    value: float
    euclid_value: float
    series: tuple[tuple[int, float], ...] = ()
    tail_max: float = 0.0


@dataclass(frozen=True)
class ExactLyapunov:
    lam: QuadraticSurd
    s: int
    value: float
    rational: bool = False


def _letters(path) -> Iterable[str]:
    if isinstance(path, TreePath):
        return path.letters()
    return iter(path)


def estimate_from_path(path, n: int, sample_every: int | None = None) -> LyapunovEstimate:
    """Multiply out the first n letters exactly and read off the growth rate.

    ``series`` holds (k, ln rho(A_k)/k) every ``sample_every`` letters; the
    largest sample in the last tenth is reported as ``tail_max`` (the limsup
    witness for paths that do not converge).
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    stride = sample_every or max(1, n // 100)
    a, b, c, d = 1, 0, 0, 1
    series = []
    k = 0
    for k, x in enumerate(itertools.islice(_letters(path), n), start=1):
        if x == "L":
            b, d = a + b, c + d
        elif x == "R":
            a, c = a + b, c + d
        else:
            raise ValueError(f"not a turn letter: {x!r}")
        if k % stride == 0 or k == n:
            series.append((k, log_spectral_radius(a + d) / k))
    if k < n:
        raise ValueError(f"path has only {k} letters, need {n}")
    value = series[-1][1]
    tail = [v for j, v in series if j >= 0.9 * n] or [value]
    return LyapunovEstimate(
        n=n,
        value=value,
        euclid_value=_log_int(c + d) / n,
        series=tuple(series) if sample_every else (),
        tail_max=max(tail),
    )


def turn_matrix(digits: Sequence[int], start: str = "R") -> Mat2:
    """R^b1 L^b2 R^b3 ... (starting letter selectable)."""
    M = IDENTITY
    other = "L" if start == "R" else "R"
    for i, b in enumerate(digits):
        M = M @ LETTERS[start if i % 2 == 0 else other] ** b
    return M


def exact_quadratic(cf: ContinuedFraction) -> ExactLyapunov:
    """Exact exponent of an eventually periodic expansion; the preperiod plays no part.

    Finite expansions (rationals) get exponent 0 with ``rational=True``.
    """
    if cf.is_rational:
        return ExactLyapunov(QuadraticSurd.rational(1), 0, 0.0, rational=True)
    per = even_period_view(ContinuedFraction((), cf.period)).period
    B = turn_matrix(per)
    lam = spectral_radius(B)
    s = sum(per)
    return ExactLyapunov(lam, s, surd_log(lam) / s)


def _reflect(f: Fraction) -> Fraction:
    return 1 - f if f > Fraction(1, 2) else f


def fock_psi(f) -> float:
    """(1/q) arcosh(3 m(p/q) / 2) on [0, 1/2]; values on (1/2, 1] by psi(1 - x) = psi(x)."""
    x = Fraction(f) if not isinstance(f, FareyFraction) else f.value()
    if not 0 <= x <= 1:
        raise ValueError(f"{x} is outside [0, 1]")
    x = _reflect(x)
    m = markov_of_farey(x)
    return log_spectral_radius(3 * m) / x.denominator


@dataclass(frozen=True)
class PsiBounds:
    lower: float
    upper: float
    left: Fraction
    right: Fraction


def fock_psi_bounds(xi, depth: int = 8) -> PsiBounds:
    """Bracket psi at a point of (0, 1/2) using convexity.

    Between the Farey neighbours l < xi < r at the given depth psi lies under
    the chord and above both neighbouring secant lines extended.
    """
    xi = Fraction(str(xi)) if isinstance(xi, float) else Fraction(xi)
    if not 0 < xi < Fraction(1, 2):
        raise ValueError("xi must lie in (0, 1/2)")
    pts = [p.value() for p in farey_points(depth)]
    i = next(k for k in range(1, len(pts)) if pts[k] >= xi)
    if pts[i] == xi:
        v = fock_psi(pts[i])
        return PsiBounds(v, v, pts[i], pts[i])
    l, r = pts[i - 1], pts[i]
    pl, pr = fock_psi(l), fock_psi(r)

    def line(x0, y0, x1, y1):
        return y0 + (y1 - y0) * float((xi - x0) / (x1 - x0))

    upper = line(l, pl, r, pr)
    lowers = []
    if i - 2 >= 0:
        l2 = pts[i - 2]
        lowers.append(line(l2, fock_psi(l2), l, pl))
    if i + 1 < len(pts):
        r2 = pts[i + 1]
        lowers.append(line(r, pr, r2, fock_psi(r2)))
    lower = max(lowers) if lowers else min(pl, pr)
    return PsiBounds(lower, upper, l, r)


def lambda_markov_hurwitz(f) -> float:
    """Exponent of the Markov-Hurwitz number x(p/q): arcosh(3m/2) / (2q)."""
    x = Fraction(f) if not isinstance(f, FareyFraction) else f.value()
    if not 0 <= x <= Fraction(1, 2):
        raise ValueError(f"{x} is outside [0, 1/2]")
    return fock_psi(x) / 2


def lambda_generalized(a: int, f) -> float:
    """ln lambda(a, p/q) / (2aq) with lambda the top eigenvalue of the a-Cohn matrix."""
    x = Fraction(f) if not isinstance(f, FareyFraction) else f.value()
    t = trace_of_farey(a, x)
    return log_spectral_radius(t) / (2 * a * x.denominator)


def construct_target_path(target: float, n: int) -> TreePath:
    """Greedy word of length n whose exponent approaches ``target``.

    Append the block RL while the running exponent is below the target, and a
    single R otherwise (equality counts as "not below").
    """
    if not 0 < target < LN_PHI:
        raise ValueError(f"target must lie in (0, ln phi) = (0, {LN_PHI:.7f})")
    if n < 1:
        raise ValueError("n must be >= 1")
    out: list[str] = []
    a, b, c, d = 1, 0, 0, 1
    length = 0
    while length < n:
        est = log_spectral_radius(a + d) / length if length else 0.0
        if est < target:
            block = "RL"
        else:
            block = "R"
        for x in block:
            if length == n:
                break
            if x == "L":
                b, d = a + b, c + d
            else:
                a, c = a + b, c + d
            out.append(x)
            length += 1
    return TreePath("".join(out))


@dataclass(frozen=True)
class PrefixProbe:
    """Exponent of A_n and of B A_n along one path, with two rigorous gap bounds.

    ``euclid_bound`` is ln(c + d)/n for the denominators w (valid when the
    path's matrices have top row <= bottom row, e.g. paths starting with R);
    ``rho_bound`` is (ln ||B||_1 + ln ||A_n||_1 - ln rho(A_n))/n and always
    holds.  The spectral gap is never negative.  ``sandwich_bound`` is the
    shorter (ln c_B + ln(c_B + d_B))/n, reported for comparison only: it can
    be exceeded slightly for small n.
    """

    n: int
    plain: tuple[tuple[int, float], ...]
    prefixed: tuple[tuple[int, float], ...]
    rho_gap: float
    euclid_gap: float
    rho_bound: float
    euclid_bound: float
    sandwich_bound: float
    euclid_applicable: bool = field(default=True)


def prefix_invariance_probe(B: Mat2, path, n: int, stride: int | None = None) -> PrefixProbe:
    if not B.is_sl2n():
        raise ValueError("B must lie in SL2(N)")
    stride = stride or max(1, n // 50)
    a, b, c, d = 1, 0, 0, 1
    plain, prefixed = [], []
    top_le_bottom = True
    k = 0
    for k, x in enumerate(itertools.islice(_letters(path), n), start=1):
        if x == "L":
            b, d = a + b, c + d
        else:
            a, c = a + b, c + d
        if k % stride == 0 or k == n:
            A = Mat2(a, b, c, d)
            BA = B @ A
            plain.append((k, log_spectral_radius(A.trace) / k))
            prefixed.append((k, log_spectral_radius(BA.trace) / k))
    if k < n:
        raise ValueError(f"path has only {k} letters, need {n}")
    A = Mat2(a, b, c, d)
    BA = B @ A
    top_le_bottom = A.a <= A.c and A.b <= A.d
    rho_gap = prefixed[-1][1] - plain[-1][1]
    euclid_gap = (_log_int(BA.c + BA.d) - _log_int(A.c + A.d)) / n
    norm1 = lambda M: max(M.a + M.c, M.b + M.d)  # noqa: E731
    rho_bound = (math.log(norm1(B)) + math.log(norm1(A)) - log_spectral_radius(A.trace)) / n
    euclid_bound = math.log(B.c + B.d) / n
    sandwich_bound = (math.log(max(B.c, 1)) + math.log(B.c + B.d)) / n
    return PrefixProbe(
        n, tuple(plain), tuple(prefixed), rho_gap, euclid_gap, rho_bound, euclid_bound, sandwich_bound, top_le_bottom
    )


@dataclass(frozen=True)
class MonteCarloSummary:
    samples: int
    digits: int
    seed: int
    median_levy: float
    median_ratio: float
    fraction_below: float
    threshold: float
    levy_constant: float = LEVY


def _cf_digits_of_dyadic(k: int, bits: int, count: int) -> list[int]:
    """First ``count`` partial quotients of k / 2^bits."""
    p, q = k, 1 << bits
    out = []
    while p and len(out) < count:
        a, r = divmod(q, p)
        out.append(a)
        q, p = p, r
    return out


def levy_ratio(digits: Sequence[int]) -> tuple[float, float]:
    """(ln q_n / n, ln q_n / s_n) for the given partial quotients."""
    q0, q1 = 0, 1
    for a in digits:
        q0, q1 = q1, a * q1 + q0
    lq = math.log(q1)
    return lq / len(digits), lq / sum(digits)


def monte_carlo_ae_zero(samples: int = 100, digits: int = 10_000, seed: int = 0, threshold: float = 0.15,
                        bits: int | None = None) -> MonteCarloSummary:
    """Seeded sampling evidence that the exponent vanishes almost everywhere.

    Each sample is a uniform random dyadic with ``bits`` binary digits (by
    default 4 bits per requested partial quotient, enough that the first
    ``digits`` quotients agree with those of a uniform real).  Reports the
    median of ln q_n / n (compare with Levy's constant) and of ln q_n / s_n,
    where s_n = a1 + ... + an is the path length after n quotients.
    """
    rng = random.Random(seed)
    bits = bits or 4 * digits
    levy, ratio = [], []
    for _ in range(samples):
        ds = []
        while len(ds) < digits:
            ds = _cf_digits_of_dyadic(rng.getrandbits(bits) | 1, bits, digits)
        l1, l2 = levy_ratio(ds)
        levy.append(l1)
        ratio.append(l2)
    below = sum(r < threshold for r in ratio) / samples
    return MonteCarloSummary(samples, digits, seed, statistics.median(levy), statistics.median(ratio), below, threshold)
