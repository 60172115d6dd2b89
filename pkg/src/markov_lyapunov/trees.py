"""The coupled binary trees: Farey, Euclid, Markov, Cohn, Markov-Hurwitz, Minkowski.

Markov-type trees live on the Farey subtree of [0, 1/2].  A node is a pair of
Farey neighbours l < r together with their mediant; the turn ``R`` moves to
(l, mediant) and ``L`` to (mediant, r), which is the same convention as right
multiplication by the letter matrices of the Farey monoid (``R`` heads towards
smaller fractions).  Each tree attaches a value to every fraction and the value
at a mediant is computed from the values at l, r and at the "opposite"
fraction o (the one with l = mediant(o, r) or r = mediant(l, o)):

    Markov        m(med) = 3 m(l) m(r) - m(o)        seeds 1, 2 (o = 1/1 -> 1)
    a-traces      t(med) = t(l) t(r) - t(o)          seeds a^2+2, 4a^2+2
    Cohn          A(med) = A(r) A(l)                 seeds M_a, M_2a
    Hurwitz       w(med) = w(r) (.) w(l)             seeds (a,a), (2a,2a)

Paths are strings over {L, R}; in CSV they are written as bits with R -> 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Iterator

from .arith import Mat2, QuadraticSurd, R, word_matrix
from .contfrac import periodic_value
from .paths import to_bits

MAX_DEPTH = 20

KINDS = ("farey", "euclid", "markov", "cohn", "hurwitz", "minkowski")
GENERALIZED_KINDS = ("mordell", "cohn_a", "hurwitz_a")


@dataclass(frozen=True, order=True)
class FareyFraction:
    """Reduced p/q with q >= 0; 1/0 stands for infinity."""

    p: int
    q: int

    def mediant(self, other: "FareyFraction") -> "FareyFraction":
        return FareyFraction(self.p + other.p, self.q + other.q)

    def value(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self):
        return f"{self.p}/{self.q}"

    @classmethod
    def of(cls, x) -> "FareyFraction":
        if isinstance(x, FareyFraction):
            return x
        if isinstance(x, str):
            x = Fraction(x)
        x = Fraction(x)
        return cls(x.numerator, x.denominator)


@dataclass(frozen=True)
class MarkovTriple:
    """x^2 + y^2 + z^2 = 3xyz; z is the newest entry."""

    x: int
    y: int
    z: int

    def is_valid(self) -> bool:
        return self.x ** 2 + self.y ** 2 + self.z ** 2 == 3 * self.x * self.y * self.z

    def sorted(self) -> tuple[int, int, int]:
        return tuple(sorted((self.x, self.y, self.z)))

    def __iter__(self):
        yield from (self.x, self.y, self.z)


@dataclass(frozen=True)
class EuclidTriple:
    u: int
    v: int
    w: int

    def __iter__(self):
        yield from (self.u, self.v, self.w)


@dataclass(frozen=True)
class CohnNode:
    """Matrices on the neighbours l < r and at their mediant: product = right @ left."""

    left: Mat2
    right: Mat2
    product: Mat2


@dataclass(frozen=True)
class FareyEdge:
    """Edge of the positive Farey tree: its SL2(N) matrix and the two adjacent fractions."""

    matrix: Mat2
    first: FareyFraction
    second: FareyFraction


@dataclass(frozen=True)
class HurwitzWord:
    period: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "period", tuple(self.period))

    def __str__(self):
        return ",".join(map(str, self.period))


@dataclass(frozen=True)
class Node:
    path: str
    fraction: FareyFraction
    payload: Any

    @property
    def level(self) -> int:
        return len(self.path)

    @property
    def bits(self) -> str:
        return to_bits(self.path)


# -- elementary operations ------------------------------------------------


def vieta(t: MarkovTriple, slot: str = "z") -> MarkovTriple:
    """Replace one entry by its Vieta partner 3*(product of the other two) - entry."""
    x, y, z = t
    if slot == "x":
        return MarkovTriple(3 * y * z - x, y, z)
    if slot == "y":
        return MarkovTriple(x, 3 * x * z - y, z)
    if slot == "z":
        return MarkovTriple(x, y, 3 * x * y - z)
    raise ValueError(f"slot must be x, y or z, not {slot!r}")


def conjunction(x: HurwitzWord, y: HurwitzWord) -> HurwitzWord:
    return HurwitzWord(x.period + y.period)


def cohn_generators(a: int = 1) -> tuple[Mat2, Mat2]:
    """(M_a, M_2a): the Cohn matrices sitting at 0/1 and 1/2."""
    if a < 1:
        raise ValueError("a must be a positive integer")
    Ma = Mat2(1 - a + a * a, a * a, a, a + 1)
    M2a = Mat2(1 - 2 * a + 4 * a * a, 4 * a * a, 2 * a, 2 * a + 1)
    return Ma, M2a


def letters_to_word_identity_check(a: int) -> bool:
    """L^(a-1) R^a L = M_a and L^(2a-1) R^(2a) L = M_2a, by exact multiplication."""
    Ma, M2a = cohn_generators(a)
    return (
        word_matrix("L" * (a - 1) + "R" * a + "L") == Ma
        and word_matrix("L" * (2 * a - 1) + "R" * (2 * a) + "L") == M2a
    )


def hurwitz_number(word: HurwitzWord) -> tuple[QuadraticSurd, QuadraticSurd]:
    """(y, x): y = b1 + 1/(b2 + ...) > 1 for the purely periodic word, x = 1/y in (0, 1)."""
    x = periodic_value(word.period)
    return x.reciprocal(), x


# -- Farey-interval descent ----------------------------------------------

ROOT_L = FareyFraction(0, 1)
ROOT_R = FareyFraction(1, 2)
ROOT_O = FareyFraction(1, 1)


@dataclass(frozen=True)
class _State:
    path: str
    l: FareyFraction
    r: FareyFraction
    vl: Any
    vr: Any
    vo: Any
    vm: Any


def _children(s: _State, combine) -> tuple[_State, _State]:
    m = s.l.mediant(s.r)
    # R: (l, m) with opposite r;  L: (m, r) with opposite l
    right = _State(s.path + "R", s.l, m, s.vl, s.vm, s.vr, combine(s.vl, s.vm, s.vr))
    left = _State(s.path + "L", m, s.r, s.vm, s.vr, s.vl, combine(s.vm, s.vr, s.vl))
    return right, left


def _root(seeds, combine) -> _State:
    vl, vr, vo = seeds
    return _State("", ROOT_L, ROOT_R, vl, vr, vo, combine(vl, vr, vo))


def _walk(seeds, combine, path: str) -> _State:
    s = _root(seeds, combine)
    for letter in path:
        right, left = _children(s, combine)
        if letter == "R":
            s = right
        elif letter == "L":
            s = left
        else:
            raise ValueError(f"not a turn letter: {letter!r}")
    return s


def _bfs(seeds, combine, depth: int) -> Iterator[_State]:
    _check_depth(depth)
    level = [_root(seeds, combine)]
    for k in range(depth + 1):
        yield from level
        if k < depth:
            level = [c for s in level for c in _children(s, combine)]


def _check_depth(depth: int):
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if depth > MAX_DEPTH:
        raise ValueError(
            f"depth {depth} exceeds the memory budget (max {MAX_DEPTH}, i.e. {2 ** (MAX_DEPTH + 1) - 1} nodes)"
        )


def _markov_combine(l, r, o):
    return 3 * l * r - o


def _trace_combine(l, r, o):
    return l * r - o


def _cohn_combine(l, r, o):
    return r @ l


def _word_combine(l, r, o):
    return r + l


def _seeds(kind: str, a: int = 1):
    if a < 1:
        raise ValueError("a must be a positive integer")
    if kind == "markov":
        return (1, 2, 1), _markov_combine
    if kind == "mordell":
        return (a * a + 2, 4 * a * a + 2, a * a + 2), _trace_combine
    if kind in ("cohn", "cohn_a"):
        Ma, M2a = cohn_generators(a)
        return (Ma, M2a, None), _cohn_combine
    if kind in ("hurwitz", "hurwitz_a", "minkowski"):
        return ((a, a), (2 * a, 2 * a), None), _word_combine
    raise ValueError(f"unknown tree kind {kind!r}")


def _payload(kind: str, s: _State):
    if kind == "markov":
        return MarkovTriple(s.vl, s.vr, s.vm)
    if kind == "mordell":
        return (s.vl, s.vr, s.vm)
    if kind in ("cohn", "cohn_a"):
        return CohnNode(s.vl, s.vr, s.vm)
    if kind in ("hurwitz", "hurwitz_a"):
        return HurwitzWord(s.vm)
    if kind == "minkowski":
        from .minkowski import question_mark_periodic

        return question_mark_periodic(s.vm)[1]
    raise ValueError(kind)


# -- monoid trees (Farey, Euclid) -----------------------------------------


def _farey_edge(M: Mat2) -> FareyEdge:
    return FareyEdge(M, FareyFraction(M.a, M.c), FareyFraction(M.b, M.d))


def _euclid(M: Mat2) -> EuclidTriple:
    M = R @ M
    return EuclidTriple(M.c, M.d, M.c + M.d)


def _words(depth: int) -> Iterator[str]:
    _check_depth(depth)
    level = [""]
    for k in range(depth + 1):
        yield from level
        if k < depth:
            level = [w + x for w in level for x in "RL"]


# -- public tree API ------------------------------------------------------


def follow_path(kind: str, path: str, a: int = 1):
    """Payload of the node reached by ``path`` from the root of tree ``kind``.

    ``farey`` walks the positive Farey tree from the identity edge (so paths
    starting with R stay in [0, 1]); ``euclid`` is rooted at the edge R, whose
    denominators give the triple (1, 1, 2).
    """
    if kind == "farey":
        return _farey_edge(word_matrix(path))
    if kind == "euclid":
        return _euclid(word_matrix(path))
    seeds, combine = _seeds(kind, a)
    return _payload(kind, _walk(seeds, combine, path))


def enumerate_tree(kind: str, depth: int, a: int = 1) -> Iterator[Node]:
    """Breadth-first nodes of levels 0..depth, each level ordered by path bits (R=0)."""
    if kind == "farey":
        for w in _words(depth):
            M = word_matrix(w)
            yield Node(w, FareyFraction(M.a + M.b, M.c + M.d), _farey_edge(M))
        return
    if kind == "euclid":
        for w in _words(depth):
            M = R @ word_matrix(w)
            yield Node(w, FareyFraction(M.a + M.b, M.c + M.d), _euclid(word_matrix(w)))
        return
    if kind not in KINDS and kind not in GENERALIZED_KINDS:
        raise ValueError(f"unknown tree kind {kind!r}")
    seeds, combine = _seeds(kind, a)
    for s in _bfs(seeds, combine, depth):
        yield Node(s.path, s.l.mediant(s.r), _payload(kind, s))


def generalized_tree(a: int, kind: str, depth: int) -> Iterator[Node]:
    """The a-parameter trees: ``mordell`` traces, ``cohn_a`` matrices, ``hurwitz_a`` words."""
    if a < 1:
        raise ValueError("a must be a positive integer")
    if kind not in GENERALIZED_KINDS:
        raise ValueError(f"unknown generalized kind {kind!r}")
    return enumerate_tree(kind, depth, a)


def mordell_seed(a: int) -> tuple[int, int, int]:
    """The solution X = Y = a^2 + 2, Z = 4a^2 + 2 the a-tree grows from."""
    return a * a + 2, a * a + 2, 4 * a * a + 2


def farey_path(f) -> str:
    """Turns from the root interval (0/1, 1/2) to the node whose mediant is f."""
    f = FareyFraction.of(f)
    x = f.value()
    if not 0 < x < Fraction(1, 2):
        raise ValueError(f"{f} is not an interior fraction of [0, 1/2]")
    l, r, path = ROOT_L, ROOT_R, []
    while True:
        m = l.mediant(r)
        if m == f:
            return "".join(path)
        if x < m.value():
            r = m
            path.append("R")
        else:
            l = m
            path.append("L")


def _value_at(kind: str, f, a: int = 1):
    f = FareyFraction.of(f)
    x = f.value()
    if not 0 <= x <= Fraction(1, 2):
        raise ValueError(f"{f} is outside [0, 1/2]")
    seeds, combine = _seeds(kind, a)
    if x == 0:
        return seeds[0]
    if x == Fraction(1, 2):
        return seeds[1]
    return _walk(seeds, combine, farey_path(f)).vm


def markov_of_farey(f) -> int:
    """Markov number m(p/q) for p/q in [0, 1/2]: m(0/1) = 1, m(1/2) = 2, m(1/3) = 5."""
    return _value_at("markov", f)


def markov_triple_of_farey(f) -> MarkovTriple:
    """Triple (m(l), m(r), m(f)) of the node whose mediant is f; the roots give (1,1,1) and (1,1,2)."""
    f = FareyFraction.of(f)
    if f == ROOT_L:
        return MarkovTriple(1, 1, 1)
    if f == ROOT_R:
        return MarkovTriple(1, 1, 2)
    s = _walk(*_seeds("markov"), farey_path(f))
    return MarkovTriple(s.vl, s.vr, s.vm)


def trace_of_farey(a: int, f) -> int:
    """Trace of the a-Cohn matrix at p/q; equals 3 m(p/q) when a = 1."""
    return _value_at("mordell", f, a)


def cohn_matrix(f, a: int = 1) -> Mat2:
    return _value_at("cohn", f, a)


def hurwitz_word(f, a: int = 1) -> HurwitzWord:
    return HurwitzWord(_value_at("hurwitz", f, a))


def farey_points(depth: int) -> list[FareyFraction]:
    """0/1, 1/2 and every mediant of the [0, 1/2] tree down to ``depth``, sorted."""
    pts = {ROOT_L, ROOT_R}
    pts.update(FareyFraction.of(n.fraction) for n in enumerate_tree("markov", depth))
    return sorted(pts, key=FareyFraction.value)


def markov_numbers_upto(bound: int) -> list[int]:
    """All Markov numbers <= bound, sorted; values grow down the tree so branches are pruned."""
    found = {m for m in (1, 2) if m <= bound}
    stack = [_root(*_seeds("markov"))] if bound >= 5 else []
    while stack:
        s = stack.pop()
        if s.vm > bound:
            continue
        found.add(s.vm)
        stack.extend(_children(s, _markov_combine))
    return sorted(found)


def find_markov(m: int) -> FareyFraction:
    """Farey fraction of the first node (in [0, 1/2]) carrying Markov number m."""
    if m == 1:
        return ROOT_L
    if m == 2:
        return ROOT_R
    stack = [_root(*_seeds("markov"))]
    while stack:
        s = stack.pop()
        if s.vm == m:
            return s.l.mediant(s.r)
        if s.vm < m:
            stack.extend(_children(s, _markov_combine))
    raise ValueError(f"{m} is not a Markov number")


def neighbour_triples(depth: int, a: int = 1) -> Iterator[tuple[int, int, int, int]]:
    """(t_l, t_r, t_med, t_opp) trace data at every node down to ``depth``."""
    seeds, combine = _seeds("mordell", a)
    for s in _bfs(seeds, combine, depth):
        yield s.vl, s.vr, s.vm, s.vo


def walk_states(kind: str, depth: int, a: int = 1) -> Iterator[_State]:
    seeds, combine = _seeds(kind, a)
    return _bfs(seeds, combine, depth)


def payload_columns(kind: str, payload) -> list[str]:
    """Flat text columns for CSV/JSON output."""
    if kind == "farey":
        return [str(payload.matrix), str(payload.first), str(payload.second)]
    if kind == "euclid":
        return [str(payload.u), str(payload.v), str(payload.w)]
    if kind == "markov":
        return [str(payload.x), str(payload.y), str(payload.z)]
    if kind == "mordell":
        return [str(v) for v in payload]
    if kind in ("cohn", "cohn_a"):
        return [str(payload.left), str(payload.right), str(payload.product), str(payload.product.trace)]
    if kind in ("hurwitz", "hurwitz_a"):
        y, x = hurwitz_number(payload)
        return [str(payload), str(y), str(x)]
    if kind == "minkowski":
        return [str(payload), str(payload.value())]
    raise ValueError(kind)


PAYLOAD_HEADERS: dict[str, list[str]] = {
    "farey": ["matrix", "first", "second"],
    "euclid": ["u", "v", "w"],
    "markov": ["x", "y", "z"],
    "mordell": ["X", "Y", "Z"],
    "cohn": ["left", "right", "product", "trace"],
    "cohn_a": ["left", "right", "product", "trace"],
    "hurwitz": ["period", "y", "x"],
    "hurwitz_a": ["period", "y", "x"],
    "minkowski": ["word", "value"],
}

TreeBuilder = Callable[..., Iterator[Node]]
