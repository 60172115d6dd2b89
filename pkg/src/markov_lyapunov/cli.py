"""Command line front end.

    markov-lyapunov enumerate markov --depth 4
    markov-lyapunov lambda "[;2,2,1,1]" --n 2000
    markov-lyapunov spectrum hurwitz --depth 5 --format svg --out spectrum.svg
    markov-lyapunov verify all --depth 5

Exit codes: 0 success, 1 verification failure, 2 bad arguments, 3 output error.
CSV files start with a ``# markov-lyapunov/<table> v1`` comment line; floats
carry 15 significant digits.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import re
import sys
from dataclasses import asdict, dataclass, field
from fractions import Fraction

from . import forms, lyapunov, minkowski, trees
from .arith import QuadraticSurd
from .contfrac import ContinuedFraction, digits_to_turns, expand, reduce_to_unit
from .paths import TreePath

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    depth: int = 4
    n: int = 2000
    a: list[int] = field(default_factory=lambda: [1])
    seed: int = 0
    out: str | None = None
    format: str = "csv"

    def validate(self):
        if not 0 <= self.depth <= trees.MAX_DEPTH:
            raise UsageError(f"--depth must lie in [0, {trees.MAX_DEPTH}]")
        if self.n < 1:
            raise UsageError("--n must be >= 1")
        if any(a < 1 for a in self.a):
            raise UsageError("--a values must be positive integers")
        if self.format not in ("csv", "json", "svg", "text"):
            raise UsageError(f"unknown format {self.format!r}")
        return self


def g(x: float) -> str:
    return f"{x:.15g}"


# -- output -------------------------------------------------------------------


def _csv_text(table: str, header: list[str], rows: list[list], meta: dict) -> str:
    buf = io.StringIO()
    tags = " ".join(f"{k}={v}" for k, v in meta.items())
    buf.write(f"# markov-lyapunov/{table} v{SCHEMA_VERSION} {tags}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json_text(table: str, header: list[str], rows: list[list], meta: dict) -> str:
    doc = {"schema": f"markov-lyapunov/{table}", "version": SCHEMA_VERSION, **meta,
           "rows": [dict(zip(header, r)) for r in rows]}
    return json.dumps(doc, indent=1) + "\n"


def _emit(text: str, out: str | None):
    if out is None:
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write {out}: {exc}") from exc


def _table(cfg: RunConfig, table: str, header, rows, meta):
    if cfg.format == "json":
        return _json_text(table, header, rows, meta)
    if cfg.format == "csv":
        return _csv_text(table, header, rows, meta)
    raise UsageError(f"format {cfg.format!r} is not available for {table}")


# -- enumerate ------------------------------------------------------------------


def enumerate_rows(kind: str, depth: int, a: int = 1) -> tuple[list[str], list[list]]:
    header = ["level", "path", "fraction"] + trees.PAYLOAD_HEADERS[kind]
    if kind == "mordell":
        header.append("residual")
    rows = []
    for node in trees.enumerate_tree(kind, depth, a):
        row = [node.level, node.bits, str(node.fraction)] + trees.payload_columns(kind, node.payload)
        if kind == "mordell":
            row.append(forms.mordell_residual(*node.payload, a))
        rows.append(row)
    return header, rows


def cmd_enumerate(args, cfg: RunConfig) -> int:
    kind = args.kind
    a = cfg.a[0]
    if kind in ("farey", "euclid", "markov", "cohn", "hurwitz", "minkowski") and a != 1:
        raise UsageError(f"--a applies to mordell, cohn_a and hurwitz_a, not {kind}")
    header, rows = enumerate_rows(kind, cfg.depth, a)
    meta = {"kind": kind, "depth": cfg.depth, "a": a}
    _emit(_table(cfg, "enumerate", header, rows, meta), cfg.out)
    return EXIT_OK


# -- lambda -------------------------------------------------------------------------

_SURD = re.compile(r"\(\s*(-?\d+)\s*([+-])\s*(\d*)\s*(?:√|sqrt)\s*(\d+)\s*\)\s*/\s*(\d+)")


def parse_surd(text: str) -> QuadraticSurd:
    """Read "(P+B√D)/Q" or "(P-√D)/Q"; "sqrt" may stand in for the root sign."""
    m = _SURD.fullmatch(text.strip())
    if not m:
        raise ValueError(f"not a surd: {text!r}")
    p, sign, b, d, q = m.groups()
    b = int(b) if b else 1
    return QuadraticSurd.make(int(p), b if sign == "+" else -b, int(d), int(q))


@dataclass
class Descriptor:
    text: str
    kind: str
    cf: ContinuedFraction | None = None
    path: TreePath | None = None
    representative: str = ""
    steps: tuple[str, ...] = ()


def parse_descriptor(text: str) -> Descriptor:
    s = text.strip()
    if s.startswith("["):
        cf = ContinuedFraction.parse(s)
        return Descriptor(text, "cf", cf, digits_to_turns(cf), str(cf.value()))
    if re.fullmatch(r"[LRlr()]+", s):
        return Descriptor(text, "path", None, TreePath.parse(s.upper()), s.upper())
    if s.startswith("("):
        x = parse_surd(s)
        return _number_descriptor(text, "surd", x)
    try:
        x = Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise ValueError(f"cannot read {text!r} as p/q, (P+B√D)/Q, [cf] or a turn word") from None
    return _number_descriptor(text, "rational", x)


def _number_descriptor(text: str, kind: str, x) -> Descriptor:
    y, steps = reduce_to_unit(x)
    if y == 0:
        return Descriptor(text, kind, None, None, "0", tuple(steps))
    cf = expand(y)
    return Descriptor(text, kind, cf, digits_to_turns(cf), str(y), tuple(steps))


def lambda_report(d: Descriptor, n: int) -> dict:
    rep = {"descriptor": d.text, "kind": d.kind, "representative": d.representative,
           "reductions": ",".join(d.steps) or "none"}
    exact = None
    if d.cf is None and d.path is None:
        rep.update(exact="0", exact_form="0 (rational)")
        return rep
    if d.cf is not None:
        rep["continued_fraction"] = str(d.cf)
        ex = lyapunov.exact_quadratic(d.cf)
        exact = ex.value
        rep["exact"] = g(ex.value)
        if ex.rational:
            rep["exact_form"] = "0 (rational)"
        else:
            rep["exact_form"] = f"ln({ex.lam})/{ex.s}"
    if d.cf is not None and d.cf.is_rational:
        return rep
    if d.path is not None:
        if d.path.is_finite:
            steps = min(n, len(d.path))
            if d.cf is None and steps:
                rep["note"] = "finite word: estimate after its last letter"
        else:
            steps = n
        if steps:
            est = lyapunov.estimate_from_path(d.path, steps)
            rep["n"] = steps
            rep["estimate"] = g(est.value)
            rep["euclid_estimate"] = g(est.euclid_value)
            if exact is not None:
                rep["gap"] = g(abs(est.value - exact))
    return rep


def cmd_lambda(args, cfg: RunConfig) -> int:
    try:
        d = parse_descriptor(args.descriptor)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = lambda_report(d, cfg.n)
    if cfg.format == "json":
        text = json.dumps(rep, indent=1) + "\n"
    else:
        text = "".join(f"{k}: {v}\n" for k, v in rep.items())
    _emit(text, cfg.out)
    return EXIT_OK


# -- spectrum ---------------------------------------------------------------------


def hurwitz_spectrum(depth: int, a: int = 1) -> tuple[list[str], list[list]]:
    """(p/q, trace, word, x, Lambda) for the roots and every node to ``depth``, sorted by p/q."""
    header = ["fraction", "trace", "word", "x", "lambda"]
    rows = []
    for f in trees.farey_points(depth):
        word = trees.hurwitz_word(f, a)
        _, x = trees.hurwitz_number(word)
        lam = lyapunov.lambda_generalized(a, f.value())
        rows.append([str(f), trees.trace_of_farey(a, f), str(word), g(float(x)), g(lam)])
    return header, rows


def target_rows(targets: list[float], n: int) -> tuple[list[str], list[list]]:
    header = ["target", "n", "estimate", "abs_error"]
    rows = []
    for t in targets:
        est = lyapunov.estimate_from_path(lyapunov.construct_target_path(t, n), n).value
        rows.append([g(t), n, g(est), g(abs(est - t))])
    return header, rows


def cmd_spectrum(args, cfg: RunConfig) -> int:
    a = cfg.a[0]
    if args.which == "hurwitz":
        header, rows = hurwitz_spectrum(cfg.depth, a)
        meta = {"table": "hurwitz", "depth": cfg.depth, "a": a}
        pts = [(float(Fraction(r[0])), float(r[4])) for r in rows]
        title, xl = f"Lambda on Markov-Hurwitz numbers (a={a})", "p/q"
    else:
        try:
            targets = [float(t) for t in args.targets.split(",")]
            for t in targets:
                if not 0 < t < lyapunov.LN_PHI:
                    raise ValueError(f"target {t} outside (0, ln phi)")
        except (AttributeError, ValueError) as exc:
            raise UsageError(f"bad targets: {exc}") from None
        header, rows = target_rows(targets, cfg.n)
        meta = {"table": "targets", "n": cfg.n}
        pts = [(float(r[0]), float(r[2])) for r in rows]
        title, xl = "achieved exponent vs target", "target"
    if cfg.format == "svg":
        from .svg import line_chart

        text = line_chart({"Lambda": pts}, title=title, xlabel=xl, ylabel="Lambda")
    else:
        text = _table(cfg, "spectrum", header, rows, meta)
    _emit(text, cfg.out)
    return EXIT_OK


# -- verify -------------------------------------------------------------------------


def _check(name: str, ok: bool, **detail) -> dict:
    return {"check": name, "ok": bool(ok), **detail}


def verify_forms(depth: int) -> list[dict]:
    out = []
    disc = cohn = aig = True
    for node in trees.enumerate_tree("markov", depth):
        t = node.payload
        mf = forms.markov_form(t)
        disc &= mf.form.discriminant == 9 * mf.m ** 2 - 4
        A = trees.cohn_matrix(node.fraction)
        cohn &= forms.cohn_form_identity_check(mf.m, t, A)
        aig &= forms.aigner_matrix(mf.m, mf.p, mf.q) == A
    out.append(_check("discriminant 9m^2-4", disc, depth=depth))
    out.append(_check("f_m(x,y) = Q_m(x+y,y)", cohn, depth=depth))
    out.append(_check("Aigner matrix = Cohn matrix", aig, depth=depth))
    ms = trees.markov_numbers_upto(100)
    out.append(_check("Markov constant m/sqrt(9m^2-4)", all(forms.markov_theorem_check(m) for m in ms), m=ms))
    out.append(_check("eigenvector formula", all(forms.eigenvector_formula_check(m) for m in ms), m=ms))
    return out


def verify_fricke(a_values: list[int], depth: int) -> list[dict]:
    out = []
    for a in a_values:
        Ma, M2a = trees.cohn_generators(a)
        rep = forms.fricke_check(Ma, M2a)
        out.append(_check(f"Fricke a={a}", rep.ok and rep.commutator_trace == 2 - 4 * a ** 6,
                          commutator_trace=rep.commutator_trace))
        out.append(_check(f"letter identity a={a}", trees.letters_to_word_identity_check(a)))
        res = all(forms.mordell_residual(*n.payload, a) == 0 for n in trees.generalized_tree(a, "mordell", depth))
        out.append(_check(f"Mordell surface a={a}", res and forms.mordell_residual(*trees.mordell_seed(a), a) == 0,
                          depth=depth))
    return out


def verify_minkowski(depth: int, seed: int) -> list[dict]:
    out = []
    pi_ok = all(minkowski.question_mark_rational(x)[1] == minkowski.BinaryWord(w + "1")
                for x, w in minkowski.farey_node_word(depth))
    out.append(_check("path word = ? word", pi_ok, depth=depth))
    out.append(_check("mediant mean", _mediant_sweep(depth), depth=depth))
    rng = random.Random(seed)
    pairs = [(_rand_period(rng), _rand_period(rng)) for _ in range(50)]
    out.append(_check("conjunction property", all(minkowski.conjunction_property_check(a, b) for a, b in pairs)))
    return out


def _mediant_sweep(depth: int) -> bool:
    """Every node of the [0, 1] Farey tree is the mediant of its two parents, and ? averages."""
    ok = True
    level = [(Fraction(0), Fraction(1))]
    for _ in range(depth + 1):
        nxt = []
        for l, r in level:
            ok &= minkowski.mediant_mean_check(l, r)
            m = Fraction(l.numerator + r.numerator, l.denominator + r.denominator)
            nxt += [(l, m), (m, r)]
        level = nxt
    return ok


def _rand_period(rng: random.Random) -> tuple[int, ...]:
    return tuple(rng.randint(1, 5) for _ in range(2 * rng.randint(1, 3)))


def verify_trees(depth: int) -> list[dict]:
    out = []
    triples = [n.payload for n in trees.enumerate_tree("markov", depth)]
    out.append(_check("Markov equation", all(t.is_valid() for t in triples), depth=depth))
    cohn = [n.payload for n in trees.enumerate_tree("cohn", depth)]
    out.append(_check("trace = 3m", all(c.product.trace == 3 * t.z for c, t in zip(cohn, triples)), depth=depth))
    eu = [n.payload for n in trees.enumerate_tree("euclid", depth)]
    out.append(_check("Euclid u+v=w", all(e.u + e.v == e.w for e in eu), depth=depth))
    hw = [n.payload for n in trees.enumerate_tree("hurwitz", depth)]
    out.append(_check("Hurwitz/Cohn alignment",
                      all(minkowski.cohn_matrix_from_word(h.period) == c.product for h, c in zip(hw, cohn)),
                      depth=depth))
    mord = [n.payload for n in trees.generalized_tree(1, "mordell", depth)]
    out.append(_check("a=1 traces = 3 x Markov",
                      all(tuple(x) == tuple(3 * v for v in t) for x, t in zip(mord, triples)), depth=depth))
    return out


def cmd_verify(args, cfg: RunConfig) -> int:
    suites = ["trees", "forms", "fricke", "minkowski"] if args.suite == "all" else [args.suite]
    report = {}
    for s in suites:
        if s == "trees":
            report[s] = verify_trees(cfg.depth)
        elif s == "forms":
            report[s] = verify_forms(cfg.depth)
        elif s == "fricke":
            report[s] = verify_fricke(cfg.a, min(cfg.depth, 8))
        elif s == "minkowski":
            report[s] = verify_minkowski(cfg.depth, cfg.seed)
    ok = all(c["ok"] for checks in report.values() for c in checks)
    doc = {"schema": "markov-lyapunov/verify", "version": SCHEMA_VERSION, "ok": ok, "config": asdict(cfg),
           "suites": report}
    _emit(json.dumps(doc, indent=1) + "\n", cfg.out)
    return EXIT_OK if ok else EXIT_FAIL


# -- argument parsing -------------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--depth", type=int, default=4, help="tree depth (levels below the root)")
    common.add_argument("--n", type=int, default=2000, help="path length for estimates")
    common.add_argument("--a", type=_int_list, default=[1], help="a-parameter (comma list for verify fricke)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--out", help="output file (default stdout)")

    p = argparse.ArgumentParser(prog="markov-lyapunov", description=__doc__.split("\n\n")[0])
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", parents=[common], help="breadth-first tree listing")
    e.add_argument("kind", choices=trees.KINDS + trees.GENERALIZED_KINDS)
    e.add_argument("--format", choices=("csv", "json"), default="csv")
    e.set_defaults(func=cmd_enumerate)

    lam = sub.add_parser("lambda", parents=[common], help="exponent of one number or path")
    lam.add_argument("descriptor", help='p/q, "(P+B√D)/Q", "[a1,a2;b1,b2]" or a word like R(RL)')
    lam.add_argument("--format", choices=("text", "json"), default="text")
    lam.set_defaults(func=cmd_lambda)

    s = sub.add_parser("spectrum", parents=[common], help="exponent over Markov-Hurwitz numbers or targets")
    s.add_argument("which", choices=("hurwitz", "targets"))
    s.add_argument("targets", nargs="?", help="comma-separated targets (for 'targets')")
    s.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    s.set_defaults(func=cmd_spectrum)

    v = sub.add_parser("verify", parents=[common], help="run identity suites, JSON report")
    v.add_argument("suite", choices=("forms", "fricke", "minkowski", "trees", "all"))
    v.set_defaults(func=cmd_verify, format="json")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(args.command, args.depth, args.n, args.a, args.seed, args.out, args.format)
    try:
        cfg.validate()
        return args.func(args, cfg)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
