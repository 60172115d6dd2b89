#!/usr/bin/env python3
"""Plot the exponent over the Markov-Hurwitz numbers and a few convergence curves."""
import argparse
from pathlib import Path

from markov_lyapunov import lyapunov
from markov_lyapunov.cli import hurwitz_spectrum
from markov_lyapunov.paths import TreePath
from markov_lyapunov.svg import line_chart


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=6)
    ap.add_argument("--n", type=int, default=4000, help="path length for the convergence panel")
    ap.add_argument("--outdir", default="figures")
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)

    header, rows = hurwitz_spectrum(args.depth)
    ix, il = header.index("x"), header.index("lambda")
    pts = sorted((float(r[ix]), float(r[il])) for r in rows)
    (out / "spectrum.svg").write_text(line_chart({"Markov-Hurwitz": pts}, "exponent on Markov-Hurwitz numbers",
                                                 "x_m", "Lambda"))

    curves = {}
    for name, path in [("golden", TreePath("", "RL")), ("target 0.25", lyapunov.construct_target_path(0.25, args.n)),
                       ("R(RRL)", TreePath("R", "RRL"))]:
        est = lyapunov.estimate_from_path(path, args.n, sample_every=max(1, args.n // 200))
        curves[name] = list(est.series)
    (out / "convergence.svg").write_text(line_chart(curves, "ln rho(A_n)/n", "n", "estimate", markers=False))
    print(f"wrote {out / 'spectrum.svg'} and {out / 'convergence.svg'}")


if __name__ == "__main__":
    main()
