#!/usr/bin/env python3
"""Seeded Monte Carlo look at ln q_n / n and ln q_n / s_n for random numbers."""
import argparse
import json

from markov_lyapunov.lyapunov import monte_carlo_ae_zero


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--digits", type=int, default=10_000)
    ap.add_argument("--seeds", type=str, default="0,1,2")
    args = ap.parse_args()
    for seed in map(int, args.seeds.split(",")):
        s = monte_carlo_ae_zero(args.samples, args.digits, seed)
        print(json.dumps({"seed": seed, "median_levy": round(s.median_levy, 6), "levy_constant": round(s.levy_constant, 6),
                          "median_ratio": round(s.median_ratio, 6), "fraction_below": s.fraction_below}))


if __name__ == "__main__":
    main()
