#!/usr/bin/env python3
"""List Markov numbers up to a bound with their triple, Farey label, Cohn matrix and form."""
import argparse

from markov_lyapunov import forms, trees


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("bound", type=int, nargs="?", default=1325)
    args = ap.parse_args()
    print("m,fraction,triple,cohn,form")
    for m in trees.markov_numbers_upto(args.bound):
        f = trees.find_markov(m)
        t = trees.markov_triple_of_farey(f)
        form = forms.markov_form(t).form
        print(f'{m},{f},"{t.x},{t.y},{t.z}","{trees.cohn_matrix(f)}","{form}"')


if __name__ == "__main__":
    main()
