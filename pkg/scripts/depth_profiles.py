#!/usr/bin/env python3
"""Depth-zero profiles of the squarefree Veronese ideals next to the closed formula.

Prints one row per (n, d): the powers l <= l_max at which S/I^l has depth
zero according to the socle oracle, and the same according to
max(0, n - l(n-d) - 1) == 0.
"""

import argparse

from socles.constructions import hh_depth, squarefree_veronese, threshold
from socles.socle import depth_zero_profile


def fmt(profile):
    return "".join("0" if z else "+" for z in profile)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--l-max", type=int, default=4)
    args = ap.parse_args()

    print("  n  d  oracle  formula  equality-case k")
    for n in range(1, args.n_max + 1):
        for d in range(1, n + 1):
            I = squarefree_veronese(n, d)
            oracle = depth_zero_profile(I, args.l_max)
            formula = tuple(hh_depth(n, d, k) == 0 for k in range(1, args.l_max + 1))
            eq = [k for k in range(1, args.l_max + 1) if threshold(n, k) == d]
            flag = "" if oracle == formula else "  MISMATCH"
            print(f"{n:3d}{d:3d}  {fmt(oracle):>6}  {fmt(formula):>7}  {eq or '-'}{flag}")


if __name__ == "__main__":
    main()
