#!/usr/bin/env python3
"""Stabilization indices of generated towers against two candidate bounds.

``stated`` is max(0, -(a+k)); ``general`` is max(0, -k, -a-1), with ``a`` the
bottom of the window.  Rows where the stated bound fails are printed.
"""
import argparse

from zcat import harness
from zcat import spectra as sp


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=5)
    args = ap.parse_args()
    total = stated_bad = general_bad = 0
    for seed in range(args.seeds):
        for name, X, L in harness.cells_cases(seed):
            T = sp.tower_of(X, L)
            for k in X.dims:
                if k + L - 1 < 0:
                    continue
                i = sp.stable_cells(T, k).stabilization_index
                a, b = sp.stabilization_bound(X.lo, k), sp.general_stabilization_bound(X.lo, k)
                total += 1
                general_bad += i > b
                if i > a:
                    stated_bad += 1
                    print(f"seed {seed} {name} L={L} k={k}: index {i}, stated {a}, general {b}")
    print(f"{total} cases: stated bound fails {stated_bad}, general bound fails {general_bad}")


if __name__ == "__main__":
    main()
