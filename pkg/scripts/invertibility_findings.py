#!/usr/bin/env python3
"""Compare the two notions of invertible stable cell on EM towers.

Over a group every stable cell is an omega-equivalence, yet only the unit
arises as a degeneracy; over a gaunt monoid both notions pick out the unit.
"""
from zcat import generators as gen
from zcat import spectra as sp
from zcat import strictcat as sc

MONOIDS = {**gen.MONOIDS, **gen.GAUNT_MONOIDS}


def main():
    print(f"{'monoid':8s} {'cells':>5s} {'degeneracy':>10s} {'equivalence':>11s}  agree")
    for name in sorted(MONOIDS):
        T = sp.tower_of(sc.eilenberg_maclane(MONOIDS[name](), 1), 3)
        r = sp.invertible_stable_cells(T, 1)
        print(f"{name:8s} {len(r.cells):5d} {len(r.by_degeneracy):10d} {len(r.by_equivalence):11d}  {r.agree}")


if __name__ == "__main__":
    main()
