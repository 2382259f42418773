"""Single-entry mutations that are guaranteed to break a valid structure.

Each operator only produces mutants that violate some axiom outright, so a
checker that misses one has a genuine blind spot:

* a flipped composition result either sits on a unit-law entry or moves to
  a cell with different boundaries;
* a source/target swap is applied to a cell whose boundaries differ, which
  makes its unit-law composites non-composable;
* a corrupted identification sends two cells to one;
* a swapped basepoint changes the loops of an entry.
"""
from __future__ import annotations

import random
from dataclasses import replace

from .spectra import Tower
from .strictcat import WindowZCat, make_cat


def _rebuild(X: WindowZCat, **changes) -> WindowZCat:
    parts = dict(lo=X.lo, hi=X.hi, cells=X.cells, src=X.src, tgt=X.tgt,
                 unit=X.unit, comp=X.comp, basepoint=X.basepoint)
    parts.update(changes)
    return make_cat(**parts)


def flipped_compositions(X: WindowZCat):
    for (j, k), table in sorted(X.comp.items()):
        for (x, y), z in sorted(table.items()):
            unit_entry = (y == X.uu(X.bd(x, k, j, "-"), j, k) or x == X.uu(X.bd(y, k, j, "+"), j, k))
            for w in X.cells[k]:
                if w == z:
                    continue
                moved = X.s(k, w) != X.s(k, z) or X.t(k, w) != X.t(k, z)
                if unit_entry or moved:
                    comp = {jk: dict(t) for jk, t in X.comp.items()}
                    comp[(j, k)][(x, y)] = w
                    yield f"comp {j} {k}: {x} {y} -> {w} (was {z})", _rebuild(X, comp=comp)


def swapped_boundaries(X: WindowZCat):
    for k in range(X.lo + 1, X.hi + 1):
        for x in X.cells[k]:
            if X.src[k][x] == X.tgt[k][x]:
                continue
            src = {d: dict(m) for d, m in X.src.items()}
            tgt = {d: dict(m) for d, m in X.tgt.items()}
            src[k][x], tgt[k][x] = tgt[k][x], src[k][x]
            yield f"swap src/tgt of {k}-cell {x}", _rebuild(X, src=src, tgt=tgt)


def category_mutants(X: WindowZCat, limit: int | None = None, seed: int = 0) -> list:
    out = list(flipped_compositions(X)) + list(swapped_boundaries(X))
    if limit is not None and len(out) > limit:
        out = random.Random(seed).sample(out, limit)
    return out


def corrupted_identifications(T: Tower):
    for i, psi in enumerate(T.identifications):
        for k in sorted(psi):
            names = sorted(psi[k])
            if len(names) < 2:
                continue
            for x in names:
                for y in names:
                    if psi[k][x] == psi[k][y]:
                        continue
                    bad = {d: dict(m) for d, m in psi.items()}
                    bad[k][x] = psi[k][y]
                    idents = T.identifications[:i] + (bad,) + T.identifications[i + 1:]
                    yield f"identification {i} dim {k}: {x} -> {psi[k][y]}", replace(T, identifications=idents)


def swapped_basepoints(T: Tower):
    if T.length < 2:
        return  # nothing ties the pointing of a lone entry
    for i, X in enumerate(T.entries):
        for b in X.cells[0]:
            if b == X.basepoint:
                continue
            entries = T.entries[:i] + (X.with_basepoint(b),) + T.entries[i + 1:]
            yield f"X_{i} pointed at {b}", replace(T, entries=entries)


def tower_mutants(T: Tower) -> list:
    return list(corrupted_identifications(T)) + list(swapped_basepoints(T))
