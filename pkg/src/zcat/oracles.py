"""Brute-force reference computations.

Nothing here reuses the algorithms it is compared against: expansions are
computed level by level from the raw ``(offset, body)`` pair, globe maps are
words of generators modulo the congruence generated by the relations, inert
maps are all assignments filtered afterwards, and colimits use a plain
union-find.
"""
from __future__ import annotations

import itertools
from math import comb

from .pasting import Sector, sector_source, sector_target, sectors
from .trees import StableTree, Tree


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def expansion(s: StableTree, lo: int, hi: int) -> tuple:
    """Level sizes and parent maps of the absolute functor on ``[lo, hi]``."""
    out = []
    level = [s.body]
    for k in range(lo, hi + 1):
        if k < s.offset:
            out.append((1, (0,)))
            continue
        if k > s.offset:
            parents = tuple(j for j, t in enumerate(level) for _ in t.children)
            level = [c for t in level for c in t.children]
        else:
            parents = (0,)
        out.append((len(level), parents if level else ()))
    return tuple(out)


def leaf_heights(t: Tree, depth: int = 0) -> list[int]:
    if not t.children:
        return [depth]
    return [h for c in t.children for h in leaf_heights(c, depth + 1)]


# -- stable globe category as a congruence on generator words ------------------------

class UnionFind:
    def __init__(self):
        self.parent: dict = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def classes(self) -> dict:
        out: dict = {}
        for x in self.parent:
            out.setdefault(self.find(x), []).append(x)
        return out


def globe_words(m: int, n: int) -> list[tuple]:
    """Words ``(m, signs)`` for composites ``i_{n-1} ... i_m`` of generators."""
    return [(m, w) for w in itertools.product("+-", repeat=n - m)]


def globe_congruence(lo: int, hi: int) -> UnionFind:
    """Identify words related by ``i+_{j+1} i^e_j = i-_{j+1} i^e_j`` in any context."""
    uf = UnionFind()
    for m in range(lo, hi + 1):
        for n in range(m, hi + 1):
            for word in globe_words(m, n):
                uf.find(word)
                _, w = word
                for p in range(len(w) - 1):
                    flipped = w[:p + 1] + ("-" if w[p + 1] == "+" else "+",) + w[p + 2:]
                    uf.union(word, (m, flipped))
    return uf


# -- inert maps by exhaustive assignment -----------------------------------------------

def brute_inerts(s: StableTree, t: StableTree, lo: int, hi: int) -> list[dict]:
    """Every dimension-preserving assignment on ``[lo, hi]`` that commutes with
    boundaries and is the identity on tails below ``lo``."""
    doms = [c for k in range(lo, hi + 1) for c in sectors(s, k)]
    cods = [sectors(t, c.dim) for c in doms]
    out = []
    for choice in itertools.product(*cods):
        f = dict(zip(doms, choice))

        def image(c: Sector) -> Sector:
            return f[c] if c.dim >= lo else c

        if all(image(step(c)) == step(f[c]) for c in doms for step in (sector_source, sector_target)):
            out.append(f)
    return out


# -- evaluation ------------------------------------------------------------------------

def composable_pairs(X, j: int, k: int) -> int:
    """Pairs of ``k``-cells ``(x, y)`` with ``t_j y = s_j x``, by direct search."""
    return sum(1 for x in X.cells_at(k) for y in X.cells_at(k)
               if X.bd(y, k, j, "+") == X.bd(x, k, j, "-"))


def stable_cell_classes(T, k: int) -> list[frozenset]:
    """Colimit of the cell sets of a tower along inverse identifications."""
    uf = UnionFind()
    start = max(0, -k)
    for i in range(start, T.length):
        for x in T.entries[i].cells[k + i]:
            uf.find((i, x))
    for i in range(start, T.length - 1):
        back = {v: key for key, v in T.identifications[i][k + i].items()}
        for x in T.entries[i].cells[k + i]:
            uf.union((i, x), (i + 1, back[x]))
    return sorted((frozenset(c) for c in uf.classes().values()), key=sorted)
