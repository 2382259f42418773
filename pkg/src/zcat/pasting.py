"""Sectors of pasting diagrams, inert maps and the stable globe category.

The ``k``-sectors of a stable tree are the gaps between consecutive children
of its level-``k`` nodes, outer gaps included.  Below the offset every level
is a single implicit node with one child, whose sectors are written with
``path=None``.  Inert maps are sector assignments over a finite window of
dimensions; below the window both trees are in their tail regime and the map
is the identity there.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator, Optional

from .trees import D0, StableTree, normalize, spine


class DimensionMismatch(ValueError):
    pass


class WindowTooSmall(ValueError):
    pass


@dataclass(frozen=True)
class Sector:
    dim: int
    path: Optional[tuple[int, ...]]  # None for the implicit tail node
    pos: int

    def __str__(self) -> str:
        node = "t" if self.path is None else ".".join(["r", *map(str, self.path)])
        return f"{self.dim}:({node},{self.pos})"

    def key(self):
        return (self.dim, self.path is not None, self.path or (), self.pos)


def sectors(s: StableTree, k: int) -> list[Sector]:
    s = normalize(s)
    if k < s.offset:
        return [Sector(k, None, 0), Sector(k, None, 1)]
    if k > s.top:
        return []
    return [Sector(k, p, i) for p in s.body.nodes_at(k - s.offset)
            for i in range(len(s.body.node(p).children) + 1)]


def _parent(c: Sector) -> tuple[Optional[tuple[int, ...]], int]:
    if c.path is None or c.path == ():
        return None, 0
    return c.path[:-1], c.path[-1]


def sector_source(c: Sector) -> Sector:
    u, j = _parent(c)
    return Sector(c.dim - 1, u, j)


def sector_target(c: Sector) -> Sector:
    u, j = _parent(c)
    return Sector(c.dim - 1, u, j + 1)


def iterated_boundary(c: Sector, dim: int, side: str) -> Sector:
    step = sector_source if side == "-" else sector_target
    while c.dim > dim:
        c = step(c)
    return c


# -- stable globe category ---------------------------------------------------

@dataclass(frozen=True, order=True)
class GlobeMorphism:
    dom: int
    cod: int
    sign: str  # '+', '-' or 'id'

    def __post_init__(self):
        if self.dom > self.cod:
            raise DimensionMismatch(f"no globe map {self.dom} -> {self.cod}")
        if (self.sign == "id") != (self.dom == self.cod) or self.sign not in "+-id":
            raise ValueError(f"bad sign {self.sign!r} for {self.dom} -> {self.cod}")


def globe_hom(m: int, n: int) -> set[GlobeMorphism]:
    if m > n:
        return set()
    if m == n:
        return {GlobeMorphism(m, n, "id")}
    return {GlobeMorphism(m, n, "+"), GlobeMorphism(m, n, "-")}


def compose_globe(g: GlobeMorphism, f: GlobeMorphism) -> GlobeMorphism:
    """``g`` after ``f``.  A composite of generators only remembers the sign
    of the first (lowest) generator, since any later one may be flipped."""
    if f.cod != g.dom:
        raise DimensionMismatch(f"cannot compose {g} after {f}")
    if f.sign == "id":
        return g
    return GlobeMorphism(f.dom, g.cod, f.sign)


# -- inert maps ----------------------------------------------------------------

def canonical_window(s: StableTree, t: StableTree) -> tuple[int, int]:
    s, t = normalize(s), normalize(t)
    return min(s.offset, t.offset), max(s.top, t.top)


@dataclass(frozen=True, eq=False)
class InertMap:
    source: StableTree
    target: StableTree
    window: tuple[int, int]
    assignment: dict = field(repr=False)  # Sector -> Sector for dims in window

    def __post_init__(self):
        object.__setattr__(self, "source", normalize(self.source))
        object.__setattr__(self, "target", normalize(self.target))
        lo, hi = self.window
        if lo > min(self.source.offset, self.target.offset) or hi < self.source.top:
            raise WindowTooSmall(f"window {self.window} does not cover {self.source} -> {self.target}")

    def __call__(self, c: Sector) -> Sector:
        if c.dim < self.window[0]:
            return c
        return self.assignment[c]

    def domain(self, lo=None, hi=None) -> Iterator[Sector]:
        lo = self.window[0] if lo is None else lo
        hi = self.window[1] if hi is None else hi
        for k in range(lo, hi + 1):
            yield from sectors(self.source, k)

    def _signature(self):
        lo = min(self.source.offset, self.target.offset)
        return (self.source, self.target,
                tuple((c, self(c)) for c in self.domain(lo, self.source.top)))

    def __eq__(self, other):
        return isinstance(other, InertMap) and self._signature() == other._signature()

    def __hash__(self):
        return hash(self._signature())

    def violations(self) -> list[str]:
        """Reasons this assignment is not a map of pasting diagrams."""
        out = []
        for c in self.domain():
            if c not in self.assignment:
                out.append(f"{c} unassigned")
                continue
            d = self.assignment[c]
            if d.dim != c.dim or d not in set(sectors(self.target, d.dim)):
                out.append(f"{c} -> {d} is not a sector of the target in dim {c.dim}")
                continue
            for side, step in (("source", sector_source), ("target", sector_target)):
                if self(step(c)) != step(d):
                    out.append(f"{side} of {c} not preserved")
        return out

    def is_valid(self) -> bool:
        return not self.violations()

    def table(self) -> str:
        lines = []
        for k in range(self.window[0], self.window[1] + 1):
            row = [f"{c}->{self(c)}" for c in sectors(self.source, k)]
            lines.append(f"{k}: " + " ".join(row))
        return "\n".join(lines)


def identity_inert(s: StableTree) -> InertMap:
    s = normalize(s)
    w = (s.offset, s.top)
    return InertMap(s, s, w, {c: c for k in range(w[0], w[1] + 1) for c in sectors(s, k)})


def enumerate_inerts(s: StableTree, t: StableTree, window=None) -> list[InertMap]:
    """All boundary-compatible sector assignments ``s -> t``.

    Sectors are assigned from the top dimension down: a sector that bounds an
    already-assigned sector is forced, the others range over all target
    sectors of their dimension.
    """
    s, t = normalize(s), normalize(t)
    lo, hi = window if window is not None else canonical_window(s, t)
    if lo > min(s.offset, t.offset) or hi < s.top:
        raise WindowTooSmall(f"window {(lo, hi)} does not cover {s} -> {t}")

    results = []

    def descend(k: int, assigned: dict):
        if k < lo:
            results.append(InertMap(s, t, (lo, hi), dict(assigned)))
            return
        forced: dict = {}
        for c in sectors(s, k + 1) if k + 1 <= hi else []:
            d = assigned[c]
            for step in (sector_source, sector_target):
                want = step(d)
                have = forced.setdefault(step(c), want)
                if have != want:
                    return
        mine = sectors(s, k)
        theirs = sectors(t, k)
        free = [c for c in mine if c not in forced]
        if not set(forced.values()) <= set(theirs):
            return
        for choice in itertools.product(theirs, repeat=len(free)):
            nxt = dict(assigned)
            nxt.update(forced)
            nxt.update(zip(free, choice))
            if k == lo and not _tail_ok(nxt, mine):
                continue
            descend(k - 1, nxt)

    def _tail_ok(assigned, mine):
        # below the window the map is the identity on tail sectors
        return all(sector_source(assigned[c]) == sector_source(c)
                   and sector_target(assigned[c]) == sector_target(c) for c in mine)

    descend(hi, {})
    results.sort(key=lambda f: [f(c).key() for c in f.domain()])
    return results


def compose_inert(g: InertMap, f: InertMap) -> InertMap:
    if f.target != g.source:
        raise DimensionMismatch(f"cannot compose: {f.target} is not {g.source}")
    lo = min(f.window[0], g.window[0])
    hi = max(f.window[1], g.window[1])
    assignment = {c: g(f(c)) for k in range(lo, hi + 1) for c in sectors(f.source, k)}
    return InertMap(f.source, g.target, (lo, hi), assignment)


def _shift_sector(c: Sector, k: int) -> Sector:
    return Sector(c.dim + k, c.path, c.pos)


def suspend_inert(f: InertMap) -> InertMap:
    src = StableTree(f.source.offset + 1, f.source.body)
    tgt = StableTree(f.target.offset + 1, f.target.body)
    return InertMap(src, tgt, (f.window[0] + 1, f.window[1] + 1),
                    {_shift_sector(c, 1): _shift_sector(d, 1) for c, d in f.assignment.items()})


def globe_inclusion(t: StableTree, c: Sector) -> InertMap:
    """The inert map from the stable globe of dimension ``c.dim`` picking ``c``."""
    t = normalize(t)
    g = StableTree(c.dim, D0)
    lo = min(c.dim, t.offset)
    assignment = {Sector(c.dim, (), 0): c}
    for k in range(lo, c.dim):
        assignment[Sector(k, None, 0)] = iterated_boundary(c, k, "-")
        assignment[Sector(k, None, 1)] = iterated_boundary(c, k, "+")
    return InertMap(g, t, (lo, c.dim), assignment)


def globe_inert(g: GlobeMorphism) -> InertMap:
    """Realise a stable globe morphism as an inert map of stable globes."""
    target = StableTree(g.cod, D0)
    if g.sign == "id":
        return identity_inert(target)
    return globe_inclusion(target, Sector(g.dom, None, 0 if g.sign == "-" else 1))


@dataclass(frozen=True)
class SpineCone:
    """Inclusions of the globes of a globular presentation, with the legs
    relating each meet globe to its two neighbouring leaf globes."""
    tree: StableTree
    leaves: tuple[InertMap, ...]
    meets: tuple[InertMap, ...]

    @property
    def maps(self) -> list[InertMap]:
        out = []
        for i, leaf in enumerate(self.leaves):
            out.append(leaf)
            if i < len(self.meets):
                out.append(self.meets[i])
        return out

    def triangles(self):
        sp = spine(self.tree)
        for i, meet in enumerate(self.meets):
            m = sp.meet_dims[i]
            left = compose_inert(self.leaves[i], globe_inert(GlobeMorphism(m, sp.leaf_dims[i], "+")))
            right = compose_inert(self.leaves[i + 1], globe_inert(GlobeMorphism(m, sp.leaf_dims[i + 1], "-")))
            yield meet, left, right

    def commutes(self) -> bool:
        return all(meet == left == right for meet, left, right in self.triangles())


def spine_cone(s: StableTree) -> SpineCone:
    s = normalize(s)
    sp = spine(s)
    tops = [Sector(s.offset + len(p), p, 0) for p in s.body.leaves()]
    leaves = tuple(globe_inclusion(s, c) for c in tops)
    meets = tuple(globe_inclusion(s, iterated_boundary(c, m, "+"))
                  for c, m in zip(tops, sp.meet_dims))
    return SpineCone(s, leaves, meets)
