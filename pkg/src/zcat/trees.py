"""Planar level trees, stable trees and their globular presentations.

A tree is stored as its nested tuple of children, so planar order is
positional and structural equality is tuple equality.  A stable tree is a
pair ``(offset, body)``: the functor on the integers that is a singleton at
every level below ``offset`` and agrees with ``body`` from ``offset`` on.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence


class TreeError(ValueError):
    pass


class EmptyLevelInterior(TreeError):
    pass


class NonMonotoneParent(TreeError):
    pass


class MultipleRoots(TreeError):
    pass


class InvalidSpine(TreeError):
    pass


@dataclass(frozen=True, order=True)
class Tree:
    children: tuple[Tree, ...] = ()

    def __str__(self) -> str:
        return "(" + "".join(str(c) for c in self.children) + ")"

    def __repr__(self) -> str:
        return f"Tree{self}"

    @property
    def height(self) -> int:
        if not self.children:
            return 0
        return 1 + max(c.height for c in self.children)

    @property
    def size(self) -> int:
        return 1 + sum(c.size for c in self.children)

    def is_suspension(self) -> bool:
        return len(self.children) == 1

    def node(self, path: Sequence[int]) -> Tree:
        t = self
        for i in path:
            t = t.children[i]
        return t

    def nodes_at(self, depth: int) -> list[tuple[int, ...]]:
        """Paths of the nodes at ``depth``, in planar order."""
        level = [()]
        for _ in range(depth):
            level = [p + (i,) for p in level for i in range(len(self.node(p).children))]
        return level

    def leaves(self) -> list[tuple[int, ...]]:
        """Leaf paths in planar (left-to-right) order."""
        if not self.children:
            return [()]
        return [(i,) + p for i, c in enumerate(self.children) for p in c.leaves()]

    def levels(self) -> tuple[list[int], list[list[int]]]:
        """Level sizes and, for each level above the root, the parent index of
        every node in the level below.  Inverse of :func:`make_tree`."""
        sizes, parents = [1], []
        level = [self]
        while True:
            nxt, par = [], []
            for j, t in enumerate(level):
                nxt.extend(t.children)
                par.extend([j] * len(t.children))
            if not nxt:
                return sizes, parents
            sizes.append(len(nxt))
            parents.append(par)
            level = nxt


Forest = tuple  # a tuple of Tree values; the empty forest is ()

D0 = Tree()


def globe(n: int) -> Tree:
    t = D0
    for _ in range(n):
        t = suspend(t)
    return t


def make_tree(level_sizes: Sequence[int], parents: Sequence[Sequence[int]]) -> Tree:
    """Build a tree from level sizes and per-level parent maps.

    ``parents[i]`` lists, for every node of level ``i + 1``, the index of its
    parent in level ``i``.  Trailing empty levels are dropped.
    """
    sizes = list(level_sizes)
    while len(sizes) > 1 and sizes[-1] == 0:
        sizes.pop()
    if not sizes or sizes[0] == 0:
        raise EmptyLevelInterior("a tree needs a root")
    if sizes[0] != 1:
        raise MultipleRoots(f"level 0 has {sizes[0]} nodes")
    if any(s <= 0 for s in sizes):
        raise EmptyLevelInterior(f"empty level below a non-empty one in {list(level_sizes)}")
    if len(parents) < len(sizes) - 1:
        raise TreeError("missing parent map")
    kids: list[list[list[int]]] = [[[] for _ in range(s)] for s in sizes]
    for i in range(1, len(sizes)):
        par = list(parents[i - 1])
        if len(par) != sizes[i]:
            raise TreeError(f"parent map of level {i} has {len(par)} entries, expected {sizes[i]}")
        for j, p in enumerate(par):
            if not 0 <= p < sizes[i - 1]:
                raise TreeError(f"parent index {p} out of range at level {i}")
            if j and p < par[j - 1]:
                raise NonMonotoneParent(f"level {i}: parent map {par} is not monotone")
            kids[i - 1][p].append(j)

    def build(i: int, j: int) -> Tree:
        if i + 1 >= len(sizes):
            return D0
        return Tree(tuple(build(i + 1, c) for c in kids[i][j]))

    return build(0, 0)


def suspend(t: Tree) -> Tree:
    return Tree((t,))


def desuspend_forest(t: Tree) -> Forest:
    return t.children


@dataclass(frozen=True)
class StableTree:
    offset: int
    body: Tree

    def __str__(self) -> str:
        return f"{self.offset}@{self.body}"

    @property
    def top(self) -> int:
        """Highest absolute level holding a node."""
        return self.offset + self.body.height

    def is_normal(self) -> bool:
        return not self.body.is_suspension()

    def level_size(self, k: int) -> int:
        if k < self.offset:
            return 1
        return len(self.body.nodes_at(k - self.offset)) if k <= self.top else 0


def normalize(s: StableTree) -> StableTree:
    z, t = s.offset, s.body
    while t.is_suspension():
        z, t = z + 1, t.children[0]
    return StableTree(z, t)


def equal_stable(s: StableTree, t: StableTree) -> bool:
    return normalize(s) == normalize(t)


def shift_stable(s: StableTree, k: int) -> StableTree:
    return StableTree(s.offset + k, s.body)


def infinite_suspension(t: Tree, k: int = 0) -> StableTree:
    """Image of ``t`` under the ``k``-shifted infinite suspension."""
    return normalize(StableTree(-k, t))


@dataclass(frozen=True)
class Spine:
    leaf_dims: tuple[int, ...]
    meet_dims: tuple[int, ...] = ()

    def __post_init__(self):
        n, m = self.leaf_dims, self.meet_dims
        if not n:
            raise InvalidSpine("a spine has at least one globe")
        if len(m) != len(n) - 1:
            raise InvalidSpine(f"{len(n)} leaves need {len(n) - 1} meets, got {len(m)}")
        for i, mi in enumerate(m):
            if not (mi < n[i] and mi < n[i + 1]):
                raise InvalidSpine(f"meet {mi} is not below both neighbours {n[i]}, {n[i + 1]}")

    def __str__(self) -> str:
        return "n=" + ",".join(map(str, self.leaf_dims)) + ";m=" + ",".join(map(str, self.meet_dims))

    def shift(self, k: int) -> Spine:
        return Spine(tuple(x + k for x in self.leaf_dims), tuple(x + k for x in self.meet_dims))


def spine(s: StableTree) -> Spine:
    leaves = s.body.leaves()
    n = tuple(s.offset + len(p) for p in leaves)
    m = []
    for p, q in zip(leaves, leaves[1:]):
        d = 0
        while d < min(len(p), len(q)) and p[d] == q[d]:
            d += 1
        m.append(s.offset + d)
    return Spine(n, tuple(m))


def _tree_of(ns: list[int], ms: list[int]) -> Tree:
    # dims are relative to the root, which sits at level 0
    if len(ns) == 1:
        return globe(ns[0])
    cuts = [i for i, x in enumerate(ms) if x == 0]
    if not cuts:
        return suspend(_tree_of([x - 1 for x in ns], [x - 1 for x in ms]))
    kids, start = [], 0
    for c in cuts + [len(ns) - 1]:
        seg_n, seg_m = ns[start:c + 1], ms[start:c]
        kids.append(_tree_of([x - 1 for x in seg_n], [x - 1 for x in seg_m]))
        start = c + 1
    return Tree(tuple(kids))


def from_spine(sp: Spine) -> StableTree:
    n, m = list(sp.leaf_dims), list(sp.meet_dims)
    base = min(n + m)
    return normalize(StableTree(base, _tree_of([x - base for x in n], [x - base for x in m])))


@lru_cache(maxsize=None)
def _trees_with(n: int) -> tuple[Tree, ...]:
    return tuple(Tree(f) for f in _forests_with(n - 1))


@lru_cache(maxsize=None)
def _forests_with(n: int) -> tuple[tuple[Tree, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for j in range(1, n + 1):
        for t in _trees_with(j):
            for rest in _forests_with(n - j):
                out.append((t,) + rest)
    return tuple(out)


def enumerate_trees(max_nodes: int) -> list[Tree]:
    """All planar trees with at most ``max_nodes`` nodes, by node count."""
    if max_nodes < 1:
        raise ValueError("max_nodes must be positive")
    return [t for n in range(1, max_nodes + 1) for t in _trees_with(n)]
