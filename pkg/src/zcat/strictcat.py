"""Finite strict Z-categories presented on a dimension window.

A :class:`WindowZCat` on ``[lo, hi]`` is trivial below ``lo`` (one cell,
written ``POINT``, in every dimension) and has only identities above ``hi``.
Compositions are stored as ``comp[(j, k)][(x, y)] = x o_j y`` ("x after y"),
defined exactly when the ``j``-target of ``y`` is the ``j``-source of ``x``.
Compositions along dimensions below ``lo`` are not part of the data.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Iterable, Optional

from .pasting import WindowTooSmall, sector_source, sector_target, sectors
from .trees import StableTree, normalize, spine

POINT = "*"


class CategoryError(ValueError):
    pass


class DuplicateCell(CategoryError):
    pass


class InvalidCell(CategoryError):
    pass


class DimOutOfWindow(CategoryError):
    pass


class MonoidError(ValueError):
    pass


class NonAssociative(MonoidError):
    pass


class NonCommutative(MonoidError):
    pass


class NoUnit(MonoidError):
    pass


@dataclass(frozen=True)
class WindowZCat:
    lo: int
    hi: int
    cells: dict  # k -> tuple of names
    src: dict  # k -> {k-cell: (k-1)-cell}, lo < k <= hi
    tgt: dict
    unit: dict  # k -> {(k-1)-cell: k-cell}, lo < k <= hi
    comp: dict  # (j, k) -> {(x, y): z}, lo <= j < k <= hi
    basepoint: Optional[str] = None
    _index: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        self._validate()
        object.__setattr__(self, "_index", {
            k: {x: i for i, x in enumerate(self.cells[k])} for k in self.dims})

    @property
    def dims(self) -> range:
        return range(self.lo, self.hi + 1)

    @property
    def window(self) -> tuple[int, int]:
        return self.lo, self.hi

    def _validate(self):
        if self.lo > self.hi:
            raise CategoryError(f"empty window [{self.lo}, {self.hi}]")
        for k in self.dims:
            names = self.cells.get(k)
            if names is None:
                raise CategoryError(f"no cells listed in dim {k}")
            if len(set(names)) != len(names):
                raise DuplicateCell(f"duplicate cell name in dim {k}")
            if POINT in names:
                raise InvalidCell(f"{POINT!r} is reserved")
        if set(self.cells) != set(self.dims):
            raise CategoryError("cells listed outside the window")
        for k in self.dims:
            if k == self.lo:
                continue
            here, below = set(self.cells[k]), set(self.cells[k - 1])
            for name, table, dom, cod in (("src", self.src, here, below),
                                          ("tgt", self.tgt, here, below),
                                          ("unit", self.unit, below, here)):
                m = table.get(k, {})
                if set(m) != dom:
                    raise CategoryError(f"{name} {k} is not defined on exactly the right cells")
                bad = [v for v in m.values() if v not in cod]
                if bad:
                    raise InvalidCell(f"{name} {k} hits unknown cell {bad[0]!r}")
        for (j, k), table in self.comp.items():
            if not (self.lo <= j < k <= self.hi):
                raise CategoryError(f"composition ({j}, {k}) outside the window")
            here = set(self.cells[k])
            for (x, y), z in table.items():
                if x not in here or y not in here or z not in here:
                    raise InvalidCell(f"comp {j} {k}: {x} {y} -> {z} names an unknown cell")
        if self.basepoint is not None and self.basepoint not in self.cells[self.lo]:
            raise InvalidCell(f"basepoint {self.basepoint!r} is not a {self.lo}-cell")

    # -- cell-level access ---------------------------------------------------

    def cells_at(self, k: int) -> tuple:
        if k < self.lo:
            return (POINT,)
        if k > self.hi:
            raise DimOutOfWindow(f"dim {k} above window [{self.lo}, {self.hi}]")
        return self.cells[k]

    def s(self, k: int, x: str) -> str:
        return POINT if k <= self.lo else self.src[k][x]

    def t(self, k: int, x: str) -> str:
        return POINT if k <= self.lo else self.tgt[k][x]

    def bd(self, x: str, k: int, j: int, side: str) -> str:
        """Iterated source (``side='-'``) or target of the ``k``-cell ``x`` in dim ``j``."""
        step = self.s if side == "-" else self.t
        while k > j:
            x = step(k, x)
            k -= 1
        return x

    def u(self, k: int, x: str) -> str:
        """Unit in dim ``k`` of the ``(k-1)``-cell ``x``."""
        if k < self.lo:
            return POINT
        if k == self.lo:
            if self.basepoint is None:
                raise CategoryError("unit of the point needs a basepoint")
            return self.basepoint
        return self.unit[k][x]

    def uu(self, x: str, j: int, k: int) -> str:
        for d in range(j + 1, k + 1):
            x = self.u(d, x)
        return x

    def is_unit(self, k: int, x: str) -> bool:
        if k <= self.lo:
            return k < self.lo or x == self.basepoint
        return x in self.unit[k].values()

    def composable(self, j: int, k: int, x: str, y: str) -> bool:
        return self.bd(y, k, j, "+") == self.bd(x, k, j, "-")

    def c(self, j: int, k: int, x: str, y: str) -> Optional[str]:
        if k < self.lo:
            return POINT
        return self.comp.get((j, k), {}).get((x, y))

    def with_basepoint(self, b: Optional[str]) -> WindowZCat:
        return replace(self, basepoint=b)

    def order(self, k: int, x: str) -> int:
        return self._index[k][x]

    def size(self) -> int:
        return sum(len(self.cells[k]) for k in self.dims)


def make_cat(lo, hi, cells, src=None, tgt=None, unit=None, comp=None, basepoint=None) -> WindowZCat:
    return WindowZCat(lo, hi, {k: tuple(v) for k, v in cells.items()},
                      {k: dict(v) for k, v in (src or {}).items()},
                      {k: dict(v) for k, v in (tgt or {}).items()},
                      {k: dict(v) for k, v in (unit or {}).items()},
                      {jk: dict(v) for jk, v in (comp or {}).items()},
                      basepoint)


# -- axioms --------------------------------------------------------------------

@dataclass
class AxiomReport:
    violations: dict = field(default_factory=dict)  # family -> first failing instance
    counts: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, family: str, instance: str):
        self.violations.setdefault(family, instance)
        self.counts[family] = self.counts.get(family, 0) + 1

    def __str__(self):
        if self.passed:
            return "pass"
        return "\n".join(f"{fam}: {inst} ({self.counts[fam]} total)"
                         for fam, inst in self.violations.items())


def check_axioms(X: WindowZCat) -> AxiomReport:
    r = AxiomReport()
    lo, hi = X.window
    for k in range(lo + 2, hi + 1):
        for x in X.cells[k]:
            if X.s(k - 1, X.s(k, x)) != X.s(k - 1, X.t(k, x)):
                r.add("globularity", f"ss != st at {k}-cell {x}")
            if X.t(k - 1, X.s(k, x)) != X.t(k - 1, X.t(k, x)):
                r.add("globularity", f"ts != tt at {k}-cell {x}")
    for k in range(lo + 1, hi + 1):
        for y in X.cells[k - 1]:
            e = X.u(k, y)
            if X.s(k, e) != y or X.t(k, e) != y:
                r.add("unit-boundary", f"unit {e} of {y} has wrong boundary")
    for j in range(lo, hi):
        for k in range(j + 1, hi + 1):
            _check_composition(X, j, k, r)
    for k in range(lo + 2, hi + 1):
        for j in range(lo, k - 1):
            for x, y in itertools.product(X.cells[k - 1], repeat=2):
                xy = X.c(j, k - 1, x, y)
                if xy is None:
                    continue
                got = X.c(j, k, X.u(k, x), X.u(k, y))
                if got != X.u(k, xy):
                    r.add("unit-comp", f"unit({x} o{j} {y}) != unit {x} o{j} unit {y}")
    for k in range(lo + 2, hi + 1):
        for j in range(lo, k):
            for j2 in range(j + 1, k):
                _check_interchange(X, j, j2, k, r)
    return r


def _check_composition(X: WindowZCat, j: int, k: int, r: AxiomReport):
    table = X.comp.get((j, k), {})
    cells = X.cells[k]
    for x, y in itertools.product(cells, repeat=2):
        ok = X.composable(j, k, x, y)
        if ok != ((x, y) in table):
            what = "missing" if ok else "defined on a non-composable pair"
            r.add("comp-domain", f"comp {j} {k}: ({x}, {y}) {what}")
    for (x, y), z in table.items():
        if not X.composable(j, k, x, y):
            continue
        if j == k - 1:
            if X.s(k, z) != X.s(k, y) or X.t(k, z) != X.t(k, x):
                r.add("comp-boundary", f"{x} o{j} {y} = {z} has wrong boundary")
        else:
            for side, f in (("source", X.s), ("target", X.t)):
                want = X.c(j, k - 1, f(k, x), f(k, y))
                if f(k, z) != want:
                    r.add("comp-boundary", f"{side} of {x} o{j} {y} = {z} is not {want}")
    for x in cells:
        left = X.uu(X.bd(x, k, j, "-"), j, k)
        right = X.uu(X.bd(x, k, j, "+"), j, k)
        if X.c(j, k, x, left) != x:
            r.add("unit-law", f"{x} o{j} {left} != {x}")
        if X.c(j, k, right, x) != x:
            r.add("unit-law", f"{right} o{j} {x} != {x}")
    for (x, y), xy in table.items():
        for z in cells:
            yz = table.get((y, z))
            if yz is None:
                continue
            a, b = table.get((xy, z)), table.get((x, yz))
            if a != b or a is None:
                r.add("associativity", f"({x} o{j} {y}) o{j} {z} = {a} but {x} o{j} ({y} o{j} {z}) = {b}")


def _check_interchange(X: WindowZCat, j: int, j2: int, k: int, r: AxiomReport):
    inner = X.comp.get((j2, k), {})
    outer = X.comp.get((j, k), {})
    pairs = list(inner.items())
    for (x, y), xy in pairs:
        for (x2, y2), xy2 in pairs:
            lhs = outer.get((xy, xy2))
            if lhs is None:
                continue
            a, b = outer.get((x, x2)), outer.get((y, y2))
            rhs = None if a is None or b is None else inner.get((a, b))
            if lhs != rhs:
                r.add("interchange", f"({x} o{j2} {y}) o{j} ({x2} o{j2} {y2}) = {lhs} but "
                                     f"({x} o{j} {x2}) o{j2} ({y} o{j} {y2}) = {rhs}")


# -- Segal evaluation ------------------------------------------------------------

def _check_fits(X: WindowZCat, s: StableTree):
    s = normalize(s)
    if s.top > X.hi:
        raise WindowTooSmall(f"{s} reaches dim {s.top} above window top {X.hi}")
    return s


def evaluate(X: WindowZCat, s: StableTree) -> list[tuple]:
    """Labelings of the globular presentation of ``s``: tuples of cells, one
    per leaf globe, glued along the meet globes."""
    s = _check_fits(X, s)
    sp = spine(s)
    n, m = sp.leaf_dims, sp.meet_dims
    out = []

    def extend(prefix):
        i = len(prefix)
        if i == len(n):
            out.append(tuple(prefix))
            return
        for x in X.cells_at(n[i]):
            if i and X.bd(prefix[-1], n[i - 1], m[i - 1], "+") != X.bd(x, n[i], m[i - 1], "-"):
                continue
            prefix.append(x)
            extend(prefix)
            prefix.pop()

    extend([])
    return out


def _sector_plan(s: StableTree, lo: int):
    """Sectors of ``s`` in dims ``[lo, top]``, top-down, each with the
    already-placed sectors it bounds as ``(index, side)`` pairs."""
    order = [c for k in range(s.top, lo - 1, -1) for c in sectors(s, k)]
    where = {c: i for i, c in enumerate(order)}
    bounds = [[] for _ in order]
    for i, c in enumerate(order):
        if c.dim - 1 >= lo:
            bounds[where[sector_source(c)]].append((i, "-"))
            bounds[where[sector_target(c)]].append((i, "+"))
    return order, bounds


def evaluate_oracle(X: WindowZCat, s: StableTree) -> list[dict]:
    """All labelings of every sector of ``s`` by cells of matching dimension
    that commute with sector boundaries; sectors below the window carry the
    point."""
    s = _check_fits(X, s)
    order, bounds = _sector_plan(s, X.lo)
    lab = [None] * len(order)
    out = []

    def place(i):
        if i == len(order):
            out.append(dict(zip(order, lab)))
            return
        k = order[i].dim
        if bounds[i]:
            vals = {(X.s if side == "-" else X.t)(k + 1, lab[j]) for j, side in bounds[i]}
            if len(vals) != 1:
                return
            choices = vals
        else:
            choices = X.cells_at(k)
        for x in choices:
            lab[i] = x
            place(i + 1)
        lab[i] = None

    place(0)
    return out


def leaf_restriction(s: StableTree, labeling: dict) -> tuple:
    """Restrict a sector labeling to the top sectors of the leaves."""
    s = normalize(s)
    from .pasting import Sector
    out = []
    for p in s.body.leaves():
        c = Sector(s.offset + len(p), p, 0)
        out.append(labeling.get(c, POINT))
    return tuple(out)


def oracle_agrees(X: WindowZCat, s: StableTree) -> bool:
    """The leaf restriction is a bijection from oracle labelings onto the
    spine evaluation."""
    direct = evaluate(X, s)
    restricted = [leaf_restriction(s, lab) for lab in evaluate_oracle(X, s)]
    return len(set(restricted)) == len(restricted) and set(restricted) == set(direct) \
        and len(direct) == len(set(direct))


# -- invertibility and univalence ------------------------------------------------

def _inverses(X: WindowZCat, k: int, f: str, candidates: Iterable[str]):
    j = k - 1
    e_src, e_tgt = X.u(k, X.s(k, f)), X.u(k, X.t(k, f))
    return ([g for g in candidates if X.c(j, k, g, f) == e_src],
            [h for h in candidates if X.c(j, k, f, h) == e_tgt])


def strict_iso_cells(X: WindowZCat, k: int) -> list[str]:
    if not X.lo < k <= X.hi:
        raise DimOutOfWindow(f"strict isomorphisms need dim in ({X.lo}, {X.hi}], got {k}")
    out = []
    for f in X.cells[k]:
        lefts, rights = _inverses(X, k, f, X.cells[k])
        if lefts and rights:
            assert set(lefts) == set(rights) and len(lefts) == 1, \
                f"left and right inverses of {f} differ: {lefts} vs {rights}"
            out.append(f)
    return out


def check_stable_univalence(X: WindowZCat) -> tuple[bool, Optional[tuple[int, str]]]:
    for k in range(X.lo + 1, X.hi + 1):
        for f in strict_iso_cells(X, k):
            if not X.is_unit(k, f):
                return False, (k, f)
    return True, None


def omega_equivalences(X: WindowZCat) -> dict[int, list[str]]:
    """Coinductively invertible cells in each dim of ``(lo, hi]``, top-down."""
    eq: dict[int, list[str]] = {}
    for k in range(X.hi, X.lo, -1):
        if k == X.hi:
            eq[k] = strict_iso_cells(X, k)
            continue
        good = set(eq[k + 1])
        witnesses = {}
        for a in good:
            witnesses.setdefault((X.s(k + 1, a), X.t(k + 1, a)), True)
        found = []
        for f in X.cells[k]:
            for g in X.cells[k]:
                if X.s(k, g) != X.t(k, f) or X.t(k, g) != X.s(k, f):
                    continue
                gf, fg = X.c(k - 1, k, g, f), X.c(k - 1, k, f, g)
                if (gf, X.u(k, X.s(k, f))) in witnesses and (fg, X.u(k, X.t(k, f))) in witnesses:
                    found.append(f)
                    break
        eq[k] = found
    return dict(sorted(eq.items()))


# -- loops, suspension, shifts ------------------------------------------------------

def _restrict(X: WindowZCat, keep: dict, shift: int, lo: int, hi: int, basepoint, drop_below: int):
    """Sub-structure on the cells in ``keep`` (by original dim), reindexed by
    ``shift``; compositions along dims below ``drop_below`` are forgotten."""
    cells = {k + shift: tuple(x for x in X.cells[k] if x in keep[k]) for k in range(lo - shift, hi - shift + 1)}
    src, tgt, unit = {}, {}, {}
    for k in range(lo - shift + 1, hi - shift + 1):
        src[k + shift] = {x: X.src[k][x] for x in cells[k + shift]}
        tgt[k + shift] = {x: X.tgt[k][x] for x in cells[k + shift]}
        unit[k + shift] = {x: X.unit[k][x] for x in cells[k - 1 + shift]}
    comp = {}
    for (j, k), table in X.comp.items():
        if j < drop_below or k + shift > hi or j + shift < lo:
            continue
        comp[(j + shift, k + shift)] = {xy: z for xy, z in table.items()
                                        if xy[0] in keep[k] and xy[1] in keep[k]}
    return make_cat(lo, hi, cells, src, tgt, unit, comp, basepoint)


def loops(X: WindowZCat) -> WindowZCat:
    """Endomorphism omega-category of the basepoint, pointed at its unit."""
    if X.lo != 0 or X.basepoint is None:
        raise CategoryError("loops needs a pointed window omega-category")
    return bipointed_loops(X, X.basepoint, X.basepoint).with_basepoint(
        X.u(1, X.basepoint) if X.hi >= 1 else X.basepoint)


def bipointed_loops(C: WindowZCat, x: str, y: str) -> WindowZCat:
    """The hom omega-category ``C(x, y)``, dims lowered by one."""
    if C.lo != 0:
        raise CategoryError("hom categories need a window starting at 0")
    for p in (x, y):
        if p not in C.cells[0]:
            raise InvalidCell(f"{p!r} is not a 0-cell")
    if C.hi == 0:
        # only the identity of x, named after x as all identities above the window are
        return make_cat(0, 0, {0: (x,) if x == y else ()})
    keep = {k: {c for c in C.cells[k] if C.bd(c, k, 0, "-") == x and C.bd(c, k, 0, "+") == y}
            for k in C.dims}
    return _restrict(C, keep, -1, 0, C.hi - 1, None, drop_below=1)


def _fresh(base: str, taken) -> str:
    name = base
    while name in taken:
        name += "'"
    return name


def suspend_cat(C: WindowZCat) -> WindowZCat:
    """Two new objects with hom omega-category ``C`` between them, pointed at the first."""
    if C.lo != 0:
        raise CategoryError("suspension needs a window starting at 0")
    hi = C.hi + 1
    a, b = _fresh("N", set()), _fresh("S", {"N"})
    poles = {0: (a, b)}
    for k in range(1, hi + 1):
        taken = set(C.cells[k - 1])
        pa = _fresh(f"1{poles[k - 1][0]}", taken)
        pb = _fresh(f"1{poles[k - 1][1]}", taken | {pa})
        poles[k] = (pa, pb)
    cells = {0: (a, b)}
    src, tgt, unit, comp = {}, {}, {}, {}
    for k in range(1, hi + 1):
        inner = C.cells[k - 1]
        cells[k] = poles[k] + tuple(inner)
        src[k] = {poles[k][0]: poles[k - 1][0], poles[k][1]: poles[k - 1][1]}
        tgt[k] = dict(src[k])
        unit[k] = {poles[k - 1][0]: poles[k][0], poles[k - 1][1]: poles[k][1]}
        if k == 1:
            src[k].update({x: a for x in inner})
            tgt[k].update({x: b for x in inner})
        else:
            src[k].update(C.src[k - 1])
            tgt[k].update(C.tgt[k - 1])
            unit[k].update(C.unit[k - 1])
        for j in range(0, k):
            table = {(p, p): p for p in poles[k]}
            if j == 0:
                for x in inner:
                    table[(x, poles[k][0])] = x
                    table[(poles[k][1], x)] = x
            else:
                table.update(C.comp.get((j - 1, k - 1), {}))
            comp[(j, k)] = table
    return make_cat(0, hi, cells, src, tgt, unit, comp, a)


def shift_cat(X: WindowZCat, k: int) -> WindowZCat:
    return make_cat(X.lo + k, X.hi + k,
                    {d + k: v for d, v in X.cells.items()},
                    {d + k: v for d, v in X.src.items()},
                    {d + k: v for d, v in X.tgt.items()},
                    {d + k: v for d, v in X.unit.items()},
                    {(j + k, d + k): v for (j, d), v in X.comp.items()},
                    X.basepoint)


def extend_below(X: WindowZCat, lo: int) -> WindowZCat:
    """Present ``X`` on a window starting at ``lo``.

    Only possible when the bottom dimension holds a single cell; the new
    compositions along the added dims agree with the one along the old bottom
    dimension, as the Eckmann-Hilton argument forces.
    """
    if lo >= X.lo:
        return X
    if len(X.cells[X.lo]) != 1:
        raise CategoryError(f"cannot extend below dim {X.lo}: it has {len(X.cells[X.lo])} cells")
    o = X.cells[X.lo][0]
    cells = dict(X.cells)
    src, tgt, unit, comp = dict(X.src), dict(X.tgt), dict(X.unit), dict(X.comp)
    for k in range(lo, X.lo):
        cells[k] = (o,)
    for k in range(lo + 1, X.lo + 1):
        src[k] = {o: o}
        tgt[k] = {o: o}
        unit[k] = {o: o}
    for j in range(lo, X.lo):
        for k in range(j + 1, X.hi + 1):
            comp[(j, k)] = {(o, o): o} if k <= X.lo else dict(X.comp.get((X.lo, k), {}))
    return make_cat(lo, X.hi, cells, src, tgt, unit, comp, o)


def extend_above(X: WindowZCat, hi: int) -> WindowZCat:
    """Materialise the identity cells up to dim ``hi``; each is named after
    the top-dimensional cell it is an identity of."""
    if hi <= X.hi:
        return X
    cells, src, tgt, unit, comp = dict(X.cells), dict(X.src), dict(X.tgt), dict(X.unit), dict(X.comp)
    top = X.cells[X.hi]
    for k in range(X.hi + 1, hi + 1):
        cells[k] = top
        src[k] = tgt[k] = unit[k] = {x: x for x in top}
        for j in range(X.lo, k):
            if j >= X.hi:
                comp[(j, k)] = {(x, x): x for x in top}
            else:
                comp[(j, k)] = dict(X.comp.get((j, X.hi), {}))
    return make_cat(X.lo, hi, cells, src, tgt, unit, comp, X.basepoint)


def product_cat(X: WindowZCat, Y: WindowZCat) -> WindowZCat:
    """Cartesian product, with cells named ``x|y``, on the union of the two
    windows (a factor is extended below, so its bottom must be a single cell)."""
    lo, hi = min(X.lo, Y.lo), max(X.hi, Y.hi)
    X, Y = extend_above(extend_below(X, lo), hi), extend_above(extend_below(Y, lo), hi)

    def pair(x, y):
        return f"{x}|{y}"

    cells = {k: tuple(pair(x, y) for x in X.cells[k] for y in Y.cells[k]) for k in range(lo, hi + 1)}
    src, tgt, unit = {}, {}, {}
    for k in range(lo + 1, hi + 1):
        src[k] = {pair(x, y): pair(X.src[k][x], Y.src[k][y]) for x in X.cells[k] for y in Y.cells[k]}
        tgt[k] = {pair(x, y): pair(X.tgt[k][x], Y.tgt[k][y]) for x in X.cells[k] for y in Y.cells[k]}
        unit[k] = {pair(x, y): pair(X.unit[k][x], Y.unit[k][y]) for x in X.cells[k - 1] for y in Y.cells[k - 1]}
    comp = {}
    for jk in set(X.comp) | set(Y.comp):
        comp[jk] = {(pair(x, y), pair(x2, y2)): pair(z, w)
                    for (x, x2), z in X.comp.get(jk, {}).items()
                    for (y, y2), w in Y.comp.get(jk, {}).items()}
    bp = None if X.basepoint is None or Y.basepoint is None else pair(X.basepoint, Y.basepoint)
    return make_cat(lo, hi, cells, src, tgt, unit, comp, bp)


# -- monoids and Eilenberg-MacLane objects ---------------------------------------------

@dataclass(frozen=True)
class Monoid:
    elements: tuple
    table: dict  # (x, y) -> x*y

    @property
    def unit(self) -> str:
        for e in self.elements:
            if all(self.table[(e, x)] == x == self.table[(x, e)] for x in self.elements):
                return e
        raise NoUnit("no two-sided unit")

    def validate(self, commutative: bool = True):
        els = self.elements
        for x, y in itertools.product(els, repeat=2):
            if self.table.get((x, y)) not in els:
                raise MonoidError(f"{x}*{y} is not an element")
        for x, y, z in itertools.product(els, repeat=3):
            if self.table[(self.table[(x, y)], z)] != self.table[(x, self.table[(y, z)])]:
                raise NonAssociative(f"({x}*{y})*{z} != {x}*({y}*{z})")
        self.unit
        if commutative:
            for x, y in itertools.product(els, repeat=2):
                if self.table[(x, y)] != self.table[(y, x)]:
                    raise NonCommutative(f"{x}*{y} != {y}*{x}")

    @classmethod
    def from_function(cls, elements, mul):
        els = tuple(str(e) for e in elements)
        lookup = dict(zip(els, elements))
        back = {v: k for k, v in lookup.items()}
        return cls(els, {(x, y): back[mul(lookup[x], lookup[y])] for x in els for y in els})


def cyclic(n: int) -> Monoid:
    return Monoid.from_function(range(n), lambda x, y: (x + y) % n)


def truncated_naturals(cap: int) -> Monoid:
    return Monoid.from_function(range(cap + 1), lambda x, y: min(x + y, cap))


def max_semilattice(top: int) -> Monoid:
    return Monoid.from_function(range(top + 1), max)


def boolean_or() -> Monoid:
    return Monoid.from_function((0, 1), lambda x, y: x | y)


def klein_four() -> Monoid:
    return Monoid.from_function(range(4), lambda x, y: x ^ y)


def bool_matrices() -> Monoid:
    """The non-commutative monoid of 2x2 boolean matrices under product."""
    mats = [tuple(bits) for bits in itertools.product((0, 1), repeat=4)]

    def mul(p, q):
        a, b, c, d = p
        e, f, g, h = q
        return (int(a and e or b and g), int(a and f or b and h),
                int(c and e or d and g), int(c and f or d and h))

    names = {m: "".join(map(str, m)) for m in mats}
    return Monoid(tuple(names[m] for m in mats),
                  {(names[p], names[q]): names[mul(p, q)] for p in mats for q in mats})


def _em(M: Monoid, n: int, lo: Optional[int]) -> WindowZCat:
    o = "o"
    e = M.unit
    cells = {n - 1: (o,), n: M.elements}
    X = make_cat(n - 1, n, cells,
                 src={n: {x: o for x in M.elements}}, tgt={n: {x: o for x in M.elements}},
                 unit={n: {o: e}}, comp={(n - 1, n): dict(M.table)}, basepoint=o)
    return extend_below(X, lo) if lo is not None else X


def eilenberg_maclane(M: Monoid, n: int, lo: Optional[int] = None) -> WindowZCat:
    """One cell below ``n``, the elements of ``M`` in dim ``n``, identities above.

    The window is ``[n-1, n]``, or ``[lo, n]`` when ``lo`` is given.
    """
    M.validate(commutative=True)
    return _em(M, n, lo)
