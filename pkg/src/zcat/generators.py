"""Small strict categories used by the tests, the harness and the CLI fixtures."""
from __future__ import annotations

import itertools
import random

from . import strictcat as sc
from .strictcat import WindowZCat, make_cat
from .trees import Spine, StableTree, from_spine


def point() -> WindowZCat:
    return make_cat(0, 0, {0: ("p",)}, basepoint="p")


def discrete(n: int) -> WindowZCat:
    names = tuple(f"x{i}" for i in range(n))
    return make_cat(0, 0, {0: names}, basepoint=names[0])


def category(objects, arrows, composites, basepoint=None) -> WindowZCat:
    """A 1-category on window ``[0, 1]``.

    ``arrows`` maps non-identity arrow names to ``(source, target)``; identities
    are named ``1<obj>``.  ``composites`` maps ``(g, f)`` to ``g o f`` for
    composable non-identity pairs.
    """
    ids = {o: f"1{o}" for o in objects}
    ends = {ids[o]: (o, o) for o in objects}
    ends.update(arrows)
    names = tuple(ids[o] for o in objects) + tuple(arrows)
    table = {}
    for g, f in itertools.product(names, repeat=2):
        if ends[f][1] != ends[g][0]:
            continue
        if g in ids.values():
            table[(g, f)] = f
        elif f in ids.values():
            table[(g, f)] = g
        else:
            table[(g, f)] = composites[(g, f)]
    return make_cat(0, 1, {0: tuple(objects), 1: names},
                    src={1: {a: e[0] for a, e in ends.items()}},
                    tgt={1: {a: e[1] for a, e in ends.items()}},
                    unit={1: ids}, comp={(0, 1): table},
                    basepoint=basepoint or objects[0])


def poset(elements, less) -> WindowZCat:
    """The poset generated by the pairs in ``less`` (reflexive-transitive closure)."""
    le = {(x, x) for x in elements} | set(less)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(le), repeat=2):
            if b == c and (a, d) not in le:
                le.add((a, d))
                changed = True
    arrows = {f"{a}<{b}": (a, b) for a in elements for b in elements if a != b and (a, b) in le}
    comps = {(f"{b}<{c}", f"{a}<{b}"): f"{a}<{c}"
             for (a, b) in le for (b2, c) in le if b == b2 and a != b and b != c}
    return category(tuple(elements), arrows, comps)


def walking_arrow() -> WindowZCat:
    return category(("0", "1"), {"f": ("0", "1")}, {})


def walking_pair() -> WindowZCat:
    """The walking composable pair [2]."""
    return category(("0", "1", "2"),
                    {"f": ("0", "1"), "g": ("1", "2"), "gf": ("0", "2")},
                    {("g", "f"): "gf"})


def walking_iso() -> WindowZCat:
    return category(("x", "y"), {"u": ("x", "y"), "v": ("y", "x")},
                    {("v", "u"): "1x", ("u", "v"): "1y"})


def globe_cat(n: int) -> WindowZCat:
    """The walking ``n``-cell as a window omega-category."""
    X = point()
    for _ in range(n):
        X = sc.suspend_cat(X)
    return X


MONOIDS = {
    "Z1": lambda: sc.cyclic(1),
    "Z2": lambda: sc.cyclic(2),
    "Z3": lambda: sc.cyclic(3),
    "Z4": lambda: sc.cyclic(4),
    "V4": sc.klein_four,
    "OR": sc.boolean_or,
    "N3": lambda: sc.truncated_naturals(3),
}


def random_poset(rng: random.Random, n: int) -> WindowZCat:
    elements = [f"p{i}" for i in range(n)]
    less = [(elements[i], elements[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4]
    return poset(elements, less)


def gaunt_suite(seed: int = 0, count: int = 12) -> list[tuple[str, WindowZCat]]:
    """Random gaunt categories: small posets, their suspensions and shifts."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        P = random_poset(rng, rng.randint(1, 3))
        if i % 3 == 1:
            P = sc.suspend_cat(P)
        shift = rng.randint(-3, 0)
        out.append((f"gaunt{i}", sc.shift_cat(P, shift)))
    return out


def small_suite() -> list[tuple[str, WindowZCat]]:
    """Categories with at most 4 cells per dimension and windows of at most 3 dims."""
    out = [
        ("point", point()),
        ("discrete2", discrete(2)),
        ("discrete3", discrete(3)),
        ("arrow", walking_arrow()),
        ("iso", walking_iso()),
        ("D1", globe_cat(1)),
        ("susp-discrete2", sc.suspend_cat(discrete(2))),
        ("chain2-shift", sc.shift_cat(walking_arrow(), -2)),
    ]
    for name, mk in MONOIDS.items():
        M = mk()
        out.append((f"EM({name},1)", sc.eilenberg_maclane(M, 1)))
        out.append((f"EM({name},0;lo=-2)", sc.eilenberg_maclane(M, 0, lo=-2)))
    out.append(("EM(Z2,2;lo=0)", sc.eilenberg_maclane(sc.cyclic(2), 2, lo=0)))
    return out


GAUNT_MONOIDS = {
    "N1": lambda: sc.truncated_naturals(1),
    "N2": lambda: sc.truncated_naturals(2),
    "N3": lambda: sc.truncated_naturals(3),
    "max2": lambda: sc.max_semilattice(2),
    "OR": sc.boolean_or,
}


def presents_spectrum(X: WindowZCat) -> bool:
    """Whether the window data fixes every composition of the pointed
    Z-category: below a negative bottom dim the cells there must compose,
    which is only determined when there is a single one."""
    return X.lo >= 0 or len(X.cells[X.lo]) == 1


def random_gaunt_zcat(rng: random.Random) -> tuple[str, WindowZCat]:
    """An EM category over a gaunt monoid, sometimes times a second one in a
    higher dimension, up to 2."""
    a = rng.choice(sorted(GAUNT_MONOIDS))
    n = rng.randint(-2, 1)
    X = sc.eilenberg_maclane(GAUNT_MONOIDS[a](), n)
    name = f"EM({a},{n})"
    if rng.random() < 0.5:
        b = rng.choice(sorted(GAUNT_MONOIDS))
        m = rng.randint(n + 1, 2)
        X = sc.product_cat(X, sc.eilenberg_maclane(GAUNT_MONOIDS[b](), m))
        name += f"xEM({b},{m})"
    return name, X


def zcat_suite(seed: int = 0, count: int = 12) -> list[tuple[str, WindowZCat]]:
    """Pointed Z-categories for the spectra checks: the small and gaunt suites
    where they present a spectrum, plus random gaunt products."""
    rng = random.Random(seed)
    out = [(n, X) for n, X in small_suite() + gaunt_suite(seed) if presents_spectrum(X)]
    out += [random_gaunt_zcat(rng) for _ in range(count)]
    return out


def spines_in(lo: int, hi: int, max_leaves: int):
    """All spines with leaf dims in ``[lo, hi]`` and meet dims in ``[lo-1, hi-1]``."""
    for p in range(1, max_leaves + 1):
        for n in itertools.product(range(lo, hi + 1), repeat=p):
            ranges = [range(lo - 1, min(n[i], n[i + 1])) for i in range(p - 1)]
            for m in itertools.product(*ranges):
                yield Spine(tuple(n), tuple(m))


def stable_trees_in(lo: int, hi: int, max_leaves: int) -> list[StableTree]:
    return [from_spine(sp) for sp in spines_in(lo, hi, max_leaves)]
