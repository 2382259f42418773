"""Property harness: every brute-force cross-check behind the library, grouped
into suites and reported as machine-readable pass/fail records."""
from __future__ import annotations

import itertools
import random
from dataclasses import asdict, dataclass
from typing import Callable, Optional

from . import generators as gen
from . import mutations as mu
from . import oracles as orc
from . import pasting as pa
from . import spectra as sp
from . import strictcat as sc
from .trees import (StableTree, Tree, desuspend_forest, enumerate_trees, equal_stable, from_spine,
                    infinite_suspension, normalize, shift_stable, spine, suspend)

SUITES = ("spines", "inerts", "segal", "univalence", "towers", "cellsthm")


class UnknownSuite(ValueError):
    pass


@dataclass
class Result:
    suite: str
    name: str
    passed: bool
    cases: int
    counterexample: Optional[str] = None


class _Check:
    """Counts cases and keeps the first failure."""

    def __init__(self):
        self.cases = 0
        self.failure: Optional[str] = None

    def __call__(self, ok: bool, what: Callable[[], str] | str = ""):
        self.cases += 1
        if not ok and self.failure is None:
            self.failure = what() if callable(what) else what
        return ok


_REGISTRY: dict[str, list] = {s: [] for s in SUITES}


def prop(suite: str):
    def register(fn):
        _REGISTRY[suite].append(fn)
        return fn
    return register


def _stable_trees(max_nodes: int, offsets=range(-3, 4)) -> list[StableTree]:
    return [StableTree(z, t) for t in enumerate_trees(max_nodes) for z in offsets]


# -- spines ----------------------------------------------------------------------------

@prop("spines")
def spine_roundtrip(check, seed):
    for s in _stable_trees(7):
        check(from_spine(spine(s)) == normalize(s), lambda: f"fromSpine(spine({s})) = {from_spine(spine(s))}")


@prop("spines")
def spine_injective(check, seed):
    seen: dict = {}
    for s in _stable_trees(7):
        n = normalize(s)
        other = seen.setdefault(spine(s), n)
        check(other == n, lambda: f"{other} and {n} share spine {spine(s)}")


@prop("spines")
def spine_shift_law(check, seed):
    for s in _stable_trees(6):
        for k in (-2, 1, 3):
            check(spine(shift_stable(s, k)) == spine(s).shift(k), lambda: f"{s} shifted by {k}")


@prop("spines")
def catalan_counts(check, seed):
    for n in range(1, 8):
        got = len(enumerate_trees(n))
        want = sum(orc.catalan(j - 1) for j in range(1, n + 1))
        check(got == want, f"{got} trees with at most {n} nodes, expected {want}")
    check(len(set(enumerate_trees(7))) == len(enumerate_trees(7)), "duplicate trees")


@prop("spines")
def normalize_coherence(check, seed):
    for s in _stable_trees(7):
        n = normalize(s)
        check(normalize(n) == n, f"normalize not idempotent at {s}")
        check(orc.expansion(s, -8, 8) == orc.expansion(n, -8, 8), f"normalize changes the functor of {s}")
        check(equal_stable(StableTree(s.offset, suspend(s.body)), StableTree(s.offset + 1, s.body)),
              f"(z, suspend T) differs from (z+1, T) at {s}")


@prop("spines")
def equal_stable_vs_expansion(check, seed):
    rng = random.Random(seed)
    pool = _stable_trees(6)
    for _ in range(500):
        a, b = rng.choice(pool), rng.choice(pool)
        if rng.random() < 0.3:
            b = StableTree(a.offset - 1, suspend(a.body))
        check(equal_stable(a, b) == (orc.expansion(a, -8, 8) == orc.expansion(b, -8, 8)), f"{a} vs {b}")


@prop("spines")
def suspension_laws(check, seed):
    for t in enumerate_trees(6):
        check(desuspend_forest(suspend(t)) == (t,), f"desuspend(suspend {t})")
        for k in range(0, 4):
            check(equal_stable(infinite_suspension(suspend(t), k + 1), infinite_suspension(t, k)),
                  f"infinite suspension of {t} at {k}")
        n = normalize(StableTree(0, t))
        check(infinite_suspension(n.body, -n.offset) == n, f"normal form of {t} not reproduced")


# -- inerts ----------------------------------------------------------------------------

@prop("inerts")
def globe_homs(check, seed):
    uf = orc.globe_congruence(-4, 4)
    for m, n in itertools.product(range(-4, 5), repeat=2):
        want = 2 if m < n else 1 if m == n else 0
        check(len(pa.globe_hom(m, n)) == want, f"|globeHom({m},{n})|")
        if m <= n:
            classes = {uf.find(w) for w in orc.globe_words(m, n)}
            check(len(classes) == want, f"congruence has {len(classes)} classes for {m}->{n}")


def _word_of(g: pa.GlobeMorphism) -> tuple:
    # a representative word: the sign, then anything
    return (g.dom, tuple([g.sign] + ["+"] * (g.cod - g.dom - 1)) if g.sign != "id" else ())


@prop("inerts")
def globe_composition(check, seed):
    uf = orc.globe_congruence(-3, 3)
    homs = {(m, n): sorted(pa.globe_hom(m, n)) for m in range(-3, 4) for n in range(-3, 4)}
    for a, b, c in itertools.product(range(-3, 4), repeat=3):
        if not a <= b <= c:
            continue
        for f in homs[(a, b)]:
            for g in homs[(b, c)]:
                gf = pa.compose_globe(g, f)
                glued = (a, _word_of(f)[1] + _word_of(g)[1])
                check(uf.find(glued) == uf.find(_word_of(gf)), f"{g} o {f} = {gf} disagrees with the congruence")
    for a, b, c, d in itertools.product(range(-3, 4), repeat=4):
        if not a <= b <= c <= d:
            continue
        for f, g, h in itertools.product(homs[(a, b)], homs[(b, c)], homs[(c, d)]):
            check(pa.compose_globe(h, pa.compose_globe(g, f)) == pa.compose_globe(pa.compose_globe(h, g), f),
                  f"associativity at {h}, {g}, {f}")


@prop("inerts")
def inerts_vs_brute_force(check, seed):
    trees = [normalize(s) for s in _stable_trees(4, range(0, 2))]
    for s, t in itertools.product(trees, repeat=2):
        lo, hi = pa.canonical_window(s, t)
        got = {tuple((c, f(c)) for c in f.domain()) for f in pa.enumerate_inerts(s, t)}
        want = {tuple(sorted(m.items(), key=lambda cd: cd[0].key())) for m in orc.brute_inerts(s, t, lo, hi)}
        got = {tuple(sorted(g, key=lambda cd: cd[0].key())) for g in got}
        check(got == want, f"{s} -> {t}: {len(got)} inerts, brute force finds {len(want)}")


@prop("inerts")
def inerts_valid_with_identity(check, seed):
    for t in enumerate_trees(6):
        s = normalize(StableTree(0, t))
        maps = pa.enumerate_inerts(s, s)
        check(all(f.is_valid() for f in maps), f"invalid inert on {s}")
        check(pa.identity_inert(s) in maps, f"identity of {s} missing")


@prop("inerts")
def inert_composition(check, seed):
    trees = [normalize(StableTree(0, t)) for t in enumerate_trees(3)]
    homs = {(s, t): pa.enumerate_inerts(s, t) for s in trees for t in trees}
    for s, t, u in itertools.product(trees, repeat=3):
        for f in homs[(s, t)]:
            for g in homs[(t, u)]:
                gf = pa.compose_inert(g, f)
                check(gf.is_valid() and gf in homs[(s, u)], f"composite {s}->{t}->{u} not an inert")
                sg, sf = pa.suspend_inert(g), pa.suspend_inert(f)
                check(pa.suspend_inert(gf) == pa.compose_inert(sg, sf), f"suspension not functorial on {s}->{t}->{u}")
    for s, t, u, v in itertools.product(trees, repeat=4):
        for f, g, h in itertools.product(homs[(s, t)], homs[(t, u)], homs[(u, v)]):
            check(pa.compose_inert(h, pa.compose_inert(g, f)) == pa.compose_inert(pa.compose_inert(h, g), f),
                  f"associativity on {s}->{t}->{u}->{v}")


@prop("inerts")
def spine_cones(check, seed):
    for t in enumerate_trees(6):
        s = normalize(StableTree(0, t))
        cone = pa.spine_cone(s)
        check(cone.commutes(), f"cone triangles of {s} do not commute")
        tops = {f(pa.Sector(f.source.offset, (), 0)) for f in cone.leaves}
        want = {pa.Sector(s.offset + len(p), p, 0) for p in s.body.leaves()}
        check(tops == want, f"leaf inclusions of {s} miss top sectors")


@prop("inerts")
def globe_representability(check, seed):
    for n in range(0, 6):
        for k in range(-3, 8):
            check(len(pa.sectors(StableTree(0, orc_globe(n)), k)) == len(pa.globe_hom(k, n)),
                  f"sectors of D{n} in dim {k}")


def orc_globe(n: int) -> Tree:
    t = Tree()
    for _ in range(n):
        t = Tree((t,))
    return t


# -- segal -----------------------------------------------------------------------------

@prop("segal")
def oracle_equivalence(check, seed):
    # leaves in the window with meets down to one below it; leaves below the
    # window only ever carry the point, so fewer of those are enough
    for name, X in gen.small_suite():
        trees = gen.stable_trees_in(X.lo, X.hi, 5)
        trees += [s for s in gen.stable_trees_in(X.lo - 1, X.hi, 3) if min(spine(s).leaf_dims) < X.lo]
        for s in trees:
            check(sc.oracle_agrees(X, s), f"{name} at {s}")


@prop("segal")
def pinned_walking_pair(check, seed):
    X = gen.walking_pair()
    s = StableTree(0, Tree((Tree(), Tree())))
    n = len(sc.evaluate(X, s))
    check(n == 10, f"|evaluate([2], {s})| = {n}")
    check(n == orc.composable_pairs(X, 0, 1), "composable pair count")
    check(len(sc.evaluate_oracle(X, s)) == 10, "oracle count")


@prop("segal")
def shift_compatibility(check, seed):
    rng = random.Random(seed)
    suite = gen.small_suite()
    for _ in range(100):
        name, X = rng.choice(suite)
        trees = gen.stable_trees_in(X.lo - 1, X.hi, 3)
        s = rng.choice(trees)
        k = rng.randint(-3, 3)
        a = sc.evaluate(X, s)
        b = sc.evaluate(sc.shift_cat(X, k), shift_stable(s, k))
        check(a == b, f"{name} at {s} shifted by {k}")


@prop("segal")
def loops_and_suspension(check, seed):
    cats = [(n, X) for n, X in gen.small_suite() + gen.gaunt_suite(seed) if X.lo == 0]
    for name, C in cats:
        S = sc.suspend_cat(C)
        a, b = S.cells[0]
        back = sc.bipointed_loops(S, a, b)
        check(_same(back, C), f"hom of the suspension of {name} is not {name}")
        check(sc.check_axioms(S).passed, f"suspension of {name} fails the axioms")
        L = sc.loops(S)
        check(sum(len(L.cells[k]) for k in L.dims) == len(L.dims), f"loops at a pole of {name} not trivial")


def _same(X: sc.WindowZCat, Y: sc.WindowZCat) -> bool:
    strip = lambda c: {jk: t for jk, t in c.items() if t}  # noqa: E731
    return (X.window == Y.window and X.cells == Y.cells and X.src == Y.src and X.tgt == Y.tgt
            and X.unit == Y.unit and strip(X.comp) == strip(Y.comp))


# -- univalence ------------------------------------------------------------------------

def _units_only(X: sc.WindowZCat) -> bool:
    eqs = sc.omega_equivalences(X)
    return all(set(eqs[k]) == {x for x in X.cells[k] if X.is_unit(k, x)} for k in eqs)


@prop("univalence")
def univalence_collapse(check, seed):
    cats = gen.small_suite() + gen.gaunt_suite(seed, 100)
    for name, X in cats:
        verdict, _ = sc.check_stable_univalence(X)
        check(verdict == _units_only(X), f"{name}: univalent={verdict} but equivalences-are-units={_units_only(X)}")
        for k in range(-3, 4):
            check(sc.check_stable_univalence(sc.shift_cat(X, k))[0] == verdict, f"{name} shifted by {k}")
    ok, bad = sc.check_stable_univalence(gen.walking_iso())
    check(not ok and bad == (1, "u"), f"walking iso gave {ok}, {bad}")
    for name, X in gen.gaunt_suite(seed, 100):
        check(sc.check_stable_univalence(X)[0], f"gaunt {name} not univalent")


@prop("univalence")
def strict_isos(check, seed):
    check(sorted(sc.strict_iso_cells(gen.walking_iso(), 1)) == ["1x", "1y", "u", "v"], "walking iso")
    check(sorted(sc.strict_iso_cells(gen.walking_arrow(), 1)) == ["10", "11"], "walking arrow")
    for name, X in gen.small_suite():
        for k in range(X.lo + 1, X.hi + 1):
            units = {x for x in X.cells[k] if X.is_unit(k, x)}
            check(units <= set(sc.strict_iso_cells(X, k)), f"{name}: a unit is not an iso")


# -- towers ----------------------------------------------------------------------------

def tower_suite(seed: int) -> list[tuple[str, sp.Tower]]:
    """EM towers over monoids with at most 4 elements and random gaunt towers."""
    out = []
    for mname, mk in sorted(gen.MONOIDS.items()):
        for n in range(-2, 2):
            for L in (2, 3, 4):
                out.append((f"EM({mname},{n}) L={L}", sp.tower_of(sc.eilenberg_maclane(mk(), n), L)))
    rng = random.Random(seed)
    for _ in range(12):
        name, X = gen.random_gaunt_zcat(rng)
        L = rng.randint(max(1, 1 - X.lo), max(1, 1 - X.lo) + 2)
        out.append((f"{name} L={L}", sp.tower_of(X, L)))
    return out


@prop("towers")
def towers_check(check, seed):
    for name, T in tower_suite(seed):
        r = sp.check_tower(T)
        check(r.passed, lambda: f"{name}: {r}")


@prop("towers")
def stable_cells_vs_union_find(check, seed):
    for name, T in tower_suite(seed):
        for k in range(-(T.length - 1), T.top_dim + 1):
            try:
                S = sp.stable_cells(T, k)
            except sp.NotStabilized:
                check(not T.closed, f"{name} k={k}: a closed tower must stabilize")
                continue
            got = sorted((frozenset(key for key, c in S.classes.items() if c == i) for i in range(len(S.cells))),
                         key=sorted)
            check(got == orc.stable_cell_classes(T, k), f"{name} k={k}")


@prop("towers")
def omega_shift_law(check, seed):
    for name, T in tower_suite(seed):
        for k in range(-T.length, T.top_dim):
            try:
                _, ok = sp.shift_comparison(T, k)
            except sp.OutOfRange:
                continue
            check(ok, f"{name}: cells_{k} of the looped tower vs cells_{k + 1}")


@prop("towers")
def degeneracies(check, seed):
    for name, T in tower_suite(seed):
        if not T.closed:
            continue
        for k in range(-(T.length - 1) + 1, T.top_dim + 1):
            image, independent = sp.degeneracy(T, k)
            check(independent, f"{name}: degeneracy into {k} depends on the representative")
            if k - 2 >= -(T.length - 1) and k < T.top_dim:
                low, _ = sp.degeneracy(sp.loops_tower(T), k - 1)
                check(low == image, f"{name}: degeneracy into {k} does not commute with the shift")
    for mname in ("Z2", "Z3", "V4"):
        T = sp.tower_of(sc.eilenberg_maclane(gen.MONOIDS[mname](), 1), 3)
        r = sp.invertible_stable_cells(T, 1)
        check(r.by_degeneracy == ("0",) and set(r.by_equivalence) == set(r.cells),
              f"EM({mname}) invertibility: {r}")


@prop("towers")
def mutation_detection(check, seed):
    for name, X in gen.small_suite():
        for what, M in mu.category_mutants(X, limit=20, seed=seed):
            check(not sc.check_axioms(M).passed, f"{name}: {what} undetected")
    for name, T in tower_suite(seed):
        for what, M in mu.tower_mutants(T)[:10]:
            check(not sp.check_tower(M).passed, f"{name}: {what} undetected")


# -- cells theorem ---------------------------------------------------------------------

def cells_cases(seed: int):
    """(name, X, L) for every generated Z-category, plus the pinned EM cases."""
    for name, X in gen.zcat_suite(seed):
        full = max(1, 1 - X.lo)
        yield name, X, full
        if len(X.cells[X.lo]) == 1:
            yield name, X, full + 1
    for n in range(-3, 2):
        yield f"EM(Z2,{n})", sc.eilenberg_maclane(sc.cyclic(2), n), 4


@prop("cellsthm")
def cells_theorem(check, seed):
    for name, X, L in cells_cases(seed):
        for k in X.dims:
            if k + L - 1 < 0:
                continue
            check(sp.check_cells_theorem(X, k, L), f"{name} k={k} L={L}")


@prop("cellsthm")
def stabilization_bound(check, seed):
    for name, X, L in cells_cases(seed):
        for k in X.dims:
            if k + L - 1 < 0:
                continue
            i = sp.stable_cells(sp.tower_of(X, L), k).stabilization_index
            b = sp.general_stabilization_bound(X.lo, k)
            check(i <= b, f"{name} k={k} L={L}: index {i} above {b}")


@prop("cellsthm")
def groupoidal(check, seed):
    check(sp.is_groupoidal(gen.point()), "point")
    for mname in ("Z1", "Z2", "Z3", "Z4", "V4"):
        for n in (-1, 0, 1):
            check(sp.is_groupoidal(sc.eilenberg_maclane(gen.MONOIDS[mname](), n)), f"EM({mname},{n})")
    check(not sp.is_groupoidal(gen.walking_arrow()), "walking arrow")
    check(not sp.is_groupoidal(sc.eilenberg_maclane(gen.MONOIDS["N3"](), 1)), "EM(N3,1)")


# -- driver ----------------------------------------------------------------------------

def _run(suite: str, fn, seed: int) -> Result:
    check = _Check()
    try:
        fn(check, seed)
    except Exception as e:  # a crash is a failed property, with its message as the counterexample
        check.failure = check.failure or f"{type(e).__name__}: {e}"
        check.cases += 1
    return Result(suite, fn.__name__, check.failure is None, check.cases, check.failure)


def run_suite(suite: str, seed: int = 0) -> list[Result]:
    if suite not in _REGISTRY:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    return [_run(suite, fn, seed) for fn in _REGISTRY[suite]]


def run_property(name: str, seed: int = 0) -> Result:
    """Run one property by name, from whichever suite holds it."""
    for suite, fns in _REGISTRY.items():
        for fn in fns:
            if fn.__name__ == name:
                return _run(suite, fn, seed)
    raise KeyError(name)


def run_harness(suite: str = "all", seed: int = 0) -> dict:
    names = SUITES if suite == "all" else (suite,)
    if suite != "all" and suite not in SUITES:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {', '.join(SUITES + ('all',))}")
    results = [r for s in names for r in run_suite(s, seed)]
    return {
        "suite": suite,
        "seed": seed,
        "passed": all(r.passed for r in results),
        "properties": [asdict(r) for r in results],
    }
