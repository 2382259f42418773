"""The ten acceptance criteria, each under its time limit.

Run with ``pytest tests/test_acceptance.py -v``; the terminal summary prints
one PASS/FAIL line per criterion.
"""
import random
import time
from contextlib import contextmanager

import pytest

from zcat import formats as fm
from zcat import generators as gen
from zcat import harness
from zcat import mutations as mu
from zcat import spectra as sp
from zcat import strictcat as sc
from zcat.trees import StableTree, Tree


@contextmanager
def within(seconds: float):
    t0 = time.perf_counter()
    yield
    elapsed = time.perf_counter() - t0
    assert elapsed < seconds, f"took {elapsed:.2f}s, limit {seconds}s"


def holds(*names: str, seed: int = 0):
    for name in names:
        r = harness.run_property(name, seed)
        assert r.cases > 0, f"{name} checked nothing"
        assert r.passed, f"{name}: {r.counterexample}"


@pytest.mark.criterion(1, "spine uniqueness")
def test_spine_uniqueness():
    with within(5):
        holds("spine_roundtrip", "spine_injective")


@pytest.mark.criterion(2, "normalization and shift coherence")
def test_normalization_coherence():
    with within(5):
        holds("normalize_coherence")


@pytest.mark.criterion(3, "stable globe homs")
def test_stable_globe_homs():
    with within(1):
        holds("globe_homs", "globe_composition")


@pytest.mark.criterion(4, "Segal oracle equivalence")
def test_segal_oracle_equivalence():
    with within(60):
        holds("pinned_walking_pair", "oracle_equivalence")
    X = gen.walking_pair()
    assert len(sc.evaluate(X, StableTree(0, Tree((Tree(), Tree()))))) == 10


@pytest.mark.criterion(5, "suspension and loops")
def test_suspension_loops():
    with within(5):
        holds("loops_and_suspension")


@pytest.mark.criterion(6, "univalence collapse")
def test_univalence_collapse():
    with within(10):
        holds("univalence_collapse", "strict_isos")
    assert sc.check_stable_univalence(gen.walking_iso())[0] is False


@pytest.mark.criterion(7, "loops shift stable cells down by one")
def test_omega_shift_law():
    with within(10):
        holds("omega_shift_law")


@pytest.mark.criterion(8, "cells theorem")
def test_cells_theorem():
    with within(30):
        holds("cells_theorem")
    for n in range(-3, 2):
        X = sc.eilenberg_maclane(sc.cyclic(2), n)
        assert all(sp.check_cells_theorem(X, k, 4) for k in X.dims if k + 3 >= 0)


@pytest.mark.criterion(8, "cells theorem")
@pytest.mark.xfail(strict=True, reason="index bound max(0,-(a+k)) is too tight on products such as EM(max2,-1)xEM(N1,2)")
def test_cells_theorem_stated_bound():
    with within(30):
        for name, X, L in harness.cells_cases(0):
            T = sp.tower_of(X, L)
            for k in X.dims:
                if k + L - 1 < 0:
                    continue
                i = sp.stable_cells(T, k).stabilization_index
                assert i <= sp.stabilization_bound(X.lo, k), f"{name} L={L} k={k}: index {i}"


@pytest.mark.criterion(9, "mutation robustness")
def test_mutation_robustness():
    with within(30):
        cat_mutants = [(n, what, M) for n, X in gen.small_suite() for what, M in mu.category_mutants(X)]
        tower_mutants = [(n, what, M) for n, T in harness.tower_suite(0) for what, M in mu.tower_mutants(T)]
        assert len(cat_mutants) >= 50 and len(tower_mutants) >= 50
        missed = [(n, what) for n, what, M in cat_mutants if sc.check_axioms(M).passed]
        assert not missed, missed[:5]
        missed = [(n, what) for n, what, M in tower_mutants if sp.check_tower(M).passed]
        assert not missed, missed[:5]


def random_tree(rng: random.Random, budget: int) -> Tree:
    kids = []
    while budget > 1 and rng.random() < 0.6:
        share = rng.randint(1, budget - 1)
        kids.append(random_tree(rng, share))
        budget -= share
    return Tree(tuple(kids))


@pytest.mark.criterion(10, "format determinism")
def test_format_determinism(fixtures_dir):
    with within(5):
        rng = random.Random(0)
        for _ in range(1000):
            t = random_tree(rng, rng.randint(1, 12))
            text = fm.print_tree(t)
            assert fm.parse_tree(text) == t and fm.print_tree(fm.parse_tree(text)) == text
            s = StableTree(rng.randint(-5, 5), t)
            stext = fm.print_stable_tree(s)
            assert fm.parse_stable_tree(stext) == s and fm.print_stable_tree(fm.parse_stable_tree(stext)) == stext
        valid = [p for p in sorted(fixtures_dir.glob("*.cat"))
                 if p.stem not in ("dangling_src", "missing_comp", "duplicate_cell")]
        assert len(valid) >= 5
        for p in valid:
            raw = p.read_bytes()
            assert fm.print_category(fm.parse_category(raw.decode())).encode() == raw, p.name
