import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import stable_trees, trees
from zcat import oracles as orc
from zcat.trees import (EmptyLevelInterior, InvalidSpine, MultipleRoots, NonMonotoneParent, Spine, StableTree,
                        Tree, TreeError, desuspend_forest, enumerate_trees, equal_stable, from_spine, globe,
                        infinite_suspension, make_tree, normalize, shift_stable, spine, suspend)

D0 = Tree()
PAIR = Tree((D0, D0))  # two 1-globes side by side


# -- enumeration -----------------------------------------------------------------

@pytest.mark.parametrize("n", range(1, 9))
def test_trees_with_n_nodes_are_catalan(n):
    exact = [t for t in enumerate_trees(n) if t.size == n]
    assert len(exact) == orc.catalan(n - 1)
    assert len(set(exact)) == len(exact)


def test_enumerate_rejects_zero():
    with pytest.raises(ValueError):
        enumerate_trees(0)


# -- levels ----------------------------------------------------------------------

@given(trees)
def test_levels_roundtrip(t):
    sizes, parents = t.levels()
    assert make_tree(sizes, parents) == t


@given(trees)
def test_levels_agree_with_expansion_oracle(t):
    sizes, parents = t.levels()
    ex = orc.expansion(StableTree(0, t), 0, t.height)
    assert [n for n, _ in ex] == sizes
    assert [list(p) for _, p in ex[1:]] == parents


def test_make_tree_trailing_empty_levels_dropped():
    assert make_tree([1, 2, 0, 0], [[0, 0]]) == PAIR


@pytest.mark.parametrize("sizes, parents, err", [
    ([2], [], MultipleRoots),
    ([0], [], EmptyLevelInterior),
    ([1, 0, 1], [[], [0]], EmptyLevelInterior),
    ([1, 2, 2], [[0, 0], [1, 0]], NonMonotoneParent),
    ([1, 2], [[0]], TreeError),
    ([1, 1], [[3]], TreeError),
])
def test_make_tree_errors(sizes, parents, err):
    with pytest.raises(err):
        make_tree(sizes, parents)


def test_leaves_and_heights():
    t = Tree((globe(2), D0, PAIR))
    assert t.leaves() == [(0, 0, 0), (1,), (2, 0), (2, 1)]
    assert orc.leaf_heights(t) == [len(p) for p in t.leaves()]
    assert t.height == 3 and t.size == 8


# -- stable trees ----------------------------------------------------------------

@given(stable_trees)
def test_normalize_idempotent_and_normal(s):
    n = normalize(s)
    assert normalize(n) == n and n.is_normal()


@given(stable_trees)
def test_normalize_preserves_expansion(s):
    assert orc.expansion(s, -8, 8) == orc.expansion(normalize(s), -8, 8)


@given(stable_trees)
def test_suspension_is_a_shift(s):
    assert equal_stable(StableTree(s.offset, suspend(s.body)), StableTree(s.offset + 1, s.body))


@given(stable_trees, stable_trees)
def test_equal_stable_matches_expansion(a, b):
    assert equal_stable(a, b) == (orc.expansion(a, -8, 8) == orc.expansion(b, -8, 8))


def test_globes_normalize_to_a_point():
    for n in range(5):
        assert normalize(StableTree(-2, globe(n))) == StableTree(n - 2, D0)


@given(trees)
def test_desuspend_inverts_suspend(t):
    assert desuspend_forest(suspend(t)) == (t,)


@given(trees, st.integers(0, 4))
def test_infinite_suspension_absorbs_suspend(t, k):
    assert infinite_suspension(suspend(t), k + 1) == infinite_suspension(t, k)


def test_level_sizes_of_stable_tree():
    s = StableTree(-1, PAIR)
    assert [s.level_size(k) for k in range(-3, 2)] == [1, 1, 1, 2, 0]


# -- spines ----------------------------------------------------------------------

@given(stable_trees)
def test_from_spine_inverts_spine(s):
    assert from_spine(spine(s)) == normalize(s)


@given(stable_trees, st.integers(-3, 3))
def test_spine_commutes_with_shift(s, k):
    assert spine(shift_stable(s, k)) == spine(s).shift(k)


def test_spine_is_injective_on_small_trees():
    seen = {}
    for t, z in itertools.product(enumerate_trees(7), range(-3, 4)):
        n = normalize(StableTree(z, t))
        assert seen.setdefault(spine(n), n) == n


def test_pinned_spines():
    assert spine(StableTree(0, PAIR)) == Spine((1, 1), (0,))
    assert spine(StableTree(-1, Tree((globe(2), D0)))) == Spine((2, 0), (-1,))
    assert from_spine(Spine((3,))) == StableTree(3, D0)


@pytest.mark.parametrize("n, m", [((), ()), ((1, 1), ()), ((1, 1), (1,)), ((2, 0), (0,))])
def test_invalid_spines(n, m):
    with pytest.raises(InvalidSpine):
        Spine(n, m)
