"""Hypothesis strategies shared by the test modules."""
from hypothesis import strategies as st

from zcat.trees import StableTree, Tree

trees = st.recursive(st.just(Tree()), lambda kids: st.lists(kids, max_size=3).map(lambda cs: Tree(tuple(cs))),
                     max_leaves=8)

stable_trees = st.builds(StableTree, st.integers(-4, 4), trees)
