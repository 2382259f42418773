"""Stable trees, strict Z-categories on dimension windows, and their towers."""
from .trees import StableTree, Spine, Tree, from_spine, normalize, spine
from .strictcat import WindowZCat, check_axioms, evaluate, evaluate_oracle
from .spectra import Tower, stable_cells, tower_of

__all__ = [
    "StableTree", "Spine", "Tree", "from_spine", "normalize", "spine",
    "WindowZCat", "check_axioms", "evaluate", "evaluate_oracle",
    "Tower", "stable_cells", "tower_of",
]
