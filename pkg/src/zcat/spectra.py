"""Finite towers of pointed window omega-categories and their stable cells.

A tower ``X_0, ..., X_{L-1}`` carries identifications ``loops(X_{i+1}) ~ X_i``
given as per-dimension name bijections.  Stable ``k``-cells are the
sequential colimit of the ``(k+i)``-cells of ``X_i``, where a cell of ``X_i``
is sent to the cell of ``X_{i+1}`` it is identified with.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from scipy.cluster.hierarchy import DisjointSet

from . import strictcat as sc
from .strictcat import CategoryError, WindowZCat
from .trees import D0, StableTree


class WindowTooShallow(CategoryError):
    pass


class NotStabilized(ValueError):
    pass


class OutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class Tower:
    entries: tuple  # X_0, ..., X_{L-1}, each with window starting at 0
    # identifications[i][k] maps k-cells of loops(X_{i+1}) to k-cells of X_i
    identifications: tuple
    # the top entry is the loop object of an entry with a single 0-cell, so
    # the next connecting map out of it is known to be a bijection
    closed: bool = False

    @property
    def length(self) -> int:
        return len(self.entries)

    @property
    def top_dim(self) -> int:
        """Highest stable dimension with non-identity representatives."""
        return self.entries[-1].hi - (self.length - 1)


def _identity_identification(X: WindowZCat) -> dict:
    return {k: {x: x for x in X.cells[k]} for k in X.dims}


def tower_of(X: WindowZCat, L: int) -> Tower:
    """The length-``L`` tower of a pointed window Z-category.

    The top entry is ``X`` restricted to dims ``>= -(L-1)`` and reindexed to
    start at 0; lower entries are its iterated loops.  The window is extended
    below (only possible over a single bottom cell) or above as needed.
    """
    if L < 1:
        raise ValueError("a tower has at least one entry")
    if X.basepoint is None:
        raise CategoryError("towers need a pointed category")
    d = -(L - 1)
    if d < X.lo:
        if len(X.cells[X.lo]) != 1:
            raise WindowTooShallow(
                f"length {L} needs dims from {d}, but the window starts at {X.lo} "
                f"over {len(X.cells[X.lo])} cells")
        X = sc.extend_below(X, d)
    if d > X.hi:
        X = sc.extend_above(X, d)
    closed = len(X.cells_at(d - 1)) == 1
    bp = X.uu(X.basepoint, X.lo, d)
    keep = {k: set(X.cells[k]) for k in X.dims}
    top = sc._restrict(X, keep, -d, 0, X.hi - d, bp, drop_below=d)
    entries = [top]
    for _ in range(L - 1):
        entries.append(sc.loops(entries[-1]))
    entries.reverse()
    idents = tuple(_identity_identification(entries[i]) for i in range(L - 1))
    return Tower(tuple(entries), idents, closed)


@dataclass
class TowerReport:
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __str__(self):
        return "pass" if self.passed else "\n".join(self.violations)


def check_tower(T: Tower) -> TowerReport:
    r = TowerReport()
    if len(T.identifications) != T.length - 1:
        r.violations.append(f"{T.length} entries need {T.length - 1} identifications")
        return r
    for i, X in enumerate(T.entries):
        if X.lo != 0 or X.basepoint is None:
            r.violations.append(f"X_{i} is not a pointed window omega-category")
            continue
        ax = sc.check_axioms(X)
        if not ax.passed:
            r.violations.append(f"X_{i} fails axioms: {ax}")
    if r.violations:
        return r
    for i, psi in enumerate(T.identifications):
        _check_identification(sc.loops(T.entries[i + 1]), T.entries[i], psi, i, r)
    return r


def _check_identification(A: WindowZCat, B: WindowZCat, psi: dict, i: int, r: TowerReport):
    where = f"identification {i}"
    if A.window != B.window:
        r.violations.append(f"{where}: windows {A.window} and {B.window} differ")
        return
    for k in A.dims:
        m = psi.get(k, {})
        if set(m) != set(A.cells[k]):
            r.violations.append(f"{where}: dim {k} is not defined on the loop cells")
            return
        if sorted(m.values()) != sorted(B.cells[k]):
            r.violations.append(f"{where}: dim {k} is not a bijection")
            return
    if psi[0][A.basepoint] != B.basepoint:
        r.violations.append(f"{where}: basepoint {A.basepoint} goes to "
                            f"{psi[0][A.basepoint]}, not {B.basepoint}")
    for k in range(A.lo + 1, A.hi + 1):
        for x in A.cells[k]:
            if psi[k - 1][A.s(k, x)] != B.s(k, psi[k][x]) or psi[k - 1][A.t(k, x)] != B.t(k, psi[k][x]):
                r.violations.append(f"{where}: boundary of {k}-cell {x} not preserved")
        for y in A.cells[k - 1]:
            if psi[k][A.u(k, y)] != B.u(k, psi[k - 1][y]):
                r.violations.append(f"{where}: unit of {y} not preserved")
    for (j, k), table in A.comp.items():
        for (x, y), z in table.items():
            if B.c(j, k, psi[k][x], psi[k][y]) != psi[k][z]:
                r.violations.append(f"{where}: {x} o{j} {y} = {z} not preserved")


# -- stable cells ------------------------------------------------------------------

@dataclass(frozen=True)
class StableCellSet:
    k: int
    cells: tuple  # one representative name per class, taken in the last entry
    stabilization_index: int
    classes: dict  # (i, name) -> index into cells
    start: int  # first entry holding (k+i)-cells

    def __len__(self):
        return len(self.cells)

    def class_of(self, i: int, x: str) -> str:
        return self.cells[self.classes[(i, x)]]


def _terms(T: Tower, k: int) -> range:
    L = T.length
    if k + L - 1 < 0:
        raise OutOfRange(f"no entry of a length-{L} tower holds stable {k}-cells")
    if k > T.top_dim:
        raise OutOfRange(f"stable {k}-cells lie above the tower's top dim {T.top_dim}")
    return range(max(0, -k), L)


def connecting_map(T: Tower, k: int, i: int) -> dict:
    """``(k+i)``-cells of ``X_i`` to ``(k+i+1)``-cells of ``X_{i+1}``."""
    inverse = {b: a for a, b in T.identifications[i][k + i].items()}
    return {x: inverse[x] for x in T.entries[i].cells[k + i]}


def stable_cells(T: Tower, k: int) -> StableCellSet:
    terms = _terms(T, k)
    ds = DisjointSet((i, x) for i in terms for x in T.entries[i].cells[k + i])
    bijective = []
    for i in terms[:-1]:
        phi = connecting_map(T, k, i)
        for x, y in phi.items():
            ds.merge((i, x), (i + 1, y))
        bijective.append(len(set(phi.values())) == len(T.entries[i + 1].cells[k + i + 1]) == len(phi))
    if not T.closed and (not bijective or not bijective[-1]):
        raise NotStabilized(f"stable {k}-cells still grow at the top of a length-{T.length} tower")
    index = terms[-1]
    while index > terms[0] and bijective[index - 1 - terms[0]]:
        index -= 1
    last = T.length - 1
    names = T.entries[last].cells[k + last]
    pos = {ds[(last, x)]: n for n, x in enumerate(names)}
    classes = {key: pos[ds[key]] for key in ds}
    return StableCellSet(k, tuple(names), index, classes, terms[0])


def loops_tower(T: Tower) -> Tower:
    """Entrywise loops; the identifications are the old ones one dim up."""
    entries = tuple(sc.loops(X) for X in T.entries)
    idents = []
    for i, psi in enumerate(T.identifications):
        A = sc.loops(entries[i + 1])
        # formal identities above a window are named after their base cell
        top = max(psi)
        idents.append({k: {x: psi[min(k + 1, top)][x] for x in A.cells[k]} for k in A.dims})
    return Tower(entries, tuple(idents), T.closed and len(T.entries[-1].cells[0]) == 1)


def shift_comparison(T: Tower, k: int) -> tuple[dict, bool]:
    """The canonical map from stable ``k``-cells of the looped tower to stable
    ``(k+1)``-cells of ``T``, and whether it is a well-defined bijection."""
    low = stable_cells(loops_tower(T), k)
    high = stable_cells(T, k + 1)
    image: dict = {}
    ok = True
    for (i, x), c in low.classes.items():
        target = high.class_of(i, x)
        ok &= image.setdefault(low.cells[c], target) == target
    ok &= len(image) == len(low.cells) and sorted(image.values()) == sorted(high.cells)
    return image, ok


def degeneracy(T: Tower, k: int) -> tuple[dict, bool]:
    """Map stable ``(k-1)``-cells to stable ``k``-cells by units, and whether
    the result is independent of the representative."""
    low, high = stable_cells(T, k - 1), stable_cells(T, k)
    image: dict = {}
    independent = True
    for (i, x), c in low.classes.items():
        if k + i < 1:
            continue
        u = T.entries[i].u(k + i, x)
        target = high.class_of(i, u)
        independent &= image.setdefault(low.cells[c], target) == target
    return image, independent and len(image) == len(low.cells)


@dataclass(frozen=True)
class InvertibilityReport:
    k: int
    cells: tuple
    by_degeneracy: tuple
    by_equivalence: tuple
    representative_independent: bool

    @property
    def agree(self) -> bool:
        return self.by_degeneracy == self.by_equivalence


def invertible_stable_cells(T: Tower, k: int) -> InvertibilityReport:
    """Both characterisations of invertible stable cells.  Disagreement is
    reported, not resolved: over a group the equivalence criterion marks
    every cell while only units come from degeneracies."""
    S = stable_cells(T, k)
    image, _ = degeneracy(T, k)
    by_deg = tuple(c for c in S.cells if c in set(image.values()))
    eqs = {i: sc.omega_equivalences(X) for i, X in enumerate(T.entries)}
    verdicts: dict = {}
    for (i, x), c in sorted(S.classes.items()):
        d = k + i
        if d < 1:
            continue  # 0-cells of an omega-category carry no invertibility
        verdicts.setdefault(S.cells[c], set()).add(x in eqs[i][d])
    by_eq = tuple(c for c in S.cells if True in verdicts.get(c, ()))
    independent = all(len(v) == 1 for v in verdicts.values())
    return InvertibilityReport(k, S.cells, by_deg, by_eq, independent)


def is_groupoidal(X: WindowZCat) -> bool:
    """Every cell is an omega-equivalence.

    Bottom-dimension cells compose along a dimension the window does not
    record, so only the basepoint (the unit of the point) counts there.
    """
    if set(X.cells[X.lo]) != {X.basepoint}:
        return False
    eqs = sc.omega_equivalences(X)
    ok = all(set(eqs[k]) == set(X.cells[k]) for k in range(X.lo + 1, X.hi + 1))
    if ok and sc.check_stable_univalence(X)[0]:
        assert all(X.is_unit(k, x) for k in range(X.lo + 1, X.hi + 1) for x in X.cells[k]), \
            "groupoidal and univalent but not discrete"
    return ok


@dataclass(frozen=True)
class CellsComparison:
    k: int
    cells: tuple
    stable: StableCellSet
    mapping: dict

    @property
    def bijective(self) -> bool:
        values = set(self.mapping.values())
        return None not in values and len(values) == len(self.mapping) == len(self.stable.cells)


def cells_comparison(X: WindowZCat, k: int, L: int) -> CellsComparison:
    """Compare ``X`` at the stable ``k``-globe with the stable ``k``-cells of
    its tower along the canonical map: a cell goes to its class in the top
    entry, where it sits in dim ``k + L - 1``.  Below the window ``X`` is a
    point, which goes to the single cell there."""
    T = tower_of(X, L)
    S = stable_cells(T, k)
    here = tuple(lab[0] for lab in sc.evaluate(sc.extend_above(X, k), StableTree(k, D0)))
    top = T.length - 1
    mapping = {}
    for x in here:
        if x == sc.POINT:
            there = T.entries[top].cells[k + top]
            x_top = there[0] if len(there) == 1 else None
        else:
            x_top = x
        mapping[x] = S.class_of(top, x_top) if (top, x_top) in S.classes else None
    return CellsComparison(k, here, S, mapping)


def check_cells_theorem(X: WindowZCat, k: int, L: int) -> bool:
    return cells_comparison(X, k, L).bijective


def stabilization_bound(lo: int, k: int) -> int:
    """The conjectured bound ``max(0, -(lo + k))`` on the stabilization index.

    Too tight once cells sit above a non-trivial bottom: in
    ``EM(N2,-2) x EM(OR,2)`` the stable 2-cells need two loops, against a
    bound of 1.  See ``general_stabilization_bound``.
    """
    return max(0, -(lo + k))


def general_stabilization_bound(lo: int, k: int) -> int:
    """``max(0, -k, -lo-1)``.

    A ``(k+i)``-cell of ``X_i`` is a ``k``-cell of the category whose
    boundaries in dims ``-(L-1)`` to ``-(i+1)`` are basepoint units.  The step
    from ``i`` to ``i+1`` drops the condition in dim ``-(i+1)``, which is
    vacuous once that dim is at or below a single-celled bottom ``lo``.  Terms
    start at ``i = -k``.
    """
    return max(0, -k, -lo - 1)


def tower_table(T: Tower) -> list[tuple[int, int, Optional[int]]]:
    """``(k, count, stabilization index)`` for every stable dim in range."""
    rows = []
    for k in range(-(T.length - 1), T.top_dim + 1):
        try:
            S = stable_cells(T, k)
            rows.append((k, len(S), S.stabilization_index))
        except NotStabilized:
            last = T.length - 1
            rows.append((k, len(T.entries[last].cells[k + last]), None))
    return rows
