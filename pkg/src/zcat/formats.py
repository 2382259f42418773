"""Text formats: bracket trees, ``z@tree`` stable trees, spines and the
line-oriented category files."""
from __future__ import annotations

import re

from . import strictcat
from .strictcat import WindowZCat, make_cat
from .trees import Spine, StableTree, Tree


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte {offset})")
        self.offset = offset


class MissingCompositionEntry(ParseError):
    pass


class DuplicateCell(ParseError, strictcat.DuplicateCell):
    pass


# -- trees -----------------------------------------------------------------------

def _tree_at(text: str, i: int) -> tuple[Tree, int]:
    if i >= len(text) or text[i] != "(":
        raise ParseError("expected '('", i)
    i += 1
    kids = []
    while i < len(text) and text[i] == "(":
        t, i = _tree_at(text, i)
        kids.append(t)
    if i >= len(text) or text[i] != ")":
        raise ParseError("expected ')' or '('", i)
    return Tree(tuple(kids)), i + 1


def parse_tree(text: str, base: int = 0) -> Tree:
    try:
        t, end = _tree_at(text, 0)
    except ParseError as e:
        raise ParseError(str(e).rsplit(" (at", 1)[0], e.offset + base) from None
    if end != len(text):
        raise ParseError("trailing characters after tree", end + base)
    return t


def print_tree(t: Tree) -> str:
    return str(t)


_OFFSET = re.compile(r"-?[0-9]+@")


def parse_stable_tree(text: str) -> StableTree:
    """``[-]digits@tree``, or a bare tree at offset 0."""
    m = _OFFSET.match(text)
    if m is None:
        if text[:1] not in ("(", ""):
            raise ParseError("expected an offset or a tree", 0)
        return StableTree(0, parse_tree(text))
    return StableTree(int(m.group()[:-1]), parse_tree(text[m.end():], base=m.end()))


def print_stable_tree(s: StableTree) -> str:
    return f"{s.offset}@{s.body}"


_SPINE = re.compile(r"n=(-?[0-9]+(?:,-?[0-9]+)*);m=((?:-?[0-9]+(?:,-?[0-9]+)*)?)")


def parse_spine(text: str) -> Spine:
    m = _SPINE.fullmatch(text)
    if m is None:
        raise ParseError("expected n=<dims>;m=<dims>", 0)
    n = tuple(int(x) for x in m.group(1).split(","))
    ms = tuple(int(x) for x in m.group(2).split(",")) if m.group(2) else ()
    return Spine(n, ms)


def print_spine(sp: Spine) -> str:
    return str(sp)


# -- categories -----------------------------------------------------------------------

_LINE = {
    "window": re.compile(r"window (-?[0-9]+) (-?[0-9]+)"),
    "basepoint": re.compile(r"basepoint (\S+)"),
    "cells": re.compile(r"cells (-?[0-9]+):((?: \S+)*)"),
    "map": re.compile(r"(src|tgt|unit) (-?[0-9]+): (\S+)->(\S+)"),
    "comp": re.compile(r"comp (-?[0-9]+) (-?[0-9]+): (\S+) (\S+) -> (\S+)"),
}


def parse_category(text: str) -> WindowZCat:
    """Parse a category file.  Structural validation runs here; the axioms are
    checked separately by ``check_axioms``."""
    window = basepoint = None
    cells: dict = {}
    maps = {"src": {}, "tgt": {}, "unit": {}}
    comp: dict = {}
    where: dict = {}
    offset = 0
    for line in text.splitlines(keepends=True):
        at, offset = offset, offset + len(line.encode())
        body = line.rstrip("\n")
        if not body.strip() or body.lstrip().startswith("#"):
            continue
        kind = body.split(" ", 1)[0]
        key = "map" if kind in maps else kind
        pat = _LINE.get(key)
        m = pat.fullmatch(body) if pat else None
        if m is None:
            raise ParseError(f"malformed line {body!r}", at)
        if key == "window":
            if window is not None:
                raise ParseError("second window line", at)
            window = (int(m.group(1)), int(m.group(2)))
            if window[0] > window[1]:
                raise ParseError("empty window", at)
            continue
        if window is None:
            raise ParseError("the window line must come first", at)
        if key == "basepoint":
            basepoint = m.group(1)
            where["basepoint"] = at
        elif key == "cells":
            k = int(m.group(1))
            if not window[0] <= k <= window[1]:
                raise ParseError(f"dim {k} outside the window", at)
            if k in cells:
                raise ParseError(f"cells {k} listed twice", at)
            names = tuple(m.group(2).split())
            if len(set(names)) != len(names):
                raise DuplicateCell(f"duplicate cell name in dim {k}", at)
            cells[k] = names
        elif key == "map":
            k = int(m.group(2))
            x, y = m.group(3), m.group(4)
            dom, cod = (k, k - 1) if kind != "unit" else (k - 1, k)
            _known(cells, dom, x, at)
            _known(cells, cod, y, at)
            table = maps[kind].setdefault(k, {})
            if x in table:
                raise ParseError(f"{kind} {k} of {x} given twice", at)
            table[x] = y
        else:
            j, k = int(m.group(1)), int(m.group(2))
            x, y, z = m.group(3), m.group(4), m.group(5)
            for c in (x, y, z):
                _known(cells, k, c, at)
            table = comp.setdefault((j, k), {})
            if (x, y) in table:
                raise ParseError(f"comp {j} {k} of {x} {y} given twice", at)
            table[(x, y)] = z
    if window is None:
        raise ParseError("missing window line", 0)
    for k in range(window[0], window[1] + 1):
        cells.setdefault(k, ())
    if basepoint is not None:
        _known(cells, window[0], basepoint, where["basepoint"])
    try:
        X = make_cat(window[0], window[1], cells, maps["src"], maps["tgt"], maps["unit"], comp, basepoint)
    except ValueError as e:
        raise ParseError(str(e), offset) from None
    for j in range(X.lo, X.hi):
        for k in range(j + 1, X.hi + 1):
            table = X.comp.get((j, k), {})
            for x in X.cells[k]:
                for y in X.cells[k]:
                    if X.composable(j, k, x, y) and (x, y) not in table:
                        raise MissingCompositionEntry(f"comp {j} {k}: {x} {y} is composable but unlisted", offset)
    return X


def _known(cells: dict, k: int, name: str, at: int):
    if name not in cells.get(k, ()):
        raise ParseError(f"{name!r} is not a listed {k}-cell", at)


def print_category(X: WindowZCat) -> str:
    lines = [f"window {X.lo} {X.hi}"]
    if X.basepoint is not None:
        lines.append(f"basepoint {X.basepoint}")
    for k in X.dims:
        lines.append(f"cells {k}:" + "".join(f" {x}" for x in X.cells[k]))
    for kind, table in (("src", X.src), ("tgt", X.tgt)):
        for k in range(X.lo + 1, X.hi + 1):
            lines.extend(f"{kind} {k}: {x}->{table[k][x]}" for x in X.cells[k])
    for k in range(X.lo + 1, X.hi + 1):
        lines.extend(f"unit {k}: {x}->{X.unit[k][x]}" for x in X.cells[k - 1])
    for j, k in sorted(X.comp):
        table = X.comp[(j, k)]
        pairs = sorted(table, key=lambda xy: (X.order(k, xy[0]), X.order(k, xy[1])))
        lines.extend(f"comp {j} {k}: {x} {y} -> {table[(x, y)]}" for x, y in pairs)
    return "\n".join(lines) + "\n"
