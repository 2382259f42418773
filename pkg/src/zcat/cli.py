"""Command-line front end.

Exit status is 0 on success, 1 on domain errors (including a failed check)
and 2 on parse errors or bad usage.
"""
from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import formats as fm
from . import harness
from . import pasting as pa
from . import spectra as sp
from . import strictcat as sc
from .trees import StableTree, TreeError, normalize, shift_stable, spine, from_spine, suspend

_NEGATIVE_TREE = re.compile(r"-[0-9]+@")


class _Fail(Exception):
    """A domain-level negative outcome that should exit with status 1."""


def _read_cat(path: str) -> sc.WindowZCat:
    try:
        text = Path(path).read_text()
    except OSError as e:
        raise fm.ParseError(f"cannot read {path}: {e.strerror}", 0) from None
    return fm.parse_category(text)


def _stable(text: str) -> StableTree:
    return fm.parse_stable_tree(text.strip())


def _sector_line(k: int, secs) -> str:
    return f"{k}: " + " ".join(str(c) for c in secs)


# -- subcommands -------------------------------------------------------------------------

def cmd_normalize(a):
    print(fm.print_stable_tree(normalize(_stable(a.tree))))


def cmd_spine(a):
    print(fm.print_spine(spine(normalize(_stable(a.tree)))))


def cmd_fromspine(a):
    print(fm.print_stable_tree(from_spine(fm.parse_spine(a.spine))))


def cmd_suspend(a):
    if Path(a.input).is_file():
        print(fm.print_category(sc.suspend_cat(_read_cat(a.input))), end="")
        return
    text = a.input.strip()
    if "@" in text:
        print(fm.print_stable_tree(shift_stable(_stable(text), 1)))
    else:
        print(fm.print_tree(suspend(fm.parse_tree(text))))


def cmd_sectors(a):
    s = normalize(_stable(a.tree))
    if a.k is not None:
        dims = [a.k]
    else:
        lo, hi = a.window if a.window else (s.offset, s.top)
        dims = range(lo, hi + 1)
    for k in dims:
        print(_sector_line(k, pa.sectors(s, k)))


def cmd_globehom(a):
    for g in sorted(pa.globe_hom(a.m, a.n)):
        print(f"{g.dom}->{g.cod} {g.sign}")


def cmd_inerts(a):
    s, t = _stable(a.source), _stable(a.target)
    maps = pa.enumerate_inerts(s, t, tuple(a.window) if a.window else None)
    print(f"count: {len(maps)}")
    for i, f in enumerate(maps):
        print(f"# map {i}")
        print(f.table())


def cmd_spinecone(a):
    s = normalize(_stable(a.tree))
    cone = pa.spine_cone(s)
    print(fm.print_spine(spine(s)))
    for f in cone.maps:
        print(f"# {fm.print_stable_tree(f.source)} -> {fm.print_stable_tree(f.target)}")
        print(f.table())
    print("commutes: " + ("true" if cone.commutes() else "false"))


def cmd_check(a):
    report = sc.check_axioms(_read_cat(a.catfile))
    print(report)
    if not report.passed:
        raise _Fail()


def cmd_eval(a):
    X = _read_cat(a.catfile)
    labels = sc.evaluate(X, _stable(a.tree))
    print(f"count: {len(labels)}")
    for lab in labels:
        print(" ".join(lab))


def cmd_univalent(a):
    ok, bad = sc.check_stable_univalence(_read_cat(a.catfile))
    print("true" if ok else f"false: {bad[0]}-cell {bad[1]}")


def cmd_equiv(a):
    for k, cells in sc.omega_equivalences(_read_cat(a.catfile)).items():
        print(f"{k}: " + " ".join(cells))


def cmd_loops(a):
    print(fm.print_category(sc.loops(_read_cat(a.catfile))), end="")


def cmd_shift(a):
    print(fm.print_category(sc.shift_cat(_read_cat(a.catfile), a.shift)), end="")


def _stab(i) -> str:
    return "" if i is None else f" stab={i}"


def cmd_tower(a):
    T = sp.tower_of(_read_cat(a.catfile), a.L)
    report = sp.check_tower(T)
    for k, count, i in sp.tower_table(T):
        print(f"{k}: {count}{_stab(i)}")
    if not report.passed:
        print(report)
        raise _Fail()


def cmd_stablecells(a):
    S = sp.stable_cells(sp.tower_of(_read_cat(a.catfile), a.L), a.k)
    print(f"{a.k}: {len(S)}{_stab(S.stabilization_index)}")
    print(" ".join(S.cells))


def cmd_cellsthm(a):
    c = sp.cells_comparison(_read_cat(a.catfile), a.k, a.L)
    print(f"{a.k}: {len(c.cells)} -> {len(c.stable)}{_stab(c.stable.stabilization_index)}")
    print("true" if c.bijective else "false")


def cmd_groupoidal(a):
    print("true" if sp.is_groupoidal(_read_cat(a.catfile)) else "false")


def cmd_harness(a):
    report = harness.run_harness(a.suite, a.seed)
    print(json.dumps(report, indent=2, sort_keys=True))
    if not report["passed"]:
        raise _Fail()


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="zcat", description="Stable trees, strict Z-categories and their towers.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *args, help=None):
        q = sub.add_parser(name, help=help)
        for arg in args:
            q.add_argument(arg)
        q.add_argument("--format", choices=["text"], default="text")
        q.set_defaults(fn=fn)
        return q

    add("normalize", cmd_normalize, "tree", help="normal form of a stable tree")
    add("spine", cmd_spine, "tree", help="globular presentation of a stable tree")
    add("fromspine", cmd_fromspine, "spine", help="stable tree of a spine such as n=2,1;m=0")
    add("suspend", cmd_suspend, "input", help="suspend a tree, stable tree or category file")
    q = add("sectors", cmd_sectors, "tree", help="sectors per dimension")
    q.add_argument("-k", type=int)
    q.add_argument("--window", nargs=2, type=int, metavar=("LO", "HI"))
    q = add("globehom", cmd_globehom, help="stable globe morphisms m -> n")
    q.add_argument("m", type=int)
    q.add_argument("n", type=int)
    q = add("inerts", cmd_inerts, "source", "target", help="inert maps between stable trees")
    q.add_argument("--window", nargs=2, type=int, metavar=("LO", "HI"))
    add("spinecone", cmd_spinecone, "tree", help="globe inclusions of the spine")
    add("check", cmd_check, "catfile", help="check the strict category axioms")
    add("eval", cmd_eval, "catfile", "tree", help="evaluate a category at a stable tree")
    add("univalent", cmd_univalent, "catfile", help="stable univalence")
    add("equiv", cmd_equiv, "catfile", help="omega-equivalences per dimension")
    add("loops", cmd_loops, "catfile", help="loops at the basepoint")
    q = add("shift", cmd_shift, "catfile", help="shift all dimensions by k")
    q.add_argument("shift", type=int, metavar="k")
    q = add("tower", cmd_tower, "catfile", help="stable cell counts of the tower")
    q.add_argument("-L", type=int, required=True)
    for name, fn in (("stablecells", cmd_stablecells), ("cellsthm", cmd_cellsthm)):
        q = add(name, fn, "catfile")
        q.add_argument("-k", type=int, required=True)
        q.add_argument("-L", type=int, required=True)
    add("groupoidal", cmd_groupoidal, "catfile", help="every cell an omega-equivalence")
    q = add("harness", cmd_harness, help="run the property harness")
    q.add_argument("suite", nargs="?", default="all")
    q.add_argument("--seed", type=int, default=0)
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # a leading space keeps argparse from reading "-2@(())" as an option
    argv = [" " + x if _NEGATIVE_TREE.match(x) else x for x in argv]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        args.fn(args)
    except fm.ParseError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 2
    except _Fail:
        return 1
    except (ValueError, TreeError) as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
