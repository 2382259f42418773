import pytest
from hypothesis import given

from strategies import stable_trees, trees
from zcat import formats as fm
from zcat import generators as gen
from zcat import strictcat as sc
from zcat.trees import Spine, StableTree, Tree, spine

BAD = {"dangling_src", "missing_comp", "duplicate_cell"}


@given(trees)
def test_tree_roundtrip(t):
    assert fm.parse_tree(fm.print_tree(t)) == t


@given(stable_trees)
def test_stable_tree_roundtrip(s):
    text = fm.print_stable_tree(s)
    assert fm.parse_stable_tree(text) == s
    assert fm.print_stable_tree(fm.parse_stable_tree(text)) == text


@given(stable_trees)
def test_spine_roundtrip(s):
    sp = spine(s)
    assert fm.parse_spine(fm.print_spine(sp)) == sp


def test_pinned_syntax():
    assert fm.parse_stable_tree("-2@(()())") == StableTree(-2, Tree((Tree(), Tree())))
    assert fm.parse_stable_tree("(())") == StableTree(0, Tree((Tree(),)))
    assert fm.parse_spine("n=3;m=") == Spine((3,))
    assert fm.print_spine(Spine((1, 2), (0,))) == "n=1,2;m=0"


@pytest.mark.parametrize("text, offset", [("(()", 3), ("())", 2), ("x", 0), ("", 0), ("3@(()", 5), ("3@", 2)])
def test_tree_parse_errors_carry_offsets(text, offset):
    with pytest.raises(fm.ParseError) as e:
        fm.parse_stable_tree(text)
    assert e.value.offset == offset


@pytest.mark.parametrize("text", ["n=1;m=0", "n=;m=", "n=1,1", "n=a;m="])
def test_bad_spines(text):
    with pytest.raises((fm.ParseError, ValueError)):
        fm.parse_spine(text)


@pytest.mark.parametrize("name, X", gen.small_suite() + gen.gaunt_suite(0),
                         ids=[n for n, _ in gen.small_suite() + gen.gaunt_suite(0)])
def test_category_roundtrip(name, X):
    text = fm.print_category(X)
    Y = fm.parse_category(text)
    assert fm.print_category(Y) == text
    assert Y.cells == X.cells and Y.basepoint == X.basepoint


def test_fixtures_roundtrip_byte_exact(fixtures_dir):
    for p in sorted(fixtures_dir.glob("*.cat")):
        if p.stem in BAD:
            continue
        raw = p.read_bytes()
        assert fm.print_category(fm.parse_category(raw.decode())).encode() == raw, p.name


def test_comments_and_blank_lines_are_ignored():
    text = "# a point\n\nwindow 0 0\nbasepoint p\ncells 0: p\n"
    assert fm.parse_category(text) == gen.point()


def test_dangling_reference(fixtures_dir):
    text = (fixtures_dir / "dangling_src.cat").read_text()
    with pytest.raises(fm.ParseError) as e:
        fm.parse_category(text)
    line_start = text.index("src 1: g->q")
    assert e.value.offset == line_start


def test_missing_composition(fixtures_dir):
    with pytest.raises(fm.MissingCompositionEntry):
        fm.parse_category((fixtures_dir / "missing_comp.cat").read_text())


def test_duplicate_cell(fixtures_dir):
    with pytest.raises(fm.DuplicateCell) as e:
        fm.parse_category((fixtures_dir / "duplicate_cell.cat").read_text())
    assert isinstance(e.value, sc.DuplicateCell)


@pytest.mark.parametrize("text", [
    "cells 0: a\n",
    "window 1 0\n",
    "window 0 0\nwindow 0 0\n",
    "window 0 0\ncells 1: a\n",
    "window 0 0\nfrobnicate\n",
    "window 0 0\ncells 0: a\nbasepoint b\n",
    "",
])
def test_malformed_files(text):
    with pytest.raises(fm.ParseError):
        fm.parse_category(text)
