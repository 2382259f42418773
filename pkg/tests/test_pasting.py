import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import stable_trees
from zcat import oracles as orc
from zcat.pasting import (DimensionMismatch, GlobeMorphism, Sector, WindowTooSmall, canonical_window,
                          compose_globe, compose_inert, enumerate_inerts, globe_hom, globe_inclusion,
                          identity_inert, iterated_boundary, sector_source, sector_target, sectors,
                          spine_cone, suspend_inert)
from zcat.trees import StableTree, Tree, enumerate_trees, globe, normalize

D0 = Tree()
PAIR = StableTree(0, Tree((D0, D0)))


def small_trees(max_nodes=4, offsets=(0, 1)):
    return [normalize(StableTree(z, t)) for t in enumerate_trees(max_nodes) for z in offsets]


# -- sectors ---------------------------------------------------------------------

def test_sectors_of_a_pair():
    assert [str(c) for c in sectors(PAIR, 0)] == ["0:(r,0)", "0:(r,1)", "0:(r,2)"]
    assert [str(c) for c in sectors(PAIR, 1)] == ["1:(r.0,0)", "1:(r.1,0)"]
    assert sectors(PAIR, 2) == []
    assert [str(c) for c in sectors(PAIR, -1)] == ["-1:(t,0)", "-1:(t,1)"]


@given(stable_trees, st.integers(-6, 8))
def test_sector_count_matches_level_sizes(s, k):
    n = normalize(s)
    want = n.level_size(k) + n.level_size(k + 1) if k >= n.offset else 2
    assert len(sectors(n, k)) == want


@given(stable_trees)
def test_globularity_of_sector_boundaries(s):
    n = normalize(s)
    for k in range(n.offset - 1, n.top + 1):
        for c in sectors(n, k):
            for a in (sector_source, sector_target):
                assert a(c) in sectors(n, k - 1)
                assert sector_source(a(c)) == sector_source(sector_source(c)) or k - 1 < n.offset
                assert sector_target(a(c)) == sector_target(sector_target(c)) or k - 1 < n.offset


def test_iterated_boundary():
    c = Sector(2, (0, 0), 0)
    assert iterated_boundary(c, 0, "-") == Sector(0, (), 0)
    assert iterated_boundary(c, 0, "+") == Sector(0, (), 1)
    assert iterated_boundary(c, -1, "+") == Sector(-1, None, 1)


# -- stable globe category -------------------------------------------------------

@pytest.mark.parametrize("m, n", list(itertools.product(range(-4, 5), repeat=2)))
def test_globe_hom_counts_match_congruence(m, n):
    want = 2 if m < n else 1 if m == n else 0
    assert len(globe_hom(m, n)) == want
    if m <= n:
        uf = orc.globe_congruence(m, n)
        assert len({uf.find(w) for w in orc.globe_words(m, n)}) == want


def test_composite_keeps_lowest_sign():
    # relations i+ i^e = i- i^e make the higher generator irrelevant
    f = GlobeMorphism(0, 1, "-")
    g = GlobeMorphism(1, 3, "+")
    assert compose_globe(g, f) == GlobeMorphism(0, 3, "-")
    assert compose_globe(g, GlobeMorphism(1, 1, "id")) == g


def test_globe_compose_mismatch():
    with pytest.raises(DimensionMismatch):
        compose_globe(GlobeMorphism(2, 3, "+"), GlobeMorphism(0, 1, "+"))


@pytest.mark.parametrize("dom, cod, sign", [(2, 1, "+"), (1, 1, "+"), (0, 1, "id"), (0, 1, "x")])
def test_bad_globe_morphisms(dom, cod, sign):
    with pytest.raises(ValueError):
        GlobeMorphism(dom, cod, sign)


def test_globe_representability():
    # k-sectors of the n-globe are exactly the globe maps k -> n
    for n in range(0, 5):
        for k in range(-3, 7):
            assert len(sectors(StableTree(0, globe(n)), k)) == len(globe_hom(k, n))


# -- inert maps ------------------------------------------------------------------

def _as_set(maps):
    return {frozenset((c, f(c)) for c in f.domain()) for f in maps}


@pytest.mark.parametrize("s, t", list(itertools.product(small_trees(3), repeat=2)), ids=str)
def test_inerts_match_brute_force(s, t):
    lo, hi = canonical_window(s, t)
    want = {frozenset(m.items()) for m in orc.brute_inerts(s, t, lo, hi)}
    assert _as_set(enumerate_inerts(s, t)) == want


def test_pair_into_itself():
    maps = enumerate_inerts(PAIR, PAIR)
    assert identity_inert(PAIR) in maps
    assert all(f.is_valid() for f in maps)


def test_globe_into_pair():
    # a 1-cell of the pair: two choices, each determined by its top sector
    maps = enumerate_inerts(StableTree(1, D0), PAIR)
    assert len(maps) == 2


def test_window_too_small():
    with pytest.raises(WindowTooSmall):
        enumerate_inerts(PAIR, PAIR, window=(1, 1))


@pytest.mark.parametrize("s", small_trees(4, (0,)), ids=str)
def test_identity_is_a_unit(s):
    for f in enumerate_inerts(s, s):
        assert compose_inert(identity_inert(s), f) == f == compose_inert(f, identity_inert(s))


def test_composition_associative_and_suspension_functorial():
    ts = small_trees(3, (0,))
    homs = {(a, b): enumerate_inerts(a, b) for a in ts for b in ts}
    for a, b, c in itertools.product(ts, repeat=3):
        for f in homs[(a, b)]:
            for g in homs[(b, c)]:
                gf = compose_inert(g, f)
                assert gf.is_valid()
                assert suspend_inert(gf) == compose_inert(suspend_inert(g), suspend_inert(f))


def test_compose_mismatch():
    with pytest.raises(DimensionMismatch):
        compose_inert(identity_inert(PAIR), identity_inert(StableTree(0, D0)))


def test_broken_assignment_reports_violations():
    f = identity_inert(PAIR)
    bad = dict(f.assignment)
    bad[Sector(1, (0,), 0)] = Sector(1, (1,), 0)
    g = type(f)(f.source, f.target, f.window, bad)
    assert not g.is_valid()
    assert any("not preserved" in v for v in g.violations())


# -- spine cones -----------------------------------------------------------------

@pytest.mark.parametrize("t", enumerate_trees(5), ids=str)
def test_spine_cone_commutes(t):
    s = normalize(StableTree(0, t))
    cone = spine_cone(s)
    assert cone.commutes()
    assert len(cone.leaves) == len(s.body.leaves())
    assert len(cone.meets) == len(cone.leaves) - 1


def test_globe_inclusion_is_valid():
    s = normalize(StableTree(-1, Tree((globe(2), D0))))
    for k in range(s.offset, s.top + 1):
        for c in sectors(s, k):
            assert globe_inclusion(s, c).is_valid()
