import pytest

from zcat import harness
from zcat import oracles as orc


@pytest.mark.parametrize("suite", ["spines", "inerts", "univalence", "towers", "cellsthm"])
@pytest.mark.parametrize("seed", [0, 7])
def test_suite_passes(suite, seed):
    for r in harness.run_suite(suite, seed):
        assert r.passed and r.cases > 0, (r.name, r.counterexample)


def test_report_shape():
    report = harness.run_harness("spines", 3)
    assert report["suite"] == "spines" and report["seed"] == 3 and report["passed"]
    assert all(set(p) == {"suite", "name", "passed", "cases", "counterexample"} for p in report["properties"])


def test_unknown_suite():
    with pytest.raises(harness.UnknownSuite):
        harness.run_harness("nope")
    with pytest.raises(KeyError):
        harness.run_property("nope")


def test_crash_becomes_failure(monkeypatch):
    def broken(check, seed):
        raise RuntimeError("boom")
    broken.__name__ = "broken"
    monkeypatch.setitem(harness._REGISTRY, "spines", [broken])
    (r,) = harness.run_suite("spines")
    assert not r.passed and "boom" in r.counterexample


# -- the oracles themselves ---------------------------------------------------------

def test_catalan():
    assert [orc.catalan(n) for n in range(7)] == [1, 1, 2, 5, 14, 42, 132]


def test_union_find():
    uf = orc.UnionFind()
    uf.union(1, 2)
    uf.union(3, 2)
    uf.find(4)
    assert sorted(map(sorted, uf.classes().values())) == [[1, 2, 3], [4]]


def test_congruence_collapses_all_but_the_first_sign():
    uf = orc.globe_congruence(0, 3)
    classes = {}
    for w in orc.globe_words(0, 3):
        classes.setdefault(uf.find(w), set()).add(w[1][0])
    assert sorted(map(sorted, classes.values())) == [["+"], ["-"]]
