import json

import pytest

from zcat.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_normalize_negative_offset(capsys):
    assert run(capsys, "normalize", "-2@((()))") == (0, "0@()\n", "")


def test_spine_and_back(capsys):
    code, out, _ = run(capsys, "spine", "(()())")
    assert (code, out) == (0, "n=1,1;m=0\n")
    code, out, _ = run(capsys, "fromspine", "n=1,1;m=0")
    assert (code, out) == (0, "0@(()())\n")


def test_suspend_forms(capsys, fixtures_dir):
    assert run(capsys, "suspend", "(()())")[1] == "((()()))\n"
    assert run(capsys, "suspend", "1@()")[1] == "2@()\n"
    code, out, _ = run(capsys, "suspend", str(fixtures_dir / "em_z2_1.cat"))
    assert code == 0 and out.startswith("window 0 2\n")


def test_globehom(capsys):
    assert run(capsys, "globehom", "-1", "1")[1] == "-1->1 +\n-1->1 -\n"
    assert run(capsys, "globehom", "2", "1")[1] == ""


def test_inerts_count(capsys):
    code, out, _ = run(capsys, "inerts", "(())", "(()())")
    assert code == 0 and out.startswith("count: 2\n")


def test_spinecone(capsys):
    code, out, _ = run(capsys, "spinecone", "(()())")
    assert code == 0 and out.endswith("commutes: true\n")


def test_sectors(capsys):
    code, out, _ = run(capsys, "sectors", "(()())", "-k", "0")
    assert out == "0: 0:(r,0) 0:(r,1) 0:(r,2)\n"


def test_eval_pinned(capsys, fixtures_dir):
    code, out, _ = run(capsys, "eval", str(fixtures_dir / "walking_pair.cat"), "(()())")
    assert code == 0 and out.splitlines()[0] == "count: 10"


def test_check(capsys, fixtures_dir):
    assert run(capsys, "check", str(fixtures_dir / "walking_pair.cat"))[:2] == (0, "pass\n")


@pytest.mark.parametrize("fixture", ["dangling_src", "missing_comp", "duplicate_cell"])
def test_bad_fixtures_are_parse_errors(capsys, fixtures_dir, fixture):
    code, _, err = run(capsys, "check", str(fixtures_dir / f"{fixture}.cat"))
    assert code == 2 and err.startswith("parse error")


def test_univalence_and_equivalences(capsys, fixtures_dir):
    iso = str(fixtures_dir / "walking_iso.cat")
    assert run(capsys, "univalent", iso)[1] == "false: 1-cell u\n"
    assert run(capsys, "equiv", iso)[1] == "1: 1x 1y u v\n"
    assert run(capsys, "univalent", str(fixtures_dir / "walking_pair.cat"))[1] == "true\n"


def test_loops_and_shift(capsys, fixtures_dir):
    em = str(fixtures_dir / "em_z2_1.cat")
    assert run(capsys, "loops", em)[1] == "window 0 0\nbasepoint 0\ncells 0: 0 1\n"
    assert run(capsys, "shift", em, "-1")[1].startswith("window -1 0\n")


def test_tower_family(capsys, fixtures_dir):
    em = str(fixtures_dir / "em_z2_m1.cat")
    assert run(capsys, "tower", em, "-L", "3")[1] == "-2: 1 stab=2\n-1: 2 stab=1\n"
    assert run(capsys, "stablecells", em, "-k", "-1", "-L", "3")[1].startswith("-1: 2 stab=1\n")
    assert run(capsys, "cellsthm", em, "-k", "-1", "-L", "3")[1] == "-1: 2 -> 2 stab=1\ntrue\n"
    assert run(capsys, "groupoidal", em)[1] == "true\n"


def test_domain_errors_exit_1(capsys, fixtures_dir):
    code, _, err = run(capsys, "tower", str(fixtures_dir / "susp_discrete2.cat"), "-L", "0")
    assert code == 1 and err.startswith("error")
    code, _, err = run(capsys, "fromspine", "n=1,1;m=1")
    assert code == 1


def test_usage_and_parse_errors_exit_2(capsys):
    assert run(capsys, "bogus")[0] == 2
    code, _, err = run(capsys, "normalize", "(()")
    assert code == 2 and "at byte 3" in err
    assert run(capsys, "check", "/nonexistent.cat")[0] == 2


def test_harness_json(capsys):
    code, out, _ = run(capsys, "harness", "univalence", "--seed", "1")
    report = json.loads(out)
    assert code == 0 and report["passed"] and report["seed"] == 1
    assert {p["name"] for p in report["properties"]} == {"univalence_collapse", "strict_isos"}


def test_unknown_suite(capsys):
    code, _, err = run(capsys, "harness", "nosuch")
    assert code == 1 and "unknown suite" in err
