import json

import pytest

from posetdim.cli import main
from posetdim.crown import crown_realizer


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_classify(capsys, fixture_path):
    assert run(capsys, "classify", fixture_path("crown3.poset"))[:2] == (0, "connected unicycle\n")
    code, out, _ = run(capsys, "classify", fixture_path("twocomponents.poset"))
    assert code == 0
    assert out.splitlines() == [
        "disconnected 2 components",
        "component 1 unicycle: x a b z",
        "component 2 tree: u v w",
    ]


def test_classify_parse_error(capsys, tmp_path):
    f = tmp_path / "bad.poset"
    f.write_text("elements a b\nrel a\n")
    code, _, err = run(capsys, "classify", str(f))
    assert code == 2 and "line 2" in err


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "classify", str(tmp_path / "nope.poset"))[0] == 2


def test_realize_square(capsys, fixture_path):
    code, out, _ = run(capsys, "realize", fixture_path("crown1.poset"))
    assert code == 0
    assert out == "x a b z\nx b a z\nx a b z\n"


def test_realize_crown3(capsys, fixture_path):
    code, out, _ = run(capsys, "realize", fixture_path("crown3.poset"))
    assert code == 0
    assert [tuple(line.split()) for line in out.splitlines()] == list(crown_realizer(3))


def test_realize_machine(capsys, fixture_path):
    code, out, _ = run(capsys, "realize", fixture_path("crown2.poset"), "--format", "machine")
    doc = json.loads(out)
    assert code == 0 and doc["verified"] is True and len(doc["words"]) == 3
    assert doc["elements"] == ["x1", "x2", "z1", "z2"]


def test_realize_unsupported(capsys, fixture_path):
    assert run(capsys, "realize", fixture_path("twocycles.poset"))[0] == 3


def test_realize_reports_internal_failure(capsys, fixture_path, monkeypatch):
    import posetdim.cli as cli

    monkeypatch.setattr(cli, "realize_any", lambda p: (p.labels,) * 3)
    code, _, err = run(capsys, "realize", fixture_path("crown1.poset"))
    assert code == 4 and "do not realize" in err


def test_verify(capsys, fixture_path):
    assert run(capsys, "verify", fixture_path("crown1.poset"), fixture_path("crown1.realizer"))[:2] == (0, "ok\n")
    code, out, _ = run(capsys, "verify", fixture_path("crown3.poset"), fixture_path("crown3_two_words.realizer"))
    assert code == 1
    assert out == "not a realizer: x2 precedes x3 in every word although they are incomparable\n"
    assert run(capsys, "verify", fixture_path("crown3.poset"), fixture_path("crown1.realizer"))[0] == 2


def test_verify_order_violation(capsys, fixture_path, tmp_path):
    f = tmp_path / "r.txt"
    f.write_text("z a b x\n")
    code, out, _ = run(capsys, "verify", fixture_path("crown1.poset"), str(f))
    assert code == 1 and "word 1 puts" in out


def test_dim(capsys, fixture_path):
    for name, expect in [("crown2", "2"), ("crown3", "3"), ("chain", "1"), ("crown1", "2")]:
        code, out, _ = run(capsys, "dim", fixture_path(f"{name}.poset"))
        assert code == 0 and out.splitlines()[0] == expect
    assert run(capsys, "dim", fixture_path("crown3.poset"), "--max-k", "2")[1] == "exceeds 2\n"
    code, out, _ = run(capsys, "dim", fixture_path("crown3.poset"), "--cap", "10")
    assert code == 5 and out == "cap exceeded\n"


def test_gen_gnp_no_edges(capsys):
    code, out, _ = run(capsys, "gen", "--kind", "gnp", "--n", "10", "--c", "0", "--seed", "1")
    assert code == 0
    assert out == "elements 1 2 3 4 5 6 7 8 9 10\n"


def test_gen_is_deterministic_and_honors_env(capsys, monkeypatch):
    first = run(capsys, "gen", "--kind", "unicycle", "--n", "20", "--seed", "7")[1]
    assert first == run(capsys, "gen", "--kind", "unicycle", "--n", "20", "--seed", "7")[1]
    monkeypatch.setenv("POSETDIM_SEED", "7")
    assert run(capsys, "gen", "--kind", "unicycle", "--n", "20")[1] == first
    monkeypatch.setenv("POSETDIM_SEED", "seven")
    assert run(capsys, "gen", "--kind", "unicycle", "--n", "20")[0] == 2


def test_gen_then_classify(capsys, tmp_path):
    for kind in ("unicycle", "tree"):
        out = run(capsys, "gen", "--kind", kind, "--n", "20", "--seed", "7")[1]
        f = tmp_path / f"{kind}.poset"
        f.write_text(out)
        assert run(capsys, "classify", str(f))[1] == f"connected {kind}\n"


@pytest.mark.parametrize("argv", [
    ["gen", "--kind", "ring", "--n", "3"],
    ["gen", "--kind", "tree"],
    ["gen", "--kind", "unicycle", "--n", "3"],
    ["gen", "--kind", "gnp", "--n", "5", "--c", "-1"],
    ["frobnicate"],
])
def test_bad_arguments(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_dot(capsys, fixture_path):
    code, out, _ = run(capsys, "dot", fixture_path("crown3.poset"))
    assert code == 0 and out.count("->") == 6
