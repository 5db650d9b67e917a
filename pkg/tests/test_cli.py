import json
from pathlib import Path

import pytest

from quiverloc import cli

DATA = Path(__file__).resolve().parent.parent / "data"
TWOLOOP = str(DATA / "twoloop.json")


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_euler_two_loop(capsys):
    code, out, _ = run(capsys, "euler", TWOLOOP, "-d", "4")
    assert code == 0 and out == "direct=3 localized=3 necklace=3\n"


def test_euler_kronecker(capsys):
    code, out, _ = run(capsys, "euler", str(DATA / "kronecker.json"), "-d", "1,1")
    assert code == 0 and out == "direct=0 localized=0\n"


def test_euler_trace_and_json(capsys):
    code, out, _ = run(capsys, "--json", "euler", str(DATA / "double_chain.json"), "-d", "i=1,j=1,k=1", "--trace", "json")
    data = json.loads(out)
    assert code == 0 and data["direct"] == data["localized"] == 0 and data["necklace"] is None
    code, out, _ = run(capsys, "euler", TWOLOOP, "-d", "3", "--trace", "dot")
    assert "digraph localization" in out


def test_euler_mismatch_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "euler_direct", lambda Q, d: 99)
    code, out, _ = run(capsys, "euler", TWOLOOP, "-d", "4")
    assert code == 1 and "MISMATCH" in out


def test_components_dot(capsys, tmp_path):
    code, out, _ = run(capsys, "components", TWOLOOP, "-d", "4", "--dot", str(tmp_path))
    assert code == 0
    files = sorted(p.name for p in tmp_path.iterdir())
    assert len(files) == len(enumerate_two_loop()) and all(f.endswith(".dot") for f in files)
    assert out.splitlines()[0] == f"{len(files)} components"


def enumerate_two_loop():
    from quiverloc.covering import enumerate_components
    from quiverloc.quiver import loop_quiver

    return enumerate_components(loop_quiver(2), (4,))


def test_cycles_and_nonempty(capsys):
    code, out, _ = run(capsys, "cycles", TWOLOOP, "-d", "2")
    assert out.splitlines() == ["a,a\t(2,0)\tpower", "a,b\t(1,1)\tprimitive", "b,b\t(0,2)\tpower",
                                "# 3 classes, 1 primitive"]
    code, out, _ = run(capsys, "--json", "nonempty", str(DATA / "double_chain.json"), "-d", "1,1,1")
    data = json.loads(out)
    assert data["nonempty"] and data["projective_dim"] == 1
    code, out, _ = run(capsys, "nonempty", str(DATA / "kronecker.json"), "-d", "1,1")
    assert out.startswith("empty:")


def test_rep_commands(capsys, tmp_path):
    code, out, _ = run(capsys, "stringrep", TWOLOOP, "--cycle", "a,b")
    rep = tmp_path / "rep.json"
    rep.write_text(out)
    code, out, _ = run(capsys, "nullcone", str(rep))
    assert code == 0 and out == "nilpotent=False\ntraces_vanish=False\n"
    code, out, _ = run(capsys, "simple-check", str(rep), "-p", "2")
    assert code == 0 and out == "simple=True endomorphism_dim=1 over Fp:2\n"
    code, _, err = run(capsys, "simple-check", str(rep), "-p", "4")
    assert code == 2 and "not prime" in err


def test_hh0(capsys):
    code, out, _ = run(capsys, "hh0", TWOLOOP, "--max-degree", "4")
    assert out.splitlines()[-1] == "(4)\t6\t3"


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["euler", "missing.json", "-d", "1"], "missing.json"),
        (["euler", TWOLOOP, "-d", "1,2"], "dimension vector"),
        (["cycles", TWOLOOP, "-d", "x"], "cannot parse"),
        (["stringrep", TWOLOOP, "--cycle", "a,q"], "q"),
    ],
)
def test_input_errors(capsys, argv, fragment):
    code, _, err = run(capsys, *argv)
    assert code == 2 and fragment in err


def test_bad_json_location(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": ["i"],\n "arrows": [}')
    code, _, err = run(capsys, "euler", str(bad), "-d", "1")
    assert code == 2 and "line 2" in err


def test_deterministic_output(capsys):
    outs = {run(capsys, "--json", "components", TWOLOOP, "-d", "4")[1] for _ in range(3)}
    assert len(outs) == 1


def test_selfcheck_quick(capsys):
    code, out, _ = run(capsys, "selfcheck", "--quick")
    assert code == 0 and out.strip().endswith("all checks passed")
