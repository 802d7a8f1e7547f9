import json

import jsonschema
import pytest

from schubsing.cli import load_schema, main
from schubsing.rootsystem import parse_root


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    data = json.loads(out)
    name = data["schema"].split("/")[1]
    jsonschema.validate(data, load_schema(name))
    return code, data


def test_smooth_b2(capsys):
    code, out, _ = run(capsys, "smooth", "B2", "s1 s2 s1")
    assert code == 1
    assert "maximal singularities: s1" in out
    assert "failed b2pair" in out and "gamma = -a1-a2" in out
    code, data = run_json(capsys, "smooth", "B2", "s1 s2 s1")
    assert data["maximal_singularities"] == ["s1"]
    assert run(capsys, "smooth", "B2", "s1 s2")[0] == 0


def test_smooth_point_exit_codes(capsys):
    assert run(capsys, "smooth", "B2", "s1 s2 s1", "s2 s1")[0] == 0
    assert run(capsys, "smooth", "B2", "s1 s2 s1", "s1")[0] == 1
    code, data = run_json(capsys, "smooth", "B2", "s1 s2 s1", "s1")
    assert data["failed"] == "b2pair"
    assert run(capsys, "smooth", "A3", "s2 s1 s3 s2", "--seed", "4")[0] == 1


def test_roots(capsys):
    code, out, _ = run(capsys, "roots", "A1")
    assert code == 0 and "2 roots" in out
    code, data = run_json(capsys, "roots", "B2")
    assert len(data["roots"]) == 8


@pytest.mark.parametrize("argv", [
    ("interval", "B2", "s1 s2 s1"),
    ("graph", "B2", "s1 s2 s1"),
    ("curves", "B2", "s1 s2 s1", "s1"),
    ("te", "B2", "s1 s2 s1", "s1"),
    ("isotropy", "B2", "s1 s2 s1", "s1"),
    ("peterson", "B2", "s1 s2 s1", "s1", "a2"),
    ("theta", "B2", "s1 s2 s1", "s1"),
    ("b2pairs", "B2", "s1 s2 s1", "s1"),
    ("mult", "B2", "s1 s2 s1", "s1", "a2"),
    ("mult", "B2", "s1 s2 s1", "s1"),
    ("verify", "B2"),
])
def test_json_outputs_validate(capsys, argv):
    code, _ = run_json(capsys, *argv)
    assert code == 0


def test_text_outputs_round_trip(capsys):
    code, out, _ = run(capsys, "te", "B2", "s1 s2 s1", "s1")
    weights = out.split(":", 1)[1].split(",")
    assert {parse_root(t.strip(), 2) for t in weights} == {(1, 0), (0, -1), (-2, -1)}
    code, out, _ = run(capsys, "peterson", "B2", "s1 s2 s1", "s1", "2a1+a2")
    assert out.strip() == "translate: -2a1-a2, -a1-a2, a1"
    assert run(capsys, "mult", "B2", "s1 s2 s1", "s1")[1].strip() == "multiplicity at s1: 2"
    assert run(capsys, "b2pairs", "B2", "s1 s2 s1", "s1")[1].startswith("1 orthogonal")


def test_dot(capsys):
    code, out, _ = run(capsys, "graph", "B2", "s1 s2 s1", "--dot")
    assert out.startswith('graph "B2 s1 s2 s1" {') and out.count(" -- ") == 9
    assert run(capsys, "graph", "B2", "e", "--format", "dot")[1].count("--") == 0
    with pytest.raises(SystemExit):
        main(["te", "B2", "e", "e", "--format", "dot"])


def test_stable_output(capsys):
    a = run(capsys, "smooth", "B3", "s1 s2 s3 s2 s1", "--format", "json")[1]
    b = run(capsys, "smooth", "B3", "s1 s2 s3 s2 s1", "--format", "json")[1]
    assert a == b


@pytest.mark.parametrize("argv,needle", [
    (("roots", "G2"), "allow_g2"),
    (("smooth", "G2", "s1", "--allow-g2"), "not available for G2"),
    (("te", "B2", "s1 s2", "s2 s1"), "is not <="),
    (("roots", "Q7"), "cannot parse"),
    (("te", "B2", "s1 x2", "e"), "bad Weyl word"),
    (("peterson", "B2", "s1 s2 s1", "s1", "a1+2a2"), "not a root"),
    (("peterson", "B2", "s1 s2 s1", "e", "a1"), "smooth far endpoint"),
    (("theta", "A3", "s2 s1 s3 s2", "e"), "neither smooth"),
    (("peterson", "G2", "s2 s1 s2 s1", "s2 s1", "3a1+2a2", "--allow-g2"), "--singular-top"),
    (("verify", "B4"), "budget"),
])
def test_errors(capsys, argv, needle):
    code, out, err = run(capsys, *argv)
    assert code == 2 and needle in err and err.count("\n") == 1


def test_g2_peterson(capsys):
    base = ("peterson", "G2", "s2 s1 s2 s1", "s2 s1", "3a1+2a2", "--allow-g2", "--singular-top", "s2 s1")
    assert run(capsys, *base)[1].strip() == "translate: -3a1-2a2, -2a1-a2, a2, a1+a2"
    out = run(capsys, *base, "--reading", "reflect")[1]
    assert "-3a1-a2" in out
    code, data = run_json(capsys, "theta", "G2", "s2 s1 s2 s1", "s2 s1", "--allow-g2",
                          "--singular-top", "s2 s1")
    assert data["kind"] == "tau-sum"


def test_verify_cli(capsys):
    code, out, _ = run(capsys, "verify", "A3", "--exhaustive", "--seeds", "2")
    assert code == 0
    row = out.splitlines()[1].split()
    assert row[:4] == ["A3", "24", "2", "0"]


def test_cache_dir(capsys, tmp_path):
    from schubsing.weyl import _INTERVALS
    code, out, _ = run(capsys, "interval", "B3", "s1 s2 s3", "--cache-dir", str(tmp_path))
    files = list(tmp_path.iterdir())
    assert code == 0 and len(files) == 1
    _INTERVALS.clear()
    code, out2, _ = run(capsys, "interval", "B3", "s1 s2 s3", "--cache-dir", str(tmp_path))
    assert out2 == out


def test_module_entry_point():
    import subprocess
    import sys
    r = subprocess.run([sys.executable, "-m", "schubsing", "roots", "A1"], capture_output=True, text=True)
    assert r.returncode == 0 and "2 roots" in r.stdout
