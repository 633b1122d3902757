import json
import subprocess
import sys

import pytest

from ladderfiber.cli import main
from ladderfiber.invariants import InvariantReport, invariant_report
from ladderfiber.ladder import validate_shape

EX = {"intervals": [[1, 5], [3, 6], [4, 9]], "r": 2, "name": "example"}


@pytest.fixture
def spec(tmp_path):
    def write(obj, name="spec.json"):
        p = tmp_path / name
        p.write_text(obj if isinstance(obj, str) else json.dumps(obj), encoding="utf-8")
        return str(p)

    return write


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_invariants_example(spec, capsys):
    code, out, _ = run(capsys, "invariants", spec(EX))
    assert code == 0
    rep = json.loads(out)
    want = {"ell_M": 14, "si_Ar": 5, "reg": 8, "a_inv": -6, "red_num": 8,
            "e_L": "3762", "e_M": "48906", "poset_card": 13, "poset_rank": 4, "name": "example"}
    assert {k: rep[k] for k in want} == want


def test_report_round_trip(spec, capsys):
    _, out, _ = run(capsys, "invariants", spec(EX))
    assert InvariantReport.from_dict(json.loads(out)) == invariant_report(validate_shape(EX["intervals"], 2), name="example")


def test_degenerate_report(spec, capsys):
    code, out, _ = run(capsys, "invariants", spec({"intervals": [[1, 1]]}))
    assert code == 0 and json.loads(out)["degenerate"] is True


@pytest.mark.parametrize("text", ["{not json", "[1, 2]", '{"intervals": 3}', '{"intervals": [[1]]}',
                                  '{"intervals": [[1, 2]], "r": "x"}', '{"intervals": [[1, 2]], "name": 5}',
                                  '{"intervals": [[1, 2]], "lambda": [1]}'])
def test_parse_errors(spec, capsys, text):
    code, _, err = run(capsys, "invariants", spec(text))
    assert code == 2 and err


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "invariants", str(tmp_path / "nope.json"))[0] == 2


@pytest.mark.parametrize("ivs, name", [([[1, 3], [1, 4]], "StrictnessViolation"), ([[1, 2], [4, 5]], "GapViolation"),
                                       ([[1, 2], [3, 1]], "EmptyInterval"), ([[2, 3]], "BoundViolation")])
def test_shape_errors(spec, capsys, ivs, name):
    code, _, err = run(capsys, "invariants", spec({"intervals": ivs}))
    assert code == 3 and name in err


def test_normalize_flag(spec, capsys):
    path = spec({"intervals": [[1, 5], [3, 5], [4, 9]]})
    assert run(capsys, "invariants", path)[0] == 3
    code, out, _ = run(capsys, "invariants", path, "--normalize")
    assert code == 0 and json.loads(out)["intervals"] == [[1, 4], [3, 5], [4, 9]]


def test_construct_example(spec, capsys):
    code, out, _ = run(capsys, "construct", spec(EX))
    lines = out.splitlines()
    assert code == 0 and len(lines) == 16
    assert lines[0] == "(1,3,4,1)" and lines[13] == "(5,6,9,2)"
    assert lines[14] == "rounds: {1,3,4} {2,3} {1,2,3} {1,2,3} {1,3}"
    assert lines[15] == "si: 5"


def test_construct_small(spec, capsys):
    _, out, _ = run(capsys, "construct", spec({"intervals": [[1, 2]]}))
    assert out.splitlines() == ["(1,1)", "(2,1)", "rounds: {1}", "si: 1"]


def test_construct_big(spec, capsys):
    path = spec({"intervals": [[1, 7], [7, 12], [8, 13], [9, 14], [12, 17], [14, 18]]})
    assert run(capsys, "construct", path)[1].splitlines()[-1] == "si: 7"


def test_enumerate(spec, capsys):
    path = spec({"intervals": EX["intervals"]})
    assert run(capsys, "enumerate", path, "chains")[1].strip() == "count: 3762"
    assert run(capsys, "enumerate", path, "tableaux")[1].strip() == "count: 3762"
    assert run(capsys, "enumerate", path, "excited")[1].strip() == "count: 3"
    raw = spec({"lambda": [4, 3, 3], "mu": [2, 1, 0]}, "raw.json")
    assert run(capsys, "enumerate", raw, "excited")[1].strip() == "count: 5"


def test_enumerate_list(spec, capsys):
    path = spec({"intervals": [[1, 2], [3, 4]]})
    _, out, _ = run(capsys, "enumerate", path, "chains", "--list")
    assert out.splitlines() == ["(1,2)", "(2,1)", "count: 2"]
    _, out, _ = run(capsys, "enumerate", path, "tableaux", "--list")
    assert out.splitlines()[-1] == "count: 2"


def test_enumerate_cap(spec, capsys):
    code, _, err = run(capsys, "enumerate", spec(EX), "chains", "--cap", "100")
    assert code == 4 and "count so far: 100" in err


def test_ladder_only_command_on_raw_spec(spec, capsys):
    raw = spec({"lambda": [2, 1]})
    assert run(capsys, "construct", raw)[0] == 2


@pytest.mark.parametrize("obj", [{"intervals": [[1, 3], [2, 4]], "r": 2}, {"intervals": [[1, 4], [2, 5]]}, {"intervals": [[1, 1]]}])
def test_verify_pass(spec, capsys, obj):
    code, out, _ = run(capsys, "verify", spec(obj))
    assert code == 0 and out.splitlines()[-1].startswith("verify: PASS")


def test_verify_generic_2x5_count(spec, capsys):
    _, out, _ = run(capsys, "verify", spec({"intervals": [[1, 4], [2, 5]]}))
    assert "naruse=5 backtracking=5 chains(r=1)=5" in out


def test_verify_vacuous_note(spec, capsys):
    _, out, _ = run(capsys, "verify", spec({"intervals": [[1, 1]]}))
    assert "vacuous" in out


def test_verify_cap(spec, capsys):
    assert run(capsys, "verify", spec(EX), "--cap", "50")[0] == 4


def test_render(spec, capsys):
    path = spec({"intervals": EX["intervals"]})
    _, out, _ = run(capsys, "render", path, "tableau-of-A")
    assert out.splitlines()[2] == "[ 1][ 5][ 8][11]"
    _, out, _ = run(capsys, "render", path, "hooks")
    assert out.splitlines()[0] == "[8][7][6][5][2][1]"
    _, out, _ = run(capsys, "render", path, "shape")
    assert out.splitlines()[0] == "[░][ ][ ][ ][ ][ ]"
    _, out, _ = run(capsys, "render", spec({"intervals": [[1, 1]]}, "one.json"), "shape")
    assert "empty diagram" in out


def test_determinism(spec, capsys):
    path = spec({"intervals": EX["intervals"]})
    for cmd in (["invariants"], ["construct"], ["verify", "--lq-cap", "5"]):
        a = run(capsys, *cmd[:1], path, *cmd[1:])
        b = run(capsys, *cmd[:1], path, *cmd[1:])
        assert a == b


def test_module_entry_point(spec):
    proc = subprocess.run([sys.executable, "-m", "ladderfiber.cli", "construct", spec({"intervals": [[1, 2]]})],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.endswith("si: 1\n")
