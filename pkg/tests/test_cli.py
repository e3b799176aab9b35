import io
import json
import subprocess
import sys
from fractions import Fraction as F

import pytest

from ldegeom import Instance, Solution, decompose, trace
from ldegeom.cli import parse_instance_file, render_trace, run
from ldegeom.errors import NonPositiveCoefficient, ParseError
from ldegeom.serialize import (
    certificate_from_json,
    certificate_to_json,
    solutions_from_json,
    solutions_to_json,
    trace_from_json,
    trace_to_json,
)

EX = ["--a", "6", "--b", "2,3,5", "--x", "2", "--y", "2,1,1"]


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_decompose_text():
    code, out, _ = call("decompose", *EX, "--format", "text")
    assert code == 0
    assert "1/3*((2),(6,0,0)) + 1/6*((3),(0,6,0)) + 1/6*((5),(0,0,6))" in out
    assert "slack (weight of 0) = 1/3" in out


def test_decompose_json_and_reduce():
    code, out, _ = call("decompose", *EX, "--format", "json", "--reduce")
    assert code == 0
    obj = json.loads(out)
    assert obj["lambda"] == [["1/3", "1/6", "1/6"]] and obj["slack"] == "1/3"
    assert obj["generators"][2] == {"i": 1, "j": 3, "coef": "1/6"}


def test_decompose_not_minimal_is_negative():
    code, out, _ = call("decompose", "--a", "2,3", "--b", "2,5", "--x", "2,1", "--y", "1,1")
    assert code == 1 and out.startswith("not minimal")


def test_membership_minimal_generators():
    code, out, _ = call("membership", *EX, "--vertices", "minimal-generators")
    assert code == 1
    assert out.strip() == "infeasible: forced (2/3,1/2,1/6), sum 4/3 > 1"


def test_membership_generators():
    code, out, _ = call("membership", *EX, "--vertices", "generators", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["feasible"] and obj["sum"] == "2/3"


def test_graver_text_table():
    code, out, _ = call("graver", "--alpha", "1,2,-3", "--format", "text")
    assert code == 0
    lines = out.splitlines()
    assert lines[1] == "z1+2z2=3z3 | ±(1,1,1) | ±(0,3,2), ±(1,1,1), ±(3,0,1) | ±{0, 3e1+e3, 3e2+2e3}"
    assert lines[2] == "z1+2z2+3z3=0 | ±(1,1,-1) | no nonzero solution | {0}"
    assert lines[3].startswith("z1=2z2+3z3 | ±(1,-1,1) |") and lines[3].endswith("±{0, 2e1-e2, 3e1+e3}")
    assert lines[4].startswith("z1+3z3=2z2 | ±(1,-1,-1) |") and lines[4].endswith("±{0, 2e1-e2, -3e2-2e3}")
    assert lines[5] == "F = {0, ±(3e1+e3), ±(3e2+2e3), ±(2e1-e2)}"


def test_graver_json():
    code, out, _ = call("graver", "--alpha=1,2,-3", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert len(obj["graver"]) == 10
    assert obj["f_sets"]["+,+,-"] == [[0, 0, 0]]
    assert all(c["orientation"] is not None for c in obj["certificates"])


def test_trace_text():
    code, out, _ = call("trace", *EX)
    assert code == 0
    assert "6+6=2+2+3+5 | a_2=6, b_4=5" in out
    assert "lambda^(5)_{1,1} = 1" in out


def test_render_trace_base_case():
    text = render_trace(trace(Instance((1,), (1,)), Solution((1,), (1,))))
    rows = [ln for ln in text.splitlines() if ln[:1].isdigit()]
    assert rows == ["1 | ((1),(1)) | 1=1 | a_1=1, b_1=1", "1 | 1=1 | a_1=1, b_1=1 | lambda^(1)_{1,1} = 1"]


def test_hilbert_and_genfun():
    code, out, _ = call("hilbert", "--a", "2,3", "--b", "5")
    assert code == 0 and out.splitlines() == ["3+3+3+3+3=5+5+5", "2+3=5", "2+2+2+2+2=5+5"]
    code, out, _ = call("genfun", "--a", "6", "--b", "2,3,5")
    assert code == 0 and out.strip() == "(1 - z1*w1^3)(1 - z1*w2^2)(1 - z1^5*w3^6)"


def test_cfs_verbs():
    code, out, _ = call("cfs", *EX, "--k-max", "2")
    assert code == 1 and out.startswith("not completely fundamental: 2*((2),(2,1,1))")
    code, out, _ = call("cfs", "--a", "6", "--b", "2,3,5", "--x", "1", "--y", "3,0,0")
    assert code == 0 and "no counterexample up to k = 4" in out
    code, out, _ = call("cfs", "--a", "6", "--b", "2,3,5", "--format", "json")
    assert code == 0 and len(json.loads(out)) == 3


def test_check_verb():
    code, out, _ = call("check", "--a", "2,3", "--b", "2,5", "--x", "2,1", "--y", "1,1")
    assert code == 1 and "identity: 2+2+3=2+5" in out and "minimal: no" in out
    code, out, _ = call("check", *EX)
    assert code == 0 and "minimal: yes" in out


def test_extreme_verb():
    code, out, _ = call("extreme", "--a", "2,3", "--b", "5")
    assert code == 0 and "equals {0} + generators: True" in out
    code, _, err = call("extreme", "--a", "6", "--b", "2,3,5")
    assert code == 2 and "gcd" in err


@pytest.mark.parametrize("argv", [
    ["hilbert", "--a", "0", "--b", "2"],
    ["hilbert", "--a", "1,x", "--b", "2"],
    ["hilbert", "--a", "2"],
    ["decompose", "--a", "6", "--b", "2,3,5", "--x", "1", "--y", "1,0,0"],
    ["decompose", "--a", "6", "--b", "2,3,5"],
    ["frobnicate"],
    ["hilbert", "--a", "2", "--b", "3", "--max-nodes", "0"],
    ["graver"],
])
def test_invalid_input_exit_2(argv):
    code, _, err = call(*argv)
    assert code == 2 and err.startswith("error:")


def test_budget_exit_3():
    code, _, err = call("hilbert", "--a", "11,12,7", "--b", "9,10,8", "--max-nodes", "50")
    assert code == 3 and "budget of 50" in err


def test_input_file(tmp_path):
    p = tmp_path / "ex.json"
    p.write_text(json.dumps({"a": [6], "b": [2, 3, 5], "x": [2], "y": [2, 1, 1]}))
    code, out, _ = call("decompose", "--input", str(p), "--format", "json")
    assert code == 0 and json.loads(out)["slack"] == "1/3"


def test_parse_instance_file_examples(tmp_path):
    p = tmp_path / "i.json"
    p.write_text('{"a":[6],"b":[2,3,5]}')
    assert parse_instance_file(p) == (Instance((6,), (2, 3, 5)), None)
    p.write_text('{"a":[1],"b":[1],"x":[1],"y":[1]}')
    assert parse_instance_file(p) == (Instance((1,), (1,)), Solution((1,), (1,)))
    p.write_text('{"a":[6]}')
    with pytest.raises(ParseError):
        parse_instance_file(p)
    p.write_text('{"a":[0],"b":[1]}')
    with pytest.raises(NonPositiveCoefficient):
        parse_instance_file(p)
    p.write_text("not json")
    with pytest.raises(ParseError):
        parse_instance_file(p)


def test_round_trips(ex_inst, ex_sol):
    cert = decompose(ex_inst, ex_sol)
    assert certificate_from_json(json.loads(json.dumps(certificate_to_json(cert)))) == cert
    levels = trace(ex_inst, ex_sol)
    assert trace_from_json(json.loads(json.dumps(trace_to_json(levels)))) == levels
    sols = [ex_sol, Solution((1,), (3, 0, 0))]
    assert solutions_from_json(json.loads(json.dumps(solutions_to_json(sols)))) == sols
    assert json.loads(json.dumps(certificate_to_json(cert)))["lambda"][0][0] == "1/3"
    assert F(json.loads(render_trace(levels, "json"))[1]["lambdas"][1][0]) == F(1, 2)


def test_certificate_from_json_rejects():
    with pytest.raises(ParseError):
        certificate_from_json({"slack": "0"})
    with pytest.raises(ParseError):
        certificate_from_json({"lambda": [["1/2"]], "slack": "1/3"})
    with pytest.raises(ParseError):
        trace_from_json([{"level": 1}])


def test_output_is_deterministic():
    runs = {call("graver", "--alpha", "1,2,-3", "--format", "json")[1] for _ in range(3)}
    assert len(runs) == 1
    runs = {call("trace", *EX, "--format", "json")[1] for _ in range(3)}
    assert len(runs) == 1


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "ldegeom", "genfun", "--a", "1", "--b", "1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "(1 - z1*w1)"
