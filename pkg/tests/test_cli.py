import json
import subprocess
import sys

import jsonschema
import pytest

from weylgroupoid.cli import canonical_json, load_schema, main, run

TC = '{"ring":{"variables":["X1","X2","X3"],"mode":"affine"},"generators":["X1^2 - X2","X1^3 - X3"]}'

CASES = [
    ["describe", "--type", "q", "--n", "3"],
    ["describe", "--type", "osp", "--m", "5", "--n", "4"],
    ["check", "--type", "gl", "--m", "2", "--n", "1", "--poly", "X1 + X2 + Y1"],
    ["telem", "--type", "gl", "--m", "2", "--n", "2", "--space", "multiplicative"],
    ["telem", "--type", "gl", "--m", "1", "--n", "1"],
    ["ev", "--type", "q", "--n", "3", "--space", "torus", "--poly", "x1*x2*x3"],
    ["atyp", "--type", "gl", "--m", "2", "--n", "1", "--point", '{"eps":["3","1"],"delta":["-1"]}'],
    ["orbit", "--type", "gl", "--m", "2", "--n", "2", "--point", '{"eps":["0","0"],"delta":["0","0"]}'],
    ["equiv", "--type", "gl", "--m", "1", "--n", "1", "--a", '{"eps":["2"],"delta":["-2"]}', "--b", '{"eps":["5"],"delta":["-5"]}'],
    ["equiv", "--type", "gl", "--m", "1", "--n", "1", "--a", '{"eps":["2"],"delta":["-1"]}', "--b", '{"eps":["5"],"delta":["-5"]}'],
    ["groebner", "--ideal", TC, "--order", "lex", "--eliminate", "X1", "--member", "X2^3 - X3^2", "--radical", "X2"],
    ["sclosure", "--type", "gl", "--m", "1", "--n", "1", "--ideal", '["X1 - 1", "Y1 + 1"]', "--symmetrize"],
    ["orbitideal", "--type", "gl", "--m", "2", "--n", "1", "--point", "[3, 1, -1]", "--symmetrize"],
    ["selftest", "--criteria", "1,2"],
]


def invoke(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, json.loads(out), out


@pytest.mark.parametrize("argv", CASES, ids=lambda a: a[0])
def test_outputs_validate(argv, capsys):
    code, doc, _ = invoke(argv, capsys)
    assert code == 0
    jsonschema.validate(doc, load_schema(argv[0]))
    assert doc["paper_ref"] and "timing" not in doc


def test_determinism(capsys):
    for argv in CASES[:-1]:
        _, _, a = invoke(argv, capsys)
        _, _, b = invoke(argv, capsys)
        assert a == b


def test_check_example(capsys):
    _, doc, _ = invoke(["check", "--type", "gl", "--m", "1", "--n", "1", "--poly", "X1"], capsys)
    assert doc["result"]["member"] is False


def test_describe_example(capsys):
    _, doc, _ = invoke(["describe", "--type", "q", "--n", "3"], capsys)
    r = doc["result"]
    assert r["weyl_group"] == "S3" and r["defect"] == 1 and len(r["omega"]) == 3


def test_equiv_witness(capsys):
    _, doc, _ = invoke(CASES[8], capsys)
    assert doc["result"]["equivalent"] and doc["result"]["witness"]["t"] == ["3"]
    _, doc, _ = invoke(CASES[9], capsys)
    assert not doc["result"]["equivalent"] and doc["result"]["witness"] is None


def test_timing_flag(capsys):
    _, doc, _ = invoke(CASES[0] + ["--timing"], capsys)
    assert doc["timing"]["seconds"] >= 0
    jsonschema.validate(doc, load_schema("describe"))


@pytest.mark.parametrize("argv,code,kind", [
    (["atyp", "--type", "gl", "--m", "1", "--n", "1", "--point", "{bad"], 1, "input"),
    (["check", "--type", "gl", "--m", "1", "--n", "1", "--poly", "X1 +"], 1, "input"),
    (["atyp", "--type", "p", "--n", "3", "--point", "[1, 2, 3]"], 2, "domain"),
    (["describe", "--type", "sl", "--m", "2", "--n", "2"], 2, "domain"),
    (["sclosure", "--type", "q", "--n", "3", "--ideal", '["X1"]'], 2, "domain"),
    (["groebner", "--ideal", TC, "--max-pairs", "1"], 3, "budget"),
])
def test_exit_codes(argv, code, kind, capsys):
    got, doc, _ = invoke(argv, capsys)
    assert got == code
    assert doc["error"]["kind"] == kind
    jsonschema.validate(doc, load_schema("error"))


def test_budget_env():
    import os

    env = dict(os.environ, WEYLGROUPOID_MAX_PAIRS="1")
    proc = subprocess.run([sys.executable, "-m", "weylgroupoid", "groebner", "--ideal", TC],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 3
    assert json.loads(proc.stdout)["config"]["budget"]["max_pairs"] == 1


def test_ideal_file_and_output(tmp_path, capsys):
    p = tmp_path / "tc.json"
    p.write_text(TC)
    out = tmp_path / "out.json"
    assert main(["groebner", "--ideal", str(p), "--output", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["result"]["basis"] == ["X1^2 - X2", "X1*X2 - X3", "-X1*X3 + X2^2"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "weylgroupoid", "describe", "--type", "gl", "--m", "1", "--n", "1"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["result"]["label"] == "gl(1|1)"


def test_canonical_json_sorted():
    assert canonical_json({"b": 1, "a": [1, 2]}) == '{"a":[1,2],"b":1}'
