import json
import os
import subprocess

import jsonschema
import pytest

import e8lab

SCHEMA_PATH = os.environ.get(
    "E8LAB_SCHEMA", os.path.join(os.path.dirname(__file__), "..", "..", "schema", "report.schema.json")
)


@pytest.fixture(scope="module")
def schema():
    with open(SCHEMA_PATH) as f:
        return json.load(f)


def test_root_data():
    info = e8lab.diagram_info("E8")
    assert info["degrees"] == [2, 8, 12, 14, 18, 20, 24, 30]
    assert info["positive_roots"] == 120
    assert info["w0_is_minus_id"] is True
    assert len(e8lab.positive_roots("E6")) == 36
    assert e8lab.invariant_degrees("A3") == [2, 3, 4]


def test_garside():
    assert e8lab.normal_form("A2", [1, 2, 1, -2]) == (0, [[2, 1]])
    delta = e8lab.garside_element("E8")
    assert len(delta) == 120
    assert e8lab.normal_form("E8", delta) == (1, [])
    assert e8lab.is_central("E8", delta)
    assert not e8lab.is_central("E8", [1])
    assert e8lab.are_equal("A2", [1, 2, 1], [2, 1, 2])
    assert e8lab.degree("E8", [1, -2, 3]) == 1
    r = e8lab.inn_equal("E8", [1] + delta, [1])
    assert r == {"equal": True, "witness": 1, "modulo": "delta"}


def test_singularities():
    m = e8lab.milnor("x^3+y^5")
    assert m["milnor_number"] == 8
    assert len(m["basis"]) == 8
    assert len(e8lab.build_versal("x^3+y^5")["parameters"]) == 8
    assert e8lab.fiber_is_smooth("x^3+y^5", ["1"] + ["0"] * 7)
    assert not e8lab.fiber_is_smooth("x^3+y^5", ["0"] * 8)
    with pytest.raises(ValueError):
        e8lab.milnor("x^2+z")
    with pytest.raises(RuntimeError):
        e8lab.milnor("x^2*y^2")


def test_semigroups():
    s = e8lab.semigroup_from_generators([3, 5])
    assert s["gaps"] == [1, 2, 4, 7]
    assert s["classification"] == "even_component"
    assert e8lab.semigroup_from_gaps([1, 2, 3, 7])["generators"] == [4, 5, 6]
    assert e8lab.spin_parity([1, 2, 4, 7]) == (2, "even")
    with pytest.raises(ValueError):
        e8lab.semigroup_from_generators([4, 6])


def test_monodromy():
    rel = e8lab.check_relations("E8")
    assert rel["all_passed"] and rel["braid_relations"] == 7 and rel["commutation_relations"] == 21
    assert e8lab.rep_word("A2", [1]) == [[1, -1], [0, 1]]
    matrix, order = e8lab.delta_image("E8")
    assert order == 1
    assert matrix == [[int(i == j) for j in range(8)] for i in range(8)]
    r = e8lab.kernel_search("A2", 12)
    assert len(r["words"]) == 2 and r["complete"]
    for w in r["words"]:
        assert e8lab.verify_kernel_certificate("A2", w) == (False, True)


def test_verify_suites():
    checks = e8lab.verify_paper("gaps")
    assert len(checks) == 1 and checks[0]["passed"]


@pytest.mark.parametrize(
    "args",
    [
        ["dynkin", "info", "E8"],
        ["dynkin", "roots", "A3"],
        ["artin", "normal-form", "E6", "--word", "1 2 -3"],
        ["artin", "inn-equal", "E6", "--word", "1", "--other", "1"],
        ["milnor", "--poly", "x^3+y^5"],
        ["versal", "--poly", "x^3+y^5", "--smooth", "1,0,0,0,0,0,0,0"],
        ["semigroup", "--gens", "3,5", "--classify"],
        ["monodromy", "check-relations", "E8"],
        ["monodromy", "delta", "E8"],
        ["verify-paper", "orbit"],
        ["milnor", "--poly", "x^2+z"],
        ["semigroup", "--gens", "4,6"],
        ["dynkin", "info", "E7", "--timing"],
    ],
)
def test_reports_match_schema(schema, args):
    code, out, err = e8lab.run_cli(args)
    assert code in (0, 1)
    report = json.loads(out)
    jsonschema.validate(report, schema)
    assert report["command"] == args
    if code == 1:
        assert "error" in report
    if "--timing" not in args:
        assert e8lab.run_cli(args)[1] == out


def test_usage_errors():
    assert e8lab.run_cli(["verify-paper", "no-such-suite"])[0] == 2
    assert e8lab.run_cli(["frobnicate"])[0] == 2


@pytest.mark.skipif("E8LAB_CLI" not in os.environ, reason="CLI binary path not given")
def test_cli_binary():
    proc = subprocess.run([os.environ["E8LAB_CLI"], "semigroup", "--gens", "3,5"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["gaps"] == [1, 2, 4, 7]
