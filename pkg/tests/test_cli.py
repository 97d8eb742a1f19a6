"""CLI verbs, exit codes, JSON round-trips, and output determinism."""

import io
import json
from contextlib import redirect_stdout

from qdeg.cli import decode_degree, decode_root, encode_degree, run
from qdeg.degreelattice import Degree
from qdeg.weylgroup import Parabolic


def run_capture(argv):
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = run(argv)
    return code, buf.getvalue()


def test_dx_g2():
    code, out = run_capture(["dx", "--type", "G", "--rank", "2", "--parabolic", ""])
    assert code == 0
    assert "[2, 2]" in out


def test_cascade_a2():
    code, out = run_capture(["cascade", "--type", "A", "--rank", "2", "--json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["schema"] == "qdeg/1"
    assert doc["cascade"] == [[1, 1]]


def test_z_verb():
    code, out = run_capture(
        ["z", "--type", "B", "--rank", "3", "--parabolic", "2", "--degree", "1,0", "--json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["z_max"] and doc["z_min"]


def test_verify_g2_examples_exit_zero():
    code, _ = run_capture(["verify", "--suite", "g2-examples", "--type", "G", "--rank", "2"])
    assert code == 0


def test_usage_errors_exit_two():
    code, _ = run_capture(["roots", "--type", "X", "--rank", "9"])
    assert code == 2
    code, _ = run_capture(["verify", "--suite", "nonsense", "--type", "A", "--rank", "2"])
    assert code == 2
    code, _ = run_capture(["delta", "--type", "A", "--rank", "2", "--u", "7"])
    assert code == 2
    code, _ = run_capture(["z", "--type", "A", "--rank", "2", "--degree", "1"])
    assert code == 2


def test_json_round_trip_roots():
    code, out = run_capture(["roots", "--type", "G", "--rank", "2", "--json"])
    assert code == 0
    doc = json.loads(out)
    roots = [decode_root(r["root"]) for r in doc["positive_roots"]]
    assert (3, 2) in roots and len(roots) == 6
    assert doc["positive_roots"][-1]["coroot"]


def test_degree_round_trip():
    p = Parabolic.from_indices(3, {1})
    d = Degree(p, (2, 0))
    assert decode_degree(3, encode_degree(d)) == d


def test_delta_json_and_determinism():
    argv = ["delta", "--type", "G", "--rank", "2", "--parabolic", "1", "--u", "2,1,2,1", "--json"]
    code1, out1 = run_capture(argv)
    code2, out2 = run_capture(argv)
    assert code1 == code2 == 0
    assert out1 == out2
    doc = json.loads(out1)
    assert doc["front"] == [{"coeffs": {"2": 2}, "parabolic": [1]}]


def test_verify_all_parabolics():
    code, out = run_capture(
        ["verify", "--suite", "uniqueness", "--type", "B", "--rank", "2", "--all-parabolics", "--json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert len(doc["reports"]) == 4
    assert all(r["passed"] for r in doc["reports"])
    # "--parabolic all" spells the same iteration
    code2, out2 = run_capture(
        ["verify", "--suite", "uniqueness", "--type", "B", "--rank", "2", "--parabolic", "all", "--json"]
    )
    assert code2 == 0 and out2 == out


def test_delta2_verb_and_cap():
    code, out = run_capture(
        ["delta2", "--type", "G", "--rank", "2", "--u", "", "--v", "", "--json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["front"] == [{"coeffs": {"1": 0, "2": 0}, "parabolic": []}]
    code, _ = run_capture(
        ["delta2", "--type", "B", "--rank", "3", "--u", "", "--v", "", "--cap", "5"]
    )
    assert code == 2  # coset enumeration exceeds the requested cap


def test_verify_counterexample_exits_one(monkeypatch):
    from qdeg.distance import suites

    def broken(group, parabolic, pad):
        return (suites.CheckResult("always-fails", False, 1, "planted"),)

    monkeypatch.setitem(suites._SUITES, "planted-failure", broken)
    code, out = run_capture(
        ["verify", "--suite", "planted-failure", "--type", "A", "--rank", "2"]
    )
    assert code == 1
    assert "COUNTEREXAMPLE" in out and "planted" in out


def test_exceptional_verb():
    code, out = run_capture(["exceptional", "--type", "F", "--rank", "4", "--json"])
    assert code == 0
    doc = json.loads(out)
    assert [r["root"] for r in doc["exceptional"]] == [[1, 2, 2, 2], [1, 2, 4, 2]]
    assert doc["delta_minus_circ"] == [1]
