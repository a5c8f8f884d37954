import io
import json
import subprocess
import sys

import pytest

from linchain.chains import GridReport
from linchain.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_ell_both():
    assert call("ell", "--genus", "0", "--punctures", "5", "--method", "both") == (0, "closed=4 recursive=4\n", "")
    assert call("ell", "--genus", "2", "--punctures", "0", "--method", "closed")[1] == "closed=5\n"


def test_ell_json():
    code, out, _ = call("ell", "--genus", "1", "--punctures", "2", "--json")
    assert code == 0
    assert json.loads(out) == {"surface": {"g": 1, "p": 2}, "closed": 4, "recursive": 4}


def test_xi():
    assert call("xi", "--genus", "2", "--punctures", "0")[1] == "3\n"


def test_decide_cycle_braid():
    assert call("decide", "cycle-braid", "--m", "4", "--strands", "3") == (0, "No\n", "")
    assert call("decide", "cycle-braid", "--m", "5", "--strands", "4", "--pure")[1] == "Yes\n"


def test_decide_other_tables():
    assert call("decide", "path-mcg", "--m", "4", "--genus", "0", "--punctures", "5")[1] == "Yes\n"
    assert call("decide", "path-mcg", "--m", "5", "--genus", "0", "--punctures", "5")[1] == "No\n"
    assert call("decide", "path-braid", "--m", "4", "--strands", "4")[1] == "Yes\n"
    assert call("decide", "cycle-mcg", "--m", "4", "--genus", "1", "--punctures", "2")[1] == "OutOfScope\n"
    code, out, _ = call("decide", "cycle-mcg", "--m", "6", "--genus", "2", "--punctures", "0", "--json")
    assert json.loads(out)["answer"] == "Yes" and json.loads(out)["value"] == 6


def test_domain_errors_exit_2():
    code, out, err = call("decide", "cycle-mcg", "--m", "2", "--genus", "0", "--punctures", "5")
    assert code == 2 and out == "" and "at least 3" in err
    assert call("witness", "cycle", "--genus", "1", "--punctures", "3")[0] == 2
    assert call("witness", "path", "--genus", "0", "--punctures", "2")[0] == 2
    assert call("ell", "--genus", "-1", "--punctures", "0")[0] == 2
    assert call("table", "--max-genus", "-1")[0] == 2


def test_usage_errors_exit_1():
    assert call()[0] == 1
    assert call("frobnicate")[0] == 1
    code, _, err = call("ell", "--genus", "x", "--punctures", "1")
    assert code == 1 and "invalid int" in err
    assert call("ell", "--genus", "1", "--punctures", "1", "--json", "--dot")[0] == 1
    assert call("obstruct", "virtual", "--source", "2", "--target", "3,0")[0] == 1
    assert call("obstruct", "braid", "--strands", "5", "--target", "2,0", "--boundary", "3")[0] == 1


def test_help_exits_0():
    assert call("--help")[0] == 0


def test_verify_grid():
    code, out, _ = call("verify", "grid", "--max-genus", "12", "--max-punctures", "24")
    assert code == 0 and out == "325 cells, 0 violations\n"
    code, out, _ = call("verify", "grid", "--max-genus", "4", "--max-punctures", "8", "--json")
    doc = json.loads(out)
    GridReport(doc["max_genus"], doc["max_punctures"], doc["cells"], doc["violations"])
    assert doc["violations"] == []


def test_verify_failure_exits_3(monkeypatch):
    import linchain.cli as cli

    monkeypatch.setattr(cli, "verify_grid", lambda g, p: GridReport(g, p, 1, ["S_{0,0}: broken"]))
    code, out, _ = call("verify", "grid", "--max-genus", "0", "--max-punctures", "0")
    assert code == 3 and "broken" in out


def test_witness_outputs():
    code, out, _ = call("witness", "path", "--genus", "3", "--punctures", "2")
    assert code == 0 and out.startswith("path of length 9 on S_{3,2}:")
    code, out, _ = call("witness", "cycle", "--genus", "0", "--punctures", "6", "--dot")
    assert code == 0 and out.count(" -- ") == 6
    code, out, _ = call("witness", "path", "--genus", "1", "--punctures", "3", "--json")
    doc = json.loads(out)
    assert set(doc) == {"surface", "pattern", "curves", "edges"}
    assert len(doc["curves"]) == 5 and doc["edges"][0] == [0, 1]


def test_obstruct_and_rigidity():
    code, out, _ = call("obstruct", "virtual", "--source", "2,3", "--target", "3,0")
    assert out.splitlines()[0] == "Obstructed"
    assert "ell: 8 <= 7 FAILS" in out
    code, out, _ = call("obstruct", "braid", "--strands", "5", "--target", "2,0", "--json")
    doc = json.loads(out)
    assert doc["answer"] == "Obstructed"
    assert {r["name"] for r in doc["reasons"] if not r["ok"]} == {"abelian rank"}
    assert call("obstruct", "sphere-closed", "--punctures", "6", "--genus", "2")[1].startswith("Yes")
    code, out, _ = call("rigidity", "--source", "2,3", "--target", "2,3")
    assert out.startswith("Yes")


def test_table_markdown():
    code, out, _ = call("table", "--max-genus", "2", "--max-punctures", "5", "--markdown")
    lines = out.splitlines()
    assert lines[0] == "| g \\ p | 0 | 1 | 2 | 3 | 4 | 5 |"
    assert lines[2] == "| 0 | 0 | 0 | 0 | 0 | 2 | 4 |"
    assert lines[4] == "| 2 | 5 | 6 | 7 | 8 | 9 | 10 |"


@pytest.fixture
def p2_file(tmp_path):
    path = tmp_path / "p2.json"
    path.write_text(json.dumps({"vertices": ["u", "v", "w"], "edges": [["u", "v"]]}))
    return path


def test_raag_nf(p2_file):
    code, out, _ = call("raag", "nf", "--graph", str(p2_file), "--word", "w u v w^-1 u^-1 u")
    assert (code, out) == (0, "u v\n")
    code, out, _ = call("raag", "nf", "--graph", str(p2_file), "--word", "u v u^-1 v^-1", "--json")
    assert json.loads(out)["normal_form"] == "u v u^-1 v^-1"
    assert call("raag", "nf", "--graph", str(p2_file), "--word", "x")[0] == 2
    assert call("raag", "nf", "--graph", str(p2_file), "--word", "u^0")[0] == 2


def test_raag_center(p2_file, tmp_path):
    assert call("raag", "center", "--graph", str(p2_file))[1] == "central generators: w\n"
    comm = tmp_path / "c.json"
    comm.write_text(json.dumps({"vertices": ["a", "b"], "edges": [], "convention": "commutation"}))
    assert call("raag", "center", "--graph", str(comm))[1] == "centerless\n"
    assert call("raag", "center", "--graph", str(tmp_path / "missing.json"))[0] == 2


def test_raag_lift(tmp_path):
    doc = {
        "source": {"vertices": ["a", "b", "c"], "edges": [["a", "b"], ["b", "c"]]},
        "target": {"vertices": ["1", "2", "3"], "edges": [["1", "2"], ["2", "3"]]},
        "assignment": {"a": ["1", "3"], "b": ["2"], "c": ["3"]},
    }
    path = tmp_path / "mvh.json"
    path.write_text(json.dumps(doc))
    assert call("raag", "lift", "--graph", str(path), "--word", "1 2 3")[1] == "1->a 2->b 3->c\n"
    code, out, _ = call("raag", "lift", "--graph", str(path), "--word", "3 2", "--json")
    assert json.loads(out) == {"lift": ["a", "b"]}
    assert call("raag", "lift", "--graph", str(path), "--word", "1 3")[0] == 2
    assert call("raag", "lift", "--graph", str(path), "--word", "1^2")[0] == 2


def test_json_documents_round_trip():
    cases = [
        ("witness", "path", "--genus", "2", "--punctures", "2", "--json"),
        ("obstruct", "virtual", "--source", "3,1", "--target", "2,4", "--json"),
        ("decide", "cycle-mcg", "--m", "5", "--genus", "1", "--punctures", "1", "--json"),
    ]
    for argv in cases:
        doc = json.loads(call(*argv)[1])
        assert json.loads(json.dumps(doc, sort_keys=True)) == doc
    w = json.loads(call(*cases[0])[1])
    n = len(w["curves"])
    assert all(0 <= i < j < n for i, j in w["edges"])
    v = json.loads(call(*cases[1])[1])
    for r in v["reasons"]:
        assert set(r) == {"name", "lhs", "rhs", "ok"} and r["ok"] == (r["lhs"] <= r["rhs"])


def test_deterministic_output():
    argv = ("witness", "cycle", "--genus", "3", "--punctures", "0", "--json")
    assert call(*argv) == call(*argv)


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "linchain", "ell", "--genus", "0", "--punctures", "5"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and proc.stdout == "closed=4 recursive=4\n"
