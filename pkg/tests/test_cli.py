import json
import subprocess
import sys
from pathlib import Path

import pytest

import oracle
from wfcover.cli import main
from wfcover.constructions import complete_bipartite_graph, complete_graph, cycle_graph
from wfcover.fixtures import BOWTIE, PETERSEN
from wfcover.textformat import read_graph, serialize_graph

GOLDEN = Path(__file__).parent / "golden"


def write(tmp_path, G, name="g.txt"):
    p = tmp_path / name
    p.write_text(serialize_graph(G))
    return str(p)


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_c6(tmp_path, capsys):
    code, out, _ = run(capsys, "analyze", write(tmp_path, cycle_graph(6)))
    doc = json.loads(out)
    assert code == 0
    assert doc["forest"]["well_f_covered"] is True and doc["forest"]["forest_number"] == 5
    assert set(doc) == {"graph", "forest", "independence", "reduction", "boundary"}


def test_analyze_bowtie(tmp_path, capsys):
    code, out, _ = run(capsys, "analyze", write(tmp_path, BOWTIE))
    forest = json.loads(out)["forest"]
    assert code == 0 and forest["well_f_covered"] is False
    assert (len(forest["witness_min"]), len(forest["witness_max"])) == (3, 4)


def test_analyze_pretty(tmp_path, capsys):
    code, out, _ = run(capsys, "analyze", "--pretty", write(tmp_path, cycle_graph(4)))
    assert code == 0 and "forest.well_f_covered" in out and "true" in out


def test_analyze_missing_and_empty_files(tmp_path, capsys):
    assert run(capsys, "analyze", str(tmp_path / "absent.txt"))[0] == 2
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    code, _, err = run(capsys, "analyze", str(empty))
    assert code == 2 and "line 0" in err


def test_analyze_malformed(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("n 2\ne 0 5\n")
    code, _, err = run(capsys, "analyze", str(bad))
    assert code == 2 and "line 2" in err


def test_enumerate_c4_golden(tmp_path, capsys):
    code, out, _ = run(capsys, "enumerate", write(tmp_path, cycle_graph(4)))
    assert code == 0 and out == (GOLDEN / "c4_forests.txt").read_text()


def test_enumerate_k3_mis_golden(tmp_path, capsys):
    code, out, _ = run(capsys, "enumerate", "--kind", "mis", write(tmp_path, complete_graph(3)))
    assert code == 0 and out == (GOLDEN / "k3_mis.txt").read_text()


def test_enumerate_petersen_truncated(tmp_path, capsys):
    assert len(oracle.maximal_forests(10, oracle.edge_list(PETERSEN))) > 10
    code, out, err = run(capsys, "enumerate", "--limit", "10", write(tmp_path, PETERSEN))
    assert code == 0 and len(out.splitlines()) == 10
    assert "truncated" in err


def test_enumerate_bad_input(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("n two\n")
    assert run(capsys, "enumerate", str(bad))[0] == 2
    assert run(capsys, "enumerate", "--limit", "0", write(tmp_path, cycle_graph(4)))[0] == 2


def test_family_wheel_golden(tmp_path, capsys):
    out_path = tmp_path / "w6.txt"
    code, out, _ = run(capsys, "family", "wheel", "6", "--out", str(out_path))
    assert code == 0 and out.strip() == "predicted_f: none"
    assert out_path.read_text() == (GOLDEN / "wheel6.txt").read_text()


def test_family_bipartite_stdout(capsys):
    code, out, err = run(capsys, "family", "complete_bipartite", "3", "3")
    assert code == 0 and read_graph(out) == complete_bipartite_graph(3, 3)
    assert "predicted_f: 4" in err


def test_family_invalid(capsys):
    assert run(capsys, "family", "cycle", "2")[0] == 2
    assert run(capsys, "family", "complete_bipartite", "3")[0] == 2
    with pytest.raises(SystemExit) as info:
        main(["family", "petersen", "3"])
    assert info.value.code == 2


def test_verify_unknown(capsys):
    code, _, err = run(capsys, "verify", "NOPE")
    assert code == 2 and "NOPE" in err


def test_verify_bad_scale(capsys):
    assert run(capsys, "verify", "T5.1", "--nmax", "9")[0] == 2


def test_verify_csv_golden(tmp_path, capsys):
    out_path = tmp_path / "r.csv"
    code, out, _ = run(capsys, "verify", "C6.14", "--format", "csv", "--out", str(out_path))
    assert code == 0 and out.startswith("C6.14")
    assert out_path.read_text() == (GOLDEN / "verify_c614.csv").read_text()


def test_verify_json_stdout(capsys):
    code, out, _ = run(capsys, "verify", "T6.15", "C6.16", "--seed", "3", "--trials", "5")
    doc = json.loads(out)
    assert code == 0
    assert doc["run"]["seed"] == 3 and doc["run"]["timestamp"] is None
    assert [r["id"] for r in doc["results"]] == ["T6.15", "C6.16"]


def test_reduce(tmp_path, capsys):
    G = read_graph("n 4\ne 0 1\ne 1 2\ne 0 2\ne 2 3\n")
    core_path = tmp_path / "core.txt"
    code, out, _ = run(capsys, "reduce", write(tmp_path, G), "--core-out", str(core_path))
    assert code == 0 and json.loads(out)["f_offset"] == 1
    assert read_graph(core_path.read_text()) == complete_graph(3)
    assert run(capsys, "reduce", str(tmp_path / "absent"))[0] == 2


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "wfcover", "verify", "NOPE"], capture_output=True, text=True)
    assert proc.returncode == 2
    proc = subprocess.run([sys.executable, "-m", "wfcover", "enumerate", write(tmp_path, cycle_graph(4))],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == (GOLDEN / "c4_forests.txt").read_text()
