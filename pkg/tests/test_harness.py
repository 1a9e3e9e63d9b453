import csv
import io
import json

import pytest

import oracle
from wfcover.constructions import complete_graph, join, path_graph
from wfcover.graph import Graph, is_complete, is_connected
from wfcover.harness import (
    REGISTRY,
    Counterexample,
    RandomGraphSpec,
    Scale,
    TheoremCheckResult,
    UnknownCheckError,
    all_labeled_graphs,
    emit_report,
    exhaustive_scan,
    fixture_suite,
    random_graph,
    verify,
    wfc,
)
from wfcover.textformat import read_graph

SMALL = Scale(exhaustive_n_max=4, factor_n_max=3, random_trials=12, seed=1)


def test_random_graph_extremes():
    assert random_graph(RandomGraphSpec(6, 0.0, 1)) == Graph(6)
    assert random_graph(RandomGraphSpec(6, 1.0, 1)) == complete_graph(6)


def test_random_graph_is_deterministic():
    spec = RandomGraphSpec(8, 0.4, 42)
    assert random_graph(spec).edges == random_graph(spec).edges
    with pytest.raises(ValueError):
        random_graph(RandomGraphSpec(3, 1.5, 0))


def test_labeled_graph_counts():
    assert [sum(1 for _ in all_labeled_graphs(n)) for n in range(5)] == [1, 1, 2, 8, 64]


def test_trivially_true_scan():
    res = exhaustive_scan(4, lambda inst: None)
    assert res.verdict == "pass" and res.counterexamples == [] and res.instances_checked == 1 + 1 + 2 + 8 + 64


def test_false_claim_is_caught_verbatim():
    def everyone_wfc(inst):
        G = inst.graphs["G"]
        return None if wfc(G) else (True, False)

    res = exhaustive_scan(4, everyone_wfc)
    assert res.verdict == "fail" and res.counterexamples
    cx = res.counterexamples[0]
    G = read_graph(cx.graphs["G"])
    assert not oracle.well_f_covered(G.n, oracle.edge_list(G))


def test_exhaustive_scan_limit():
    with pytest.raises(ValueError):
        exhaustive_scan(7, lambda inst: None)


def test_connected_boundary_scans():
    def unicyclic(inst):
        G = inst.graphs["G"]
        from wfcover.forests import check_boundary_characterizations
        b = check_boundary_characterizations(G)
        return None if b.unicyclic[0] == b.unicyclic[1] and b.f_is_2_connected[0] == b.f_is_2_connected[1] else (1, 0)

    res = exhaustive_scan(5, unicyclic, where=lambda G: G.n >= 1 and is_connected(G))
    assert res.verdict == "pass" and res.instances_checked > 700


def test_wheel_table():
    res = verify("C6.14")
    table = res.notes["table"]
    assert [k for k in table][:6] == ["W4", "W5", "W6", "W7", "W8", "W9"]
    assert {k for k, v in table.items() if v["well_f_covered"]} == {"W4", "W5"}


def test_gadget_check():
    res = verify("T6.6")
    assert res.verdict == "pass" and res.instances_checked >= 10


def test_p3_join_k1_not_wfc():
    J = join(path_graph(3), complete_graph(1)).graph
    assert oracle.forest_orders(4, oracle.edge_list(J)) == {2, 3}
    assert not wfc(J) and not is_complete(path_graph(3))
    assert verify("T6.10", SMALL).verdict == "pass"


def test_fixture_suite_classifications():
    res = fixture_suite()
    assert res.verdict == "pass" and res.instances_checked >= 10


def test_glue_erratum_recorded():
    res = verify("L6.5", SMALL)
    assert res.verdict == "erratum_confirmed"
    assert res.counterexamples == []
    assert res.notes["statement_variant_failed"] > 0


def test_literal_reading_is_vacuous():
    res = verify("T6.13", SMALL)
    assert res.verdict == "pass"
    assert res.notes["literal_hypothesis_instances"] == 0


@pytest.mark.parametrize("check_id", list(REGISTRY))
def test_every_check_passes_small_scale(check_id):
    res = verify(check_id, SMALL)
    assert res.ok, [c.as_dict() for c in res.counterexamples[:3]]
    assert res.instances_checked > 0


def test_unknown_id():
    with pytest.raises(UnknownCheckError):
        verify("NOPE")


@pytest.mark.parametrize("kw", [{"exhaustive_n_max": 7}, {"factor_n_max": 6}, {"factor_n_max": 0},
                                {"random_trials": -1}])
def test_scale_validation(kw):
    with pytest.raises(ValueError):
        Scale(**kw)


def test_verify_is_deterministic():
    a = verify("L6.2", SMALL).as_dict()
    b = verify("L6.2", SMALL).as_dict()
    assert a == b


def test_seed_changes_random_instances():
    import random

    def graphs_for(seed):
        sc = Scale(factor_n_max=1, random_trials=5, seed=seed)
        gen = REGISTRY["T6.1"].generator(sc, random.Random(f"{seed}/T6.1"))
        return [tuple(i.graphs.values()) for i in gen if i.label.startswith("random")]

    assert graphs_for(1) == graphs_for(1)
    assert graphs_for(1) != graphs_for(2)


def test_empty_report():
    doc = json.loads(emit_report([], "json", seed=0))
    assert doc == {"run": {"seed": 0, "timestamp": None, "version": doc["run"]["version"]}, "results": []}
    assert emit_report([], "csv") == "id,instances_checked,verdict,counterexample_count\n"


def test_single_pass_row():
    rows = list(csv.reader(io.StringIO(emit_report([TheoremCheckResult("X", 3, [], "pass")], "csv"))))
    assert rows == [["id", "instances_checked", "verdict", "counterexample_count"], ["X", "3", "pass", "0"]]


def test_report_carries_counterexamples_and_tallies():
    cx = Counterexample("inst", {"G": "n 1\n"}, {"f": 2}, {"f": 1})
    text = emit_report([TheoremCheckResult("Y", 1, [cx], "fail")], "json", seed=3, timestamp="t")
    doc = json.loads(text)
    assert doc["run"]["timestamp"] == "t"
    assert doc["results"][0]["counterexamples"][0]["graphs"]["G"] == "n 1\n"
    glue = json.loads(emit_report([verify("L6.5", SMALL)], "json"))["results"][0]
    assert glue["verdict"] == "erratum_confirmed" and "statement_variant_failed" in glue["notes"]


def test_report_format_validation():
    with pytest.raises(ValueError):
        emit_report([], "xml")
