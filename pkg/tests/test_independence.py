from hypothesis import given

import oracle
from strategies import graphs
from wfcover.constructions import complete_graph, cycle_graph, path_graph
from wfcover.fixtures import G3, P4, TRIANGLE_PLUS_VERTEX, TRIANGLE_WITH_PENDANT
from wfcover.graph import Graph
from wfcover.independence import (
    brute_force_maximal_independent_sets,
    enumerate_maximal_independent_sets,
    has_dominating_vertex,
    independence_number,
    independence_verdict,
)


def test_complete_graph_singletons():
    assert enumerate_maximal_independent_sets(complete_graph(4)).sets == [frozenset({v}) for v in range(4)]


def test_p4_sets():
    # first/third, first/fourth, second/fourth
    assert enumerate_maximal_independent_sets(P4).sets == [frozenset({0, 2}), frozenset({0, 3}), frozenset({1, 3})]
    assert independence_verdict(P4).well_covered


def test_c5_five_pairs():
    sets = enumerate_maximal_independent_sets(cycle_graph(5)).sets
    assert set(sets) == oracle.maximal_independent_sets(5, oracle.edge_list(cycle_graph(5)))
    assert len(sets) == 5 and {len(s) for s in sets} == {2}


def test_p3_has_singleton():
    v = independence_verdict(path_graph(3))
    assert v.has_singleton_mis and has_dominating_vertex(path_graph(3))
    assert not v.well_covered and v.size_ge2_uniform


def test_g3_not_well_covered():
    assert not independence_verdict(G3).well_covered


def test_bridge_breaks_well_covered():
    assert independence_verdict(TRIANGLE_PLUS_VERTEX).well_covered
    assert not independence_verdict(TRIANGLE_WITH_PENDANT).well_covered


def test_null_graph():
    v = independence_verdict(Graph(0))
    assert v.alpha == 0 and v.well_covered and not v.has_singleton_mis


def test_size_ge2_uniform_ignores_singletons():
    # star K_{1,3}: {center} and the three leaves
    star = Graph(4, [(0, 1), (0, 2), (0, 3)])
    v = independence_verdict(star)
    assert v.has_singleton_mis and v.size_ge2_uniform and not v.well_covered and v.alpha == 3


@given(graphs(max_n=8))
def test_mis_matches_oracle(G):
    expected = oracle.maximal_independent_sets(G.n, oracle.edge_list(G))
    assert set(enumerate_maximal_independent_sets(G).sets) == expected
    assert set(brute_force_maximal_independent_sets(G)) == expected
    sizes = {len(s) for s in expected}
    v = independence_verdict(G)
    assert v.alpha == independence_number(G) == max(sizes)
    assert v.well_covered == oracle.well_covered(G.n, oracle.edge_list(G))
    assert v.has_singleton_mis == (1 in sizes)
    assert v.size_ge2_uniform == (len(sizes - {1}) <= 1)
    assert has_dominating_vertex(G) == v.has_singleton_mis
