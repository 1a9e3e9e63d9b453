import pytest
from hypothesis import given

from oracle import _components, edge_list, is_acyclic
from strategies import graphs
from wfcover.constructions import complete_graph, cycle_graph, path_graph
from wfcover.fixtures import BOWTIE, BOWTIE_LABELS, G4, G4_LABELS, TRIANGLE_PLUS_VERTEX
from wfcover.graph import (
    Edge,
    Graph,
    GraphError,
    bridges,
    build_graph,
    connected_components,
    cyclomatic_number,
    distance,
    from_mask,
    induced_subgraph,
    is_connected,
    is_forest,
    is_induced_forest,
    to_mask,
)

TWO_TRIANGLES_BRIDGED = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)])


def test_build_k3():
    G = build_graph(3, [(0, 1), (1, 2), (0, 2)])
    assert G.n == 3 and G.m == 3
    assert G.edges == (Edge(0, 1), Edge(0, 2), Edge(1, 2))


def test_build_empty():
    G = build_graph(4, [])
    assert G.n == 4 and G.m == 0


def test_build_g4_fixture():
    G = build_graph(5, [(0, 1), (1, 4), (4, 3), (3, 2), (2, 0), (1, 2)])
    assert G == G4
    assert cyclomatic_number(G) == 2


def test_duplicates_collapse_and_order_is_canonical():
    G = build_graph(3, [(1, 0), (0, 1), (2, 1)])
    assert G.edges == (Edge(0, 1), Edge(1, 2))


@pytest.mark.parametrize("n, edges", [(2, [(0, 2)]), (2, [(1, 1)]), (-1, []), (2, [(-1, 0)])])
def test_build_rejects(n, edges):
    with pytest.raises(GraphError):
        build_graph(n, edges)


def test_equality_ignores_name():
    assert Graph(2, [(0, 1)], name="a") == Graph(2, [(0, 1)], name="b")
    assert hash(Graph(2, [(0, 1)], name="a")) == hash(Graph(2, [(0, 1)]))
    assert Graph(2) != Graph(3)


def test_edge_of_rejects_loop():
    with pytest.raises(GraphError):
        Edge.of(3, 3)
    assert Edge.of(5, 2) == Edge(2, 5)


def test_induced_k4_pair():
    H, relabel = induced_subgraph(complete_graph(4), [1, 3])
    assert H == complete_graph(2)
    assert relabel == {1: 0, 3: 1}


def test_induced_cycle_minus_vertex_is_path():
    H, _ = induced_subgraph(cycle_graph(5), [0, 1, 2, 3])
    assert H == path_graph(4)


def test_induced_bowtie_outer_pairs():
    S = [BOWTIE_LABELS[c] for c in "xytp"]
    H, _ = induced_subgraph(BOWTIE, S)
    assert H.n == 4 and H.m == 2 and is_forest(H)


def test_induced_rejects_out_of_range():
    with pytest.raises(GraphError):
        induced_subgraph(complete_graph(3), [0, 3])


def test_is_induced_forest_examples():
    K3 = complete_graph(3)
    assert is_induced_forest(K3, [0, 1])
    assert not is_induced_forest(K3, [0, 1, 2])
    assert is_induced_forest(G4, [G4_LABELS[c] for c in "eadc"])


def test_components():
    assert connected_components(complete_graph(3)) == [frozenset({0, 1, 2})]
    assert len(connected_components(Graph(3))) == 3
    two = Graph(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert [len(b) for b in connected_components(two)] == [3, 3]
    assert connected_components(TRIANGLE_PLUS_VERTEX) == [frozenset({0, 1, 2}), frozenset({3})]


def test_bridges_examples():
    tree = Graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    assert bridges(tree) == set(tree.edges)
    assert bridges(cycle_graph(6)) == set()
    assert bridges(TWO_TRIANGLES_BRIDGED) == {Edge(2, 3)}


def test_distance_examples():
    P5 = path_graph(5)
    assert distance(P5, 2, 2) == 0
    assert distance(P5, 1, 2) == 1
    assert distance(P5, 0, 4) == 4
    assert distance(TRIANGLE_PLUS_VERTEX, 0, 3) is None


def test_cyclomatic_examples():
    assert cyclomatic_number(path_graph(6)) == 0
    assert cyclomatic_number(cycle_graph(7)) == 1
    # 6 edges, 5 vertices, 1 component
    assert cyclomatic_number(BOWTIE) == BOWTIE.m - BOWTIE.n + 1 == 2


def test_masks_roundtrip():
    assert from_mask(to_mask([0, 3, 5])) == frozenset({0, 3, 5})
    assert from_mask(0) == frozenset()
    assert complete_graph(3).masks == (0b110, 0b101, 0b011)


@given(graphs(max_n=8))
def test_bridges_match_removal_oracle(G):
    edges = edge_list(G)
    base = _components(range(G.n), edges)
    expected = {e for e in edges if _components(range(G.n), [x for x in edges if x != e]) > base}
    assert {tuple(e) for e in bridges(G)} == expected


@given(graphs(max_n=8))
def test_is_induced_forest_matches_oracle(G):
    edges = edge_list(G)
    for mask in range(0, 1 << G.n, 7):
        S = [v for v in range(G.n) if mask >> v & 1]
        assert is_induced_forest(G, S) == is_acyclic(S, edges)


@given(graphs(max_n=8))
def test_component_partition(G):
    blocks = connected_components(G)
    assert sorted(v for b in blocks for v in b) == list(range(G.n))
    assert is_connected(G) == (len(blocks) <= 1)
    assert cyclomatic_number(G) >= 0
