"""Exact analysis of well-f-covered graphs: maximal induced forests, forest numbers and constructions."""

__version__ = "0.1.0"

from .graph import Edge, Graph, GraphError, VertexSet, build_graph, induced_subgraph, is_induced_forest
from .search import Enumeration, EnumerationBudget
from .forests import (
    ForestVerdict,
    brute_force_maximal_forests,
    decide_well_f_covered,
    enumerate_maximal_forests,
    forest_number,
    min_maximal_forest_order,
    minimum_feedback_vertex_set,
)
from .independence import (
    IndependenceVerdict,
    brute_force_maximal_independent_sets,
    enumerate_maximal_independent_sets,
    independence_verdict,
)
from .constructions import ConstructionError, ConstructionResult, family, join
from .reductions import ReductionTrace, decide_well_f_covered_reduced, reduce
from .textformat import GraphDocument, ParseError, parse_graph, read_graph, serialize_graph

__all__ = [
    "ConstructionError",
    "ConstructionResult",
    "Edge",
    "Enumeration",
    "EnumerationBudget",
    "ForestVerdict",
    "Graph",
    "GraphDocument",
    "GraphError",
    "IndependenceVerdict",
    "ParseError",
    "ReductionTrace",
    "VertexSet",
    "brute_force_maximal_forests",
    "brute_force_maximal_independent_sets",
    "build_graph",
    "decide_well_f_covered",
    "decide_well_f_covered_reduced",
    "enumerate_maximal_forests",
    "enumerate_maximal_independent_sets",
    "family",
    "forest_number",
    "independence_verdict",
    "induced_subgraph",
    "is_induced_forest",
    "join",
    "min_maximal_forest_order",
    "minimum_feedback_vertex_set",
    "parse_graph",
    "read_graph",
    "reduce",
    "serialize_graph",
]
