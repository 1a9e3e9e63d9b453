"""Graph operators and named families.

Every constructor returns a :class:`ConstructionResult` carrying the new
graph, one relabeling map per input graph, and, where a closed form is
known, the forest number that form predicts. Predictions are data to be
checked against the forest engine, never trusted.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Optional, Sequence

from .forests import every_maximal_forest_contains, forest_number
from .graph import Edge, Graph, GraphError, is_forest


class ConstructionError(GraphError):
    pass


@dataclass(frozen=True)
class ConstructionResult:
    graph: Graph
    predicted_f: Optional[int] = None
    prediction_source: Optional[str] = None
    relabeling: tuple[dict[int, int], ...] = field(default_factory=tuple)


def _identity(n: int, shift: int = 0) -> dict[int, int]:
    return {v: v + shift for v in range(n)}


def _f(G: Graph, predict: bool) -> Optional[int]:
    return forest_number(G) if predict else None


def disjoint_union(G: Graph, H: Graph, predict: bool = True) -> ConstructionResult:
    shift = G.n
    edges = list(G.edges) + [(u + shift, v + shift) for u, v in H.edges]
    fg, fh = _f(G, predict), _f(H, predict)
    return ConstructionResult(
        Graph(G.n + H.n, edges),
        fg + fh if predict else None,
        "union: f(G)+f(H)" if predict else None,
        (_identity(G.n), _identity(H.n, shift)),
    )


JOIN_RULES = ("both-nonempty", "both-dominated", "with-edgeless", "with-vertex", "both-edgeless")


def join(G: Graph, H: Graph, rule: Optional[str] = None) -> ConstructionResult:
    """Disjoint union plus every edge between the two sides.

    ``rule`` names which closed form to attach as the prediction:

    * ``both-nonempty``: f(G)  (both factors carry an edge)
    * ``both-dominated``: 2  (both factors complete, so the join is complete)
    * ``with-edgeless``: |V(H)| + 1  (H edgeless of order >= 2)
    * ``with-vertex``: f(G)  (H a single vertex)
    * ``both-edgeless``: max(|V(G)|, |V(H)|) + 1
    """
    if rule is not None and rule not in JOIN_RULES:
        raise ConstructionError(f"unknown join rule {rule!r}")
    base = disjoint_union(G, H, predict=False)
    shift = G.n
    cross = [(u, v + shift) for u in range(G.n) for v in range(H.n)]
    graph = Graph(G.n + H.n, list(base.graph.edges) + cross)
    predicted = None
    if rule in ("both-nonempty", "with-vertex"):
        predicted = forest_number(G)
    elif rule == "both-dominated":
        predicted = min(2, G.n + H.n)
    elif rule == "with-edgeless":
        predicted = H.n + 1
    elif rule == "both-edgeless":
        predicted = max(G.n, H.n) + 1
    return ConstructionResult(graph, predicted, f"join[{rule}]" if rule else None, base.relabeling)


def identify_vertex(G: Graph, x: int, H: Graph, y: int, predict: bool = True) -> ConstructionResult:
    """Glue ``G`` and ``H`` by merging ``x`` (in G) with ``y`` (in H).

    G keeps its ids; the merged vertex is ``x``; the other vertices of H
    follow in increasing order. A prediction ``f(G)+f(H)-1`` is attached
    only when every maximal forest of G contains ``x``.
    """
    G.check_vertex(x)
    H.check_vertex(y)
    hmap = {}
    nxt = G.n
    for v in range(H.n):
        if v == y:
            hmap[v] = x
        else:
            hmap[v] = nxt
            nxt += 1
    edges = list(G.edges) + [(hmap[u], hmap[v]) for u, v in H.edges]
    graph = Graph(nxt, edges)
    predicted = source = None
    if predict and every_maximal_forest_contains(G, x):
        predicted = forest_number(G) + forest_number(H) - 1
        source = "identify: f(G)+f(H)-1 (x in every maximal forest of G)"
    return ConstructionResult(graph, predicted, source, (_identity(G.n), hmap))


def connect_by_path(G: Graph, x: int, H: Graph, y: int, d: int, predict: bool = True) -> ConstructionResult:
    """Join ``x`` in G to ``y`` in H by a new path of length ``d``."""
    G.check_vertex(x)
    H.check_vertex(y)
    if d < 1:
        raise ConstructionError(f"path length must be >= 1, got {d}")
    base = disjoint_union(G, H, predict=False)
    interior = list(range(G.n + H.n, G.n + H.n + d - 1))
    chain = [x] + interior + [y + G.n]
    edges = list(base.graph.edges) + list(zip(chain, chain[1:]))
    predicted = forest_number(G) + forest_number(H) + d - 1 if predict else None
    return ConstructionResult(
        Graph(G.n + H.n + d - 1, edges),
        predicted,
        "path: f(G)+f(H)+d-1" if predict else None,
        base.relabeling,
    )


def replace_edge_with_path(G: Graph, e: tuple[int, int], d: int, predict: bool = True) -> ConstructionResult:
    """Subdivide edge ``e`` into a path of length ``d`` (>= 2).

    One endpoint of ``e`` must have degree exactly 2.
    """
    a, b = Edge.of(*e)
    G.check_vertex(a)
    G.check_vertex(b)
    if not G.has_edge(a, b):
        raise ConstructionError(f"({a}, {b}) is not an edge")
    if d < 2:
        raise ConstructionError(f"path length must be >= 2, got {d}")
    if G.degree(a) != 2 and G.degree(b) != 2:
        raise ConstructionError(f"neither endpoint of ({a}, {b}) has degree 2")
    interior = list(range(G.n, G.n + d - 1))
    chain = [a] + interior + [b]
    edges = [ed for ed in G.edges if ed != (a, b)] + list(zip(chain, chain[1:]))
    predicted = forest_number(G) + d - 1 if predict else None
    return ConstructionResult(
        Graph(G.n + d - 1, edges),
        predicted,
        "subdivide: f(G)+d-1" if predict else None,
        (_identity(G.n),),
    )


def _check_path(G: Graph, path: Sequence[int], label: str) -> None:
    for v in path:
        G.check_vertex(v)
    if len(set(path)) != len(path):
        raise ConstructionError(f"{label} repeats a vertex")
    for u, v in zip(path, path[1:]):
        if not G.has_edge(u, v):
            raise ConstructionError(f"{label}: {u} and {v} are not adjacent")


def glue_forest_along_path(
    G: Graph, path_g: Sequence[int], H: Graph, path_h: Sequence[int], predict: bool = True
) -> ConstructionResult:
    """Merge a forest ``H`` into ``G`` by identifying ``path_h[i]`` with ``path_g[i]``.

    Predicts ``f(G) + |V(H)| - k`` for paths of ``k`` vertices: every cycle of
    the result lies inside G, and a maximal forest keeps all of H.
    """
    if not is_forest(H):
        raise ConstructionError("H must be a forest")
    if len(path_g) != len(path_h):
        raise ConstructionError("paths must have the same number of vertices")
    if len(path_g) < 2:
        raise ConstructionError("paths must have at least two vertices")
    _check_path(G, path_g, "path in G")
    _check_path(H, path_h, "path in H")
    hmap = dict(zip(path_h, path_g))
    nxt = G.n
    for v in range(H.n):
        if v not in hmap:
            hmap[v] = nxt
            nxt += 1
    edges = list(G.edges) + [(hmap[u], hmap[v]) for u, v in H.edges]
    k = len(path_g)
    predicted = forest_number(G) + H.n - k if predict else None
    return ConstructionResult(
        Graph(nxt, edges),
        predicted,
        "glue forest: f(G)+|V(H)|-k" if predict else None,
        (_identity(G.n), hmap),
    )


def clique_edge_gadget(n: int) -> ConstructionResult:
    """K_n plus, for every edge, a new vertex adjacent to both its endpoints."""
    if n < 2:
        raise ConstructionError(f"clique order must be >= 2, got {n}")
    edges = list(combinations(range(n), 2))
    extra = [(u, n + i) for i, (a, b) in enumerate(edges) for u in (a, b)]
    graph = Graph(n + len(edges), edges + extra, name=f"gadget({n})")
    return ConstructionResult(graph, comb(n, 2) + 1, "clique gadget: C(n,2)+1", ())


def matched_cliques(n: int, s: int, matching: Iterable[tuple[int, int]] = ()) -> ConstructionResult:
    """``s`` disjoint copies of K_n (copy ``k`` on ids ``k*n .. k*n+n-1``) plus a matching.

    Matching pairs must join different copies and use each vertex at most once.
    The forest number 2s is predicted for n >= 3.
    """
    if n < 1 or s < 1:
        raise ConstructionError("clique order and count must be positive")
    total = n * s
    used: set[int] = set()
    cross = []
    for a, b in matching:
        if not (0 <= a < total and 0 <= b < total):
            raise ConstructionError(f"matching pair ({a}, {b}) out of range")
        if a // n == b // n:
            raise ConstructionError(f"matching pair ({a}, {b}) lies inside one clique")
        if a in used or b in used:
            raise ConstructionError(f"matching pair ({a}, {b}) reuses a vertex")
        used.update((a, b))
        cross.append((a, b))
    edges = [(k * n + i, k * n + j) for k in range(s) for i, j in combinations(range(n), 2)]
    graph = Graph(total, edges + cross, name=f"matched_cliques({n},{s})")
    if n >= 3:
        return ConstructionResult(graph, 2 * s, "matched cliques: 2s", ())
    return ConstructionResult(graph, None, None, ())


def add_pendant_edge(G: Graph, v: int, predict: bool = True) -> ConstructionResult:
    G.check_vertex(v)
    graph = Graph(G.n + 1, list(G.edges) + [(v, G.n)])
    return ConstructionResult(
        graph,
        forest_number(G) + 1 if predict else None,
        "pendant: f(G)+1" if predict else None,
        (_identity(G.n),),
    )


def remove_pendant(G: Graph, leaf: int, predict: bool = True) -> ConstructionResult:
    G.check_vertex(leaf)
    if G.degree(leaf) != 1:
        raise ConstructionError(f"vertex {leaf} has degree {G.degree(leaf)}, not 1")
    keep = {v: (v if v < leaf else v - 1) for v in range(G.n) if v != leaf}
    graph = Graph(G.n - 1, [(keep[u], keep[v]) for u, v in G.edges if leaf not in (u, v)])
    return ConstructionResult(
        graph,
        forest_number(G) - 1 if predict else None,
        "pendant: f(G)-1" if predict else None,
        (keep,),
    )


# -- named families -------------------------------------------------------------

FAMILIES = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "empty": 1,
    "complete_bipartite": 2,
    "wheel": 1,
    "star": 1,
}


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)], name=f"P{n}")


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ConstructionError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"C{n}")


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2), name=f"K{n}")


def empty_graph(n: int) -> Graph:
    return Graph(n, (), name=f"E{n}")


def complete_bipartite_graph(r: int, s: int) -> Graph:
    return Graph(r + s, [(u, r + v) for u in range(r) for v in range(s)], name=f"K{r},{s}")


def wheel_graph(n: int) -> Graph:
    """Hub 0 joined to the cycle 1..n-1 (n vertices in total)."""
    if n < 4:
        raise ConstructionError(f"wheel needs at least 4 vertices, got {n}")
    rim = [(1 + i, 1 + (i + 1) % (n - 1)) for i in range(n - 1)]
    return Graph(n, rim + [(0, v) for v in range(1, n)], name=f"W{n}")


def star_graph(n: int) -> Graph:
    """Center 0 with ``n - 1`` leaves."""
    return Graph(n, [(0, v) for v in range(1, n)], name=f"S{n}")


def family(name: str, *params: int) -> ConstructionResult:
    if name not in FAMILIES:
        raise ConstructionError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")
    if len(params) != FAMILIES[name]:
        raise ConstructionError(f"family {name!r} takes {FAMILIES[name]} parameter(s)")
    if any(p < 0 for p in params):
        raise ConstructionError("family parameters must be non-negative")
    if name in ("path", "star", "complete") and params[0] < 1:
        raise ConstructionError(f"{name} needs at least one vertex")
    if name == "path":
        n, = params
        return ConstructionResult(path_graph(n), n, "forest: n")
    if name == "star":
        n, = params
        return ConstructionResult(star_graph(n), n, "forest: n")
    if name == "empty":
        n, = params
        return ConstructionResult(empty_graph(n), n, "forest: n")
    if name == "cycle":
        n, = params
        return ConstructionResult(cycle_graph(n), n - 1, "cycle: n-1")
    if name == "complete":
        n, = params
        return ConstructionResult(complete_graph(n), min(n, 2), "complete: 2")
    if name == "wheel":
        n, = params
        return ConstructionResult(wheel_graph(n))
    r, s = params
    if r < 1 or s < 1:
        raise ConstructionError("complete bipartite parts must be non-empty")
    if r == s:
        return ConstructionResult(complete_bipartite_graph(r, s), r + 1, "balanced bipartite: r+1")
    if min(r, s) == 1:
        return ConstructionResult(complete_bipartite_graph(r, s), r + s, "forest: n")
    return ConstructionResult(complete_bipartite_graph(r, s))
