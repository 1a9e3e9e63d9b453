"""Immutable simple undirected graphs on vertices ``0..n-1``.

Vertex sets are plain ``frozenset``s of ids (bitmasks internally where speed
matters). Everything here is a pure function of its arguments.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, NamedTuple, Optional

from .unionfind import RollbackUnionFind

VertexSet = frozenset


class GraphError(ValueError):
    """Raised for malformed graphs or out-of-range vertex references."""


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise GraphError(f"self-loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)


class Graph:
    """Simple undirected graph with dense integer vertex ids.

    Equality and hashing ignore ``name``; two graphs are equal when they have
    the same order and the same labeled edge set.
    """

    __slots__ = ("n", "adjacency", "name", "_masks", "_edges")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), name: Optional[str] = None):
        if not isinstance(n, int) or n < 0:
            raise GraphError(f"vertex count must be a non-negative integer, got {n!r}")
        adj: list[set[int]] = [set() for _ in range(n)]
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise GraphError(f"edge ({a}, {b}) has an endpoint outside [0, {n})")
            if a == b:
                raise GraphError(f"self-loop at vertex {a}")
            adj[a].add(b)
            adj[b].add(a)
        self.n = n
        self.adjacency: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in adj)
        self.name = name
        self._masks: Optional[tuple[int, ...]] = None
        self._edges: Optional[tuple[Edge, ...]] = None

    @property
    def edges(self) -> tuple[Edge, ...]:
        if self._edges is None:
            self._edges = tuple(
                Edge(u, v) for u in range(self.n) for v in sorted(self.adjacency[u]) if u < v
            )
        return self._edges

    @property
    def masks(self) -> tuple[int, ...]:
        """Neighborhoods as integer bitmasks."""
        if self._masks is None:
            self._masks = tuple(sum(1 << w for w in nbrs) for nbrs in self.adjacency)
        return self._masks

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def vertices(self) -> range:
        return range(self.n)

    def check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise GraphError(f"vertex {v!r} out of range for graph of order {self.n}")

    def check_vertices(self, vs: Iterable[int]) -> frozenset[int]:
        vs = frozenset(vs)
        for v in vs:
            self.check_vertex(v)
        return vs

    def with_name(self, name: Optional[str]) -> "Graph":
        return Graph(self.n, self.edges, name)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adjacency == other.adjacency

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<Graph{label} n={self.n} m={self.m}>"


def build_graph(n: int, edges: Iterable[tuple[int, int]] = (), name: Optional[str] = None) -> Graph:
    """Build a graph, collapsing duplicate edges and rejecting self-loops."""
    return Graph(n, edges, name)


def to_mask(vs: Iterable[int]) -> int:
    mask = 0
    for v in vs:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> frozenset[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return frozenset(out)


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Return ``G[S]`` relabeled to ``0..|S|-1`` (in increasing id order) and the old->new map."""
    members = sorted(G.check_vertices(S))
    relabel = {v: i for i, v in enumerate(members)}
    edges = [(relabel[u], relabel[v]) for u, v in G.edges if u in relabel and v in relabel]
    return Graph(len(members), edges), relabel


def is_induced_forest(G: Graph, S: Iterable[int]) -> bool:
    """True iff ``G[S]`` is acyclic."""
    S = G.check_vertices(S)
    uf = RollbackUnionFind(G.n)
    for u, v in G.edges:
        if u in S and v in S and not uf.union(u, v):
            return False
    return True


def is_forest(G: Graph) -> bool:
    return cyclomatic_number(G) == 0


def connected_components(G: Graph) -> list[frozenset[int]]:
    """Components ordered by their smallest member."""
    seen = [False] * G.n
    blocks = []
    for s in range(G.n):
        if seen[s]:
            continue
        seen[s] = True
        block = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    block.append(w)
                    queue.append(w)
        blocks.append(frozenset(block))
    return blocks


def is_connected(G: Graph) -> bool:
    return len(connected_components(G)) <= 1


def bridges(G: Graph) -> set[Edge]:
    """Cut edges by the low-link method (iterative DFS)."""
    n = G.n
    disc = [-1] * n
    low = [0] * n
    out: set[Edge] = set()
    clock = 0
    nbrs = [sorted(a) for a in G.adjacency]
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = clock
        clock += 1
        # frame: (vertex, parent, next neighbor index)
        stack = [(root, -1, 0)]
        while stack:
            v, parent, i = stack[-1]
            if i < len(nbrs[v]):
                stack[-1] = (v, parent, i + 1)
                w = nbrs[v][i]
                if w == parent:
                    continue
                if disc[w] == -1:
                    disc[w] = low[w] = clock
                    clock += 1
                    stack.append((w, v, 0))
                else:
                    low[v] = min(low[v], disc[w])
            else:
                stack.pop()
                if parent >= 0:
                    low[parent] = min(low[parent], low[v])
                    if low[v] > disc[parent]:
                        out.add(Edge.of(parent, v))
    return out


def distance(G: Graph, u: int, v: int) -> Optional[int]:
    """Shortest-path edge count, or ``None`` when ``v`` is unreachable from ``u``."""
    G.check_vertex(u)
    G.check_vertex(v)
    if u == v:
        return 0
    dist = {u: 0}
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w in G.adjacency[x]:
            if w not in dist:
                if w == v:
                    return dist[x] + 1
                dist[w] = dist[x] + 1
                queue.append(w)
    return None


def cyclomatic_number(G: Graph) -> int:
    """``|E| - |V| + #components``; 0 for forests, 1 for unicyclic graphs."""
    return G.m - G.n + len(connected_components(G))


def is_complete(G: Graph) -> bool:
    return G.m == G.n * (G.n - 1) // 2


def is_edgeless(G: Graph) -> bool:
    return G.m == 0
