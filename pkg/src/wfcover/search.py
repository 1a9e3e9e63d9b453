"""Include/exclude search for maximal vertex sets under a hereditary predicate.

The tree decides vertices one at a time in descending-degree order. A branch
is cut as soon as the included set violates the predicate, or as soon as an
excluded vertex has all of its neighbors decided and is certain to stay
addable (no leaf below could be maximal). Each leaf is then tested for
maximality against the whole graph.

Two predicates are provided: induced acyclicity (rollback union-find) and
independence (neighbor counters).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Optional

from .graph import Graph
from .unionfind import RollbackUnionFind


@dataclass(frozen=True)
class EnumerationBudget:
    """Caps for enumeration. ``None`` means unlimited."""

    max_results: Optional[int] = None
    max_nodes: Optional[int] = None
    brute_force_limit: int = 20

    def __post_init__(self):
        for name in ("max_results", "max_nodes"):
            value = getattr(self, name)
            if value is not None and value <= 0:
                raise ValueError(f"{name} must be positive, got {value}")
        if self.brute_force_limit <= 0:
            raise ValueError("brute_force_limit must be positive")


@dataclass(frozen=True)
class Enumeration:
    sets: list[frozenset[int]]
    truncated: bool
    nodes: int

    def __iter__(self):
        return iter(self.sets)

    def __len__(self):
        return len(self.sets)


def lex_key(s: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(s))


class ForestState:
    """Acyclicity of the included set, maintained incrementally."""

    def __init__(self, G: Graph):
        self.adj = [sorted(a) for a in G.adjacency]
        self.inside = [False] * G.n
        self.uf = RollbackUnionFind(G.n)

    def can_add(self, v: int) -> bool:
        inside, find = self.inside, self.uf.find
        roots = set()
        for w in self.adj[v]:
            if inside[w]:
                r = find(w)
                if r in roots:
                    return False
                roots.add(r)
        return True

    def add(self, v: int) -> int:
        token = self.uf.mark()
        self.inside[v] = True
        inside, union = self.inside, self.uf.union
        for w in self.adj[v]:
            if inside[w]:
                union(v, w)
        return token

    def remove(self, v: int, token: int) -> None:
        self.inside[v] = False
        self.uf.rollback(token)

    def stays_addable(self, v: int) -> bool:
        # with the neighborhood decided, fewer than two included neighbors can never close a cycle
        inside = self.inside
        return sum(1 for w in self.adj[v] if inside[w]) <= 1


class IndependentState:
    """Independence of the included set via per-vertex included-neighbor counts."""

    def __init__(self, G: Graph):
        self.adj = [sorted(a) for a in G.adjacency]
        self.hits = [0] * G.n

    def can_add(self, v: int) -> bool:
        return self.hits[v] == 0

    def add(self, v: int) -> int:
        hits = self.hits
        for w in self.adj[v]:
            hits[w] += 1
        return 0

    def remove(self, v: int, token: int) -> None:
        hits = self.hits
        for w in self.adj[v]:
            hits[w] -= 1

    def stays_addable(self, v: int) -> bool:
        return self.hits[v] == 0


def branching_order(G: Graph) -> list[int]:
    return sorted(range(G.n), key=lambda v: (-G.degree(v), v))


class MaximalSetSearch:
    """One traversal of the include/exclude tree.

    ``run`` calls ``emit(members)`` on every maximal set reached; ``emit``
    returns False to stop the traversal. ``cap`` (a zero-argument callable)
    restricts the search to sets of order strictly below ``cap()``.
    """

    def __init__(self, G: Graph, state, forbidden: Iterable[int] = (), max_nodes: Optional[int] = None):
        self.n = G.n
        self.state = state
        self.forbidden = frozenset(forbidden)
        self.max_nodes = max_nodes
        self.order = branching_order(G)
        pos = [0] * G.n
        for i, v in enumerate(self.order):
            pos[v] = i
        self.due: list[list[int]] = [[] for _ in range(G.n)]
        for w in range(G.n):
            last = max([pos[w]] + [pos[x] for x in G.adjacency[w]])
            self.due[last].append(w)
        self.nodes = 0
        self.truncated = False

    def run(
        self,
        emit: Callable[[list[int]], bool],
        include_first: bool = True,
        cap: Optional[Callable[[], int]] = None,
    ) -> bool:
        """Traverse; returns False if stopped early by ``emit`` or the node cap."""
        n, order, due, state = self.n, self.order, self.due, self.state
        forbidden, max_nodes = self.forbidden, self.max_nodes
        chosen: list[int] = []
        excluded = [False] * n
        branches = (True, False) if include_first else (False, True)

        def settled(i: int) -> bool:
            for w in due[i]:
                if excluded[w] and state.stays_addable(w):
                    return False
            return True

        def descend(i: int) -> bool:
            self.nodes += 1
            if max_nodes is not None and self.nodes > max_nodes:
                self.truncated = True
                return False
            if i == n:
                for w in order:
                    if excluded[w] and state.can_add(w):
                        return True
                return emit(chosen)
            v = order[i]
            for take in branches:
                if take:
                    if v in forbidden or not state.can_add(v):
                        continue
                    if cap is not None and len(chosen) + 1 >= cap():
                        continue
                    token = state.add(v)
                    chosen.append(v)
                    ok = descend(i + 1) if settled(i) else True
                    chosen.pop()
                    state.remove(v, token)
                else:
                    excluded[v] = True
                    ok = descend(i + 1) if settled(i) else True
                    excluded[v] = False
                if not ok:
                    return False
            return True

        return descend(0)


def enumerate_maximal(G: Graph, state, budget: Optional[EnumerationBudget] = None) -> Enumeration:
    budget = budget or EnumerationBudget()
    search = MaximalSetSearch(G, state, max_nodes=budget.max_nodes)
    found: list[frozenset[int]] = []
    limit = budget.max_results
    hit_limit = False

    def emit(members: list[int]) -> bool:
        nonlocal hit_limit
        if limit is not None and len(found) >= limit:
            hit_limit = True
            return False
        found.append(frozenset(members))
        return True

    search.run(emit)
    found.sort(key=lex_key)
    return Enumeration(found, search.truncated or hit_limit, search.nodes)
