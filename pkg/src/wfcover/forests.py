"""Maximal induced forests, the forest number, and well-f-coveredness.

A graph is well-f-covered when all of its maximal induced forests have the
same order; that common order is then the forest number ``f(G)``, the
largest order of an induced forest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, GraphError, cyclomatic_number, from_mask, is_complete, is_connected
from .search import (
    Enumeration,
    EnumerationBudget,
    ForestState,
    MaximalSetSearch,
    enumerate_maximal,
    lex_key,
)


@dataclass(frozen=True)
class ForestVerdict:
    well_f_covered: bool
    forest_number: int
    min_maximal_order: int
    witness_max: frozenset[int]
    witness_min: frozenset[int]

    def as_dict(self) -> dict:
        return {
            "well_f_covered": self.well_f_covered,
            "forest_number": self.forest_number,
            "min_maximal_order": self.min_maximal_order,
            "witness_max": sorted(self.witness_max),
            "witness_min": sorted(self.witness_min),
        }


# -- brute-force oracle ------------------------------------------------------


def _mask_is_forest(masks: tuple[int, ...], S: int) -> bool:
    # edges(S) == |S| - components(S)
    twice_edges = 0
    rest = S
    while rest:
        low = rest & -rest
        v = low.bit_length() - 1
        twice_edges += bin(masks[v] & S).count("1")
        rest ^= low
    components = 0
    unseen = S
    while unseen:
        frontier = unseen & -unseen
        unseen ^= frontier
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nbrs = masks[low.bit_length() - 1] & unseen
            unseen &= ~nbrs
            frontier |= nbrs
        components += 1
    return twice_edges // 2 == bin(S).count("1") - components


def brute_force_maximal_forests(G: Graph, budget: Optional[EnumerationBudget] = None) -> list[frozenset[int]]:
    """Scan all ``2^n`` subsets and keep the inextensible acyclic ones."""
    limit = (budget or EnumerationBudget()).brute_force_limit
    if G.n > limit:
        raise GraphError(f"brute force refused: n={G.n} exceeds limit {limit}")
    masks = G.masks
    size = 1 << G.n
    acyclic = bytearray(size)
    for S in range(size):
        acyclic[S] = _mask_is_forest(masks, S)
    out = []
    for S in range(size):
        if not acyclic[S]:
            continue
        if all(S >> v & 1 or not acyclic[S | (1 << v)] for v in range(G.n)):
            out.append(from_mask(S))
    out.sort(key=lex_key)
    return out


# -- enumeration ---------------------------------------------------------------


def enumerate_maximal_forests(G: Graph, budget: Optional[EnumerationBudget] = None) -> Enumeration:
    """All maximal induced forests (lexicographically sorted), with a truncation flag."""
    return enumerate_maximal(G, ForestState(G), budget)


# -- minimum feedback vertex set -------------------------------------------------


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _peel(masks: tuple[int, ...], alive: int) -> int:
    """Drop vertices of degree <= 1 until none remain; they lie on no cycle."""
    changed = True
    while changed:
        changed = False
        for v in _bits(alive):
            if bin(masks[v] & alive).count("1") <= 1:
                alive &= ~(1 << v)
                changed = True
    return alive


def _shortest_cycle(masks: tuple[int, ...], alive: int) -> int:
    """Vertex mask of a shortest cycle inside ``alive``, or 0 if acyclic."""
    best_len = None
    best = 0
    for root in _bits(alive):
        depth = {root: 0}
        parent = {root: -1}
        queue = [root]
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if best_len is not None and 2 * depth[u] + 1 >= best_len:
                break
            for w in _bits(masks[u] & alive):
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = depth[u] + depth[w] + 1
                    if best_len is None or length < best_len:
                        best_len = length
                        cyc = 0
                        for x in (u, w):
                            while x != -1:
                                cyc |= 1 << x
                                x = parent[x]
                        best = cyc
        if best_len == 3:
            break
    return best


def _cycle_packing_bound(masks: tuple[int, ...], alive: int) -> int:
    """Greedy count of vertex-disjoint cycles: a lower bound on any feedback vertex set."""
    count = 0
    while True:
        alive = _peel(masks, alive)
        cyc = _shortest_cycle(masks, alive)
        if not cyc:
            return count
        count += 1
        alive &= ~cyc


def _components_of(masks: tuple[int, ...], alive: int) -> list[int]:
    out = []
    unseen = alive
    while unseen:
        comp = frontier = unseen & -unseen
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            nbrs = masks[low.bit_length() - 1] & alive & ~comp
            comp |= nbrs
            frontier |= nbrs
        out.append(comp)
        unseen &= ~comp
    return out


def minimum_feedback_vertex_set(G: Graph) -> frozenset[int]:
    """Exact minimum feedback vertex set by branch and bound.

    Some vertex of any cycle must be deleted, so we branch on the vertices of
    a shortest cycle and cut branches whose disjoint-cycle packing bound
    cannot beat the incumbent. Subproblems are memoized by vertex mask.
    """
    masks = G.masks
    memo: dict[int, int] = {}

    def solve(alive: int) -> int:
        alive = _peel(masks, alive)
        if not alive:
            return 0
        if alive in memo:
            return memo[alive]
        parts = _components_of(masks, alive)
        if len(parts) > 1:
            result = 0
            for part in parts:
                result |= solve(part)
            memo[alive] = result
            return result
        cyc = _shortest_cycle(masks, alive)
        candidates = sorted(_bits(cyc), key=lambda v: -bin(masks[v] & alive).count("1"))
        best: Optional[int] = None
        best_size = 0
        for v in candidates:
            rest = alive & ~(1 << v)
            if best is not None and 1 + _cycle_packing_bound(masks, rest) >= best_size:
                continue
            sub = solve(rest) | (1 << v)
            size = bin(sub).count("1")
            if best is None or size < best_size:
                best, best_size = sub, size
        memo[alive] = best
        return best

    return from_mask(solve((1 << G.n) - 1))


def maximum_forest(G: Graph) -> frozenset[int]:
    """A maximum induced forest (complement of a minimum feedback vertex set)."""
    fvs = minimum_feedback_vertex_set(G)
    return frozenset(v for v in range(G.n) if v not in fvs)


def forest_number(G: Graph) -> int:
    return G.n - len(minimum_feedback_vertex_set(G))


# -- well-f-coveredness -----------------------------------------------------------


def _smaller_maximal_forest(G: Graph, below: int, first_only: bool) -> Optional[frozenset[int]]:
    """Smallest maximal forest of order < ``below`` (or the first one found), else None."""
    best: list[Optional[frozenset[int]]] = [None]
    cap = [below]

    def emit(members: list[int]) -> bool:
        # the cap shrinks mid-branch, so equal-order leaves can still arrive
        if len(members) < cap[0]:
            best[0] = frozenset(members)
            cap[0] = len(members)
        return not first_only

    MaximalSetSearch(G, ForestState(G)).run(emit, include_first=False, cap=lambda: cap[0])
    return best[0]


def min_maximal_forest_order(G: Graph) -> int:
    """Order of the smallest maximal induced forest."""
    return decide_well_f_covered(G).min_maximal_order


def decide_well_f_covered(G: Graph, early_exit: bool = False) -> ForestVerdict:
    """Decide well-f-coveredness with a maximum and a minimum maximal forest as witnesses.

    The forest number comes first; the search then looks only for maximal
    forests strictly smaller than it. With ``early_exit`` the first such
    forest ends the search, and ``min_maximal_order`` is that forest's order
    rather than the true minimum.
    """
    wmax = maximum_forest(G)
    f = len(wmax)
    smaller = _smaller_maximal_forest(G, f, early_exit) if G.n else None
    if smaller is None:
        return ForestVerdict(True, f, f, wmax, wmax)
    return ForestVerdict(False, f, len(smaller), wmax, smaller)


def every_maximal_forest_contains(G: Graph, v: int) -> bool:
    """True iff no maximal induced forest of ``G`` omits ``v``."""
    G.check_vertex(v)
    found = []

    def emit(members: list[int]) -> bool:
        found.append(members)
        return False

    MaximalSetSearch(G, ForestState(G), forbidden=(v,)).run(emit)
    return not found


@dataclass(frozen=True)
class BoundaryCheck:
    """Both sides of each boundary characterization.

    Each entry is ``(lhs, rhs)``, or None when the claim does not apply
    (the complete-graph claim needs a connected graph, the order-2 claim a
    disconnected one).
    """

    forest_number: int
    f_is_1: tuple[bool, bool]
    f_is_2_connected: Optional[tuple[bool, bool]]
    f_is_2_disconnected: Optional[tuple[bool, bool]]
    f_is_n: tuple[bool, bool]
    unicyclic: tuple[bool, bool]
    well_f_covered: bool

    def agreements(self) -> dict[str, bool]:
        out = {}
        for key in ("f_is_1", "f_is_2_connected", "f_is_2_disconnected", "f_is_n", "unicyclic"):
            pair = getattr(self, key)
            out[key] = True if pair is None else pair[0] == pair[1]
        return out

    @property
    def all_agree(self) -> bool:
        return all(self.agreements().values())


def check_boundary_characterizations(G: Graph, verdict: Optional[ForestVerdict] = None) -> BoundaryCheck:
    """Evaluate the boundary forest-number characterizations on ``G``.

    Left sides come from the forest engine, right sides from structure only.
    """
    verdict = verdict or decide_well_f_covered(G)
    f, n = verdict.forest_number, G.n
    connected = is_connected(G) and n > 0
    cyclomatic = cyclomatic_number(G)
    return BoundaryCheck(
        forest_number=f,
        f_is_1=(f == 1, n == 1),
        f_is_2_connected=(f == 2, n >= 2 and is_complete(G)) if connected else None,
        f_is_2_disconnected=(f == 2, n == 2 and G.m == 0) if n > 0 and not connected else None,
        f_is_n=(f == n, cyclomatic == 0),
        unicyclic=(verdict.well_f_covered and f == n - 1, cyclomatic == 1),
        well_f_covered=verdict.well_f_covered,
    )
