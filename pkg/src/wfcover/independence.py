"""Maximal independent sets and the well-covered property."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import Graph, GraphError, from_mask
from .search import Enumeration, EnumerationBudget, IndependentState, enumerate_maximal, lex_key


@dataclass(frozen=True)
class IndependenceVerdict:
    alpha: int
    well_covered: bool
    has_singleton_mis: bool
    size_ge2_uniform: bool
    witness_sets: tuple[frozenset[int], ...]

    def as_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "well_covered": self.well_covered,
            "has_singleton_mis": self.has_singleton_mis,
            "size_ge2_uniform": self.size_ge2_uniform,
            "witness_sets": [sorted(s) for s in self.witness_sets],
        }


def enumerate_maximal_independent_sets(G: Graph, budget: Optional[EnumerationBudget] = None) -> Enumeration:
    return enumerate_maximal(G, IndependentState(G), budget)


def brute_force_maximal_independent_sets(G: Graph, budget: Optional[EnumerationBudget] = None) -> list[frozenset[int]]:
    """Subset-scan oracle for maximal independent sets."""
    limit = (budget or EnumerationBudget()).brute_force_limit
    if G.n > limit:
        raise GraphError(f"brute force refused: n={G.n} exceeds limit {limit}")
    masks = G.masks
    out = []
    for S in range(1 << G.n):
        if any(S >> v & 1 and masks[v] & S for v in range(G.n)):
            continue
        # maximal: every outside vertex sees S
        if all(S >> v & 1 or masks[v] & S for v in range(G.n)):
            out.append(from_mask(S))
    out.sort(key=lex_key)
    return out


def has_dominating_vertex(G: Graph) -> bool:
    """``{v}`` is a maximal independent set iff ``v`` is adjacent to every other vertex."""
    return any(G.degree(v) == G.n - 1 for v in range(G.n))


def independence_number(G: Graph) -> int:
    return max(len(s) for s in enumerate_maximal_independent_sets(G))


def independence_verdict(G: Graph) -> IndependenceVerdict:
    sets = enumerate_maximal_independent_sets(G).sets
    sizes = {len(s) for s in sets}
    alpha = max(sizes)
    big = sorted(k for k in sizes if k >= 2)
    witnesses: tuple[frozenset[int], ...] = ()
    if len(sizes) > 1:
        lo, hi = min(sizes), alpha
        witnesses = (
            next(s for s in sets if len(s) == lo),
            next(s for s in sets if len(s) == hi),
        )
    return IndependenceVerdict(
        alpha=alpha,
        well_covered=len(sizes) == 1,
        has_singleton_mis=has_dominating_vertex(G),
        size_ge2_uniform=len(big) <= 1,
        witness_sets=witnesses,
    )
