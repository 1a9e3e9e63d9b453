"""Strip isolated vertices, pendant vertices and bridges before deciding.

Isolated and pendant vertices lie in every maximal forest, so each removal
lowers the forest number by exactly one. A bridge lies on no cycle, so
deleting it leaves the family of maximal forests unchanged. Whatever is
left (the core) decides well-f-coveredness for the whole graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Union

from .forests import ForestVerdict, decide_well_f_covered
from .graph import Edge, Graph, bridges, induced_subgraph

Step = tuple[str, Union[int, Edge]]


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[Step, ...]
    core: Graph
    f_offset: int
    relabeling: dict[int, int]  # original id -> core id, surviving vertices only

    def as_dict(self) -> dict:
        return {
            "steps": [[kind, list(what) if isinstance(what, tuple) else what] for kind, what in self.steps],
            "core": {"n": self.core.n, "edges": [list(e) for e in self.core.edges]},
            "f_offset": self.f_offset,
            "relabeling": {str(k): v for k, v in sorted(self.relabeling.items())},
        }


def reduce(G: Graph, rng: Optional[random.Random] = None) -> ReductionTrace:
    """Apply the three removal rules until none applies.

    Each round removes every isolated vertex, then every pendant vertex, then
    one bridge, in increasing id order. With ``rng`` the choices inside a
    round are shuffled instead; the resulting core and offset do not depend
    on the order.
    """
    adj = {v: set(G.adjacency[v]) for v in range(G.n)}
    steps: list[Step] = []
    offset = 0

    def ordered(items):
        items = sorted(items)
        if rng is not None:
            rng.shuffle(items)
        return items

    while True:
        progressed = False
        for v in ordered(v for v in adj if not adj[v]):
            del adj[v]
            steps.append(("isolated", v))
            offset += 1
            progressed = True
        for v in ordered(v for v in adj if len(adj[v]) == 1):
            if v in adj and len(adj[v]) == 1:
                (w,) = adj.pop(v)
                adj[w].discard(v)
                steps.append(("pendant", v))
                offset += 1
                progressed = True
        # removed vertices stay in the rebuilt graph as isolated, bridge-free ids
        cut = ordered(bridges(_rebuild(G.n, adj)))
        if cut:
            a, b = cut[0]
            adj[a].discard(b)
            adj[b].discard(a)
            steps.append(("bridge", Edge(a, b)))
            progressed = True
        if not progressed:
            break

    core, relabel = induced_subgraph(_rebuild(G.n, adj), sorted(adj))
    return ReductionTrace(tuple(steps), core, offset, relabel)


def _rebuild(n: int, adj: dict[int, set[int]]) -> Graph:
    return Graph(n, [(u, w) for u, nbrs in adj.items() for w in nbrs if u < w])


def decide_well_f_covered_reduced(G: Graph, trace: Optional[ReductionTrace] = None) -> ForestVerdict:
    """Reduce, decide on the core, and lift the witnesses back to ``G``.

    Every removed vertex lies in every maximal forest of ``G``, so a core
    witness plus all removed vertices is a maximal forest of ``G``.
    """
    trace = trace or reduce(G)
    core_verdict = decide_well_f_covered(trace.core)
    back = {i: v for v, i in trace.relabeling.items()}
    removed = frozenset(v for v in range(G.n) if v not in trace.relabeling)

    def lift(s: frozenset[int]) -> frozenset[int]:
        return removed | frozenset(back[i] for i in s)

    return ForestVerdict(
        core_verdict.well_f_covered,
        core_verdict.forest_number + trace.f_offset,
        core_verdict.min_maximal_order + trace.f_offset,
        lift(core_verdict.witness_max),
        lift(core_verdict.witness_min),
    )
