"""Claim registry and verification runner.

Each registered check pairs an instance generator (exhaustive labeled
graphs, seeded random graphs, or explicit constructions) with a predicate
that recomputes everything with the forest and independence engines. A
predicate returns None when the claim holds on an instance and an
``(expected, observed)`` pair when it does not. Counterexamples are kept in
full.

Randomness is drawn from ``random.Random`` seeded with the string
``"<seed>/<check id>"``; Python seeds string inputs through SHA-512, so the
instance stream is identical on every platform and independent of which
other checks run.
"""

from __future__ import annotations

import csv
import io
import json
import random
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from typing import Any, Callable, Iterable, Iterator, Optional

from . import __version__
from .constructions import (
    clique_edge_gadget,
    complete_graph,
    connect_by_path,
    cycle_graph,
    disjoint_union,
    empty_graph,
    family,
    glue_forest_along_path,
    identify_vertex,
    join,
    matched_cliques,
    replace_edge_with_path,
    wheel_graph,
)
from .fixtures import CLASSIFICATIONS
from .forests import (
    brute_force_maximal_forests,
    decide_well_f_covered,
    every_maximal_forest_contains,
)
from .graph import Graph, bridges, cyclomatic_number, is_complete, is_connected
from .independence import IndependenceVerdict, has_dominating_vertex, independence_verdict
from .textformat import serialize_graph

VERDICTS = ("pass", "fail", "erratum_confirmed")
MAX_EXHAUSTIVE_N = 6
MAX_FACTOR_N = 5


class UnknownCheckError(KeyError):
    pass


@dataclass(frozen=True)
class Scale:
    exhaustive_n_max: int = 6  # single-graph scans over all labeled graphs
    factor_n_max: int = 4  # per-factor scans for the join claims
    random_trials: int = 200
    seed: int = 0

    def __post_init__(self):
        if not 0 <= self.exhaustive_n_max <= MAX_EXHAUSTIVE_N:
            raise ValueError(f"exhaustive_n_max must be in [0, {MAX_EXHAUSTIVE_N}]")
        if not 1 <= self.factor_n_max <= MAX_FACTOR_N:
            raise ValueError(f"factor_n_max must be in [1, {MAX_FACTOR_N}]")
        if self.random_trials < 0:
            raise ValueError("random_trials must be non-negative")

    def as_dict(self) -> dict:
        return {
            "exhaustive_n_max": self.exhaustive_n_max,
            "factor_n_max": self.factor_n_max,
            "random_trials": self.random_trials,
            "seed": self.seed,
        }


@dataclass(frozen=True)
class RandomGraphSpec:
    n: int
    p: float
    seed: int


def random_graph(spec: RandomGraphSpec) -> Graph:
    """G(n, p): pairs (u, v), u < v, in lexicographic order, each kept when ``random() < p``."""
    if not 0.0 <= spec.p <= 1.0:
        raise ValueError(f"edge probability must be in [0, 1], got {spec.p}")
    rng = random.Random(spec.seed)
    return Graph(spec.n, [e for e in combinations(range(spec.n), 2) if rng.random() < spec.p])


def all_labeled_graphs(n: int) -> Iterator[Graph]:
    pairs = list(combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph(n, [pairs[i] for i in range(len(pairs)) if code >> i & 1])


@lru_cache(maxsize=None)
def labeled_graphs_upto(n_max: int, n_min: int = 0) -> tuple[Graph, ...]:
    return tuple(G for n in range(n_min, n_max + 1) for G in all_labeled_graphs(n))


# -- cached facts -------------------------------------------------------------------


@lru_cache(maxsize=1 << 18)
def _forest_facts(G: Graph) -> tuple[bool, int]:
    v = decide_well_f_covered(G, early_exit=True)
    return v.well_f_covered, v.forest_number


def wfc(G: Graph) -> bool:
    return _forest_facts(G)[0]


def fnum(G: Graph) -> int:
    return _forest_facts(G)[1]


@lru_cache(maxsize=1 << 18)
def indep(G: Graph) -> IndependenceVerdict:
    return independence_verdict(G)


# -- results ------------------------------------------------------------------------


@dataclass(frozen=True)
class Instance:
    label: str
    graphs: dict[str, Graph]
    data: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Counterexample:
    instance: str
    graphs: dict[str, str]
    expected: Any
    observed: Any

    def as_dict(self) -> dict:
        return {
            "instance": self.instance,
            "graphs": self.graphs,
            "expected": self.expected,
            "observed": self.observed,
        }


@dataclass
class TheoremCheckResult:
    id: str
    instances_checked: int
    counterexamples: list[Counterexample]
    verdict: str
    notes: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.verdict in ("pass", "erratum_confirmed")

    def as_dict(self) -> dict:
        return {
            "id": self.id,
            "instances_checked": self.instances_checked,
            "verdict": self.verdict,
            "counterexamples": [c.as_dict() for c in self.counterexamples],
            "notes": self.notes,
        }


Outcome = Optional[tuple[Any, Any]]
Predicate = Callable[[Instance], Outcome]


@dataclass(frozen=True)
class TheoremCheck:
    id: str
    claim: str
    generator: Callable[[Scale, random.Random], Iterable[Instance]]
    predicate: Predicate
    tallies: dict[str, Callable[[Instance], bool]] = field(default_factory=dict)
    # a positive count under this tally (with no counterexamples) confirms a known erratum
    erratum_tally: Optional[str] = None
    notes: dict = field(default_factory=dict)
    # optional per-instance row recorded under notes["table"]
    row: Optional[Callable[[Instance], tuple[str, Any]]] = None


def _run(check_id: str, instances: Iterable[Instance], predicate: Predicate,
         tallies: Optional[dict] = None, erratum_tally: Optional[str] = None,
         notes: Optional[dict] = None,
         row: Optional[Callable[[Instance], tuple[str, Any]]] = None) -> TheoremCheckResult:
    tallies = tallies or {}
    table: dict[str, Any] = {}
    counts = {k: 0 for k in tallies}
    found: list[Counterexample] = []
    checked = 0
    for inst in instances:
        checked += 1
        outcome = predicate(inst)
        if outcome is not None:
            expected, observed = outcome
            found.append(Counterexample(
                inst.label,
                {k: serialize_graph(g, name="") for k, g in inst.graphs.items()},
                expected,
                observed,
            ))
        for key, fn in tallies.items():
            counts[key] += bool(fn(inst))
        if row is not None:
            key, value = row(inst)
            table[key] = value
    if found:
        verdict = "fail"
    elif erratum_tally is not None and counts[erratum_tally] > 0:
        verdict = "erratum_confirmed"
    else:
        verdict = "pass"
    out_notes = dict(notes or {})
    out_notes.update(counts)
    if table:
        out_notes["table"] = table
    return TheoremCheckResult(check_id, checked, found, verdict, out_notes)


def exhaustive_scan(n_max: int, predicate: Predicate, check_id: str = "scan",
                    where: Optional[Callable[[Graph], bool]] = None) -> TheoremCheckResult:
    """Run ``predicate`` on every labeled graph of order 0..``n_max`` (optionally filtered)."""
    if n_max > MAX_EXHAUSTIVE_N:
        raise ValueError(f"exhaustive scans are limited to n <= {MAX_EXHAUSTIVE_N}")
    graphs = (G for G in labeled_graphs_upto(n_max) if where is None or where(G))
    return _run(check_id, (Instance(_tag(G), {"G": G}) for G in graphs), predicate)


def _tag(G: Graph) -> str:
    return f"n={G.n} edges={[tuple(e) for e in G.edges]}"


# -- random helpers -------------------------------------------------------------------


def _rand(rng: random.Random, n_lo: int, n_hi: int, p: Optional[float] = None) -> Graph:
    n = rng.randint(n_lo, n_hi)
    return random_graph(RandomGraphSpec(n, rng.uniform(0.15, 0.85) if p is None else p, rng.getrandbits(64)))


def _rand_where(rng: random.Random, n_lo: int, n_hi: int, ok: Callable[[Graph], bool],
                attempts: int = 5000) -> Graph:
    for _ in range(attempts):
        G = _rand(rng, n_lo, n_hi)
        if ok(G):
            return G
    raise RuntimeError("rejection sampling exhausted its attempts")


def _relabel(G: Graph, rng: random.Random) -> Graph:
    perm = list(range(G.n))
    rng.shuffle(perm)
    return Graph(G.n, [(perm[u], perm[v]) for u, v in G.edges], name=G.name)


def _has_edge(G: Graph) -> bool:
    return G.m > 0


# -- definition and single-graph claims -----------------------------------------------


def _gen_definition(scale: Scale, rng: random.Random):
    for G in labeled_graphs_upto(min(scale.exhaustive_n_max, 5)):
        yield Instance(_tag(G), {"G": G})
    for t in range(scale.random_trials):
        G = _rand(rng, 6, 10)
        yield Instance(f"random #{t}", {"G": G})


def _pred_definition(inst: Instance) -> Outcome:
    G = inst.graphs["G"]
    orders = {len(s) for s in brute_force_maximal_forests(G)}
    v = decide_well_f_covered(G)
    expected = {"well_f_covered": len(orders) == 1, "f": max(orders), "min_order": min(orders)}
    observed = {"well_f_covered": v.well_f_covered, "f": v.forest_number, "min_order": v.min_maximal_order}
    return None if expected == observed else (expected, observed)


def _gen_cycles(scale, rng):
    for n in range(3, 13):
        yield Instance(f"C{n}", {"G": cycle_graph(n)}, {"f": n - 1})


def _gen_completes(scale, rng):
    for n in range(1, 11):
        yield Instance(f"K{n}", {"G": complete_graph(n)}, {"f": min(n, 2)})


def _pred_f_and_wfc(inst: Instance) -> Outcome:
    G = inst.graphs["G"]
    expected = {"f": inst.data["f"], "well_f_covered": True}
    observed = {"f": fnum(G), "well_f_covered": wfc(G)}
    return None if expected == observed else (expected, observed)


def _gen_bridges(scale, rng):
    for G in labeled_graphs_upto(scale.exhaustive_n_max):
        for e in sorted(bridges(G)):
            yield Instance(f"{_tag(G)} bridge={tuple(e)}", {"G": G}, {"bridge": e})
    for t in range(scale.random_trials):
        A, B = _rand(rng, 1, 5), _rand(rng, 1, 5)
        joined = connect_by_path(A, rng.randrange(A.n), B, rng.randrange(B.n), 1, predict=False).graph
        e = sorted(bridges(joined))[rng.randrange(len(bridges(joined)))]
        yield Instance(f"random #{t} bridge={tuple(e)}", {"G": joined}, {"bridge": e})


def _pred_bridge(inst: Instance) -> Outcome:
    G = inst.graphs["G"]
    e = inst.data["bridge"]
    H = Graph(G.n, [x for x in G.edges if x != e])
    expected = {"well_f_covered": wfc(G), "f": fnum(G)}
    observed = {"well_f_covered": wfc(H), "f": fnum(H)}
    return None if expected == observed else (expected, observed)


def fixture_suite() -> TheoremCheckResult:
    """Classify the named example graphs (and relabeled copies) against their known properties."""
    return verify("S4.fixtures")


def _gen_fixtures(scale, rng):
    for G, is_wfc, is_wc in CLASSIFICATIONS:
        yield Instance(G.name, {"G": G}, {"well_f_covered": is_wfc, "well_covered": is_wc})
        yield Instance(f"{G.name} (relabeled)", {"G": _relabel(G, rng)},
                       {"well_f_covered": is_wfc, "well_covered": is_wc})
    K3 = complete_graph(3)
    bowtie = identify_vertex(K3, 0, K3, 0, predict=False).graph
    yield Instance("two triangles sharing a vertex", {"G": bowtie}, {"well_f_covered": False, "well_covered": False})


def _pred_fixture(inst: Instance) -> Outcome:
    G = inst.graphs["G"]
    observed = {"well_f_covered": wfc(G), "well_covered": indep(G).well_covered}
    return None if observed == inst.data else (inst.data, observed)


def _gen_all_small(scale, rng):
    for G in labeled_graphs_upto(scale.exhaustive_n_max):
        yield Instance(_tag(G), {"G": G})


def _gen_connected_small(scale, rng):
    for G in labeled_graphs_upto(scale.exhaustive_n_max, 1):
        if is_connected(G):
            yield Instance(_tag(G), {"G": G})


def _gen_disconnected_small(scale, rng):
    for G in labeled_graphs_upto(scale.exhaustive_n_max, 1):
        if not is_connected(G):
            yield Instance(_tag(G), {"G": G})


def _boundary(key: str) -> Predicate:
    def pred(inst: Instance) -> Outcome:
        G = inst.graphs["G"]
        is_wfc, f = _forest_facts(G)
        if key == "unicyclic":
            lhs, rhs = is_wfc and f == G.n - 1, cyclomatic_number(G) == 1
            # every unicyclic graph is well-f-covered with f = n - 1
            if lhs != rhs:
                return ({"unicyclic": rhs}, {"wfc_and_f_is_n_minus_1": lhs, "f": f})
            return None
        if key == "f1":
            lhs, rhs = f == 1, G.n == 1
        elif key == "f2c":
            lhs, rhs = f == 2, G.n >= 2 and is_complete(G)
        elif key == "f2d":
            lhs, rhs = f == 2, G.n == 2 and G.m == 0
        else:
            lhs, rhs = f == G.n, cyclomatic_number(G) == 0
        if lhs != rhs or (lhs and not is_wfc):
            return ({"lhs": rhs, "well_f_covered": True}, {"lhs": lhs, "well_f_covered": is_wfc, "f": f})
        return None
    return pred


# -- constructions -------------------------------------------------------------------------


def _gen_union(scale, rng):
    factors = labeled_graphs_upto(min(scale.factor_n_max, 3), 1)
    for G in factors:
        for H in factors:
            yield Instance(f"{_tag(G)} + {_tag(H)}", {"G": G, "H": H})
    for t in range(scale.random_trials):
        yield Instance(f"random pair #{t}", {"G": _rand(rng, 1, 8), "H": _rand(rng, 1, 8)})


def _pred_union(inst: Instance) -> Outcome:
    G, H = inst.graphs["G"], inst.graphs["H"]
    U = disjoint_union(G, H, predict=False).graph
    expected = {"f": fnum(G) + fnum(H), "well_f_covered": wfc(G) and wfc(H)}
    observed = {"f": fnum(U), "well_f_covered": wfc(U)}
    return None if expected == observed else (expected, observed)


def _gen_identify(scale, rng):
    for t in range(scale.random_trials):
        want_wfc = t % 2 == 0
        if t % 4 < 2:
            # lemma: x lies in every maximal forest of G
            def ok_g(G):
                return (not want_wfc or wfc(G)) and any(every_maximal_forest_contains(G, v) for v in range(G.n))
            G = _rand_where(rng, 1, 7, ok_g)
            xs = [v for v in range(G.n) if every_maximal_forest_contains(G, v)]
            H = _rand_where(rng, 1, 7, lambda H: not want_wfc or wfc(H))
            x, y = rng.choice(xs), rng.randrange(H.n)
            yield Instance(f"lemma #{t} x={x} y={y}", {"G": G, "H": H}, {"x": x, "y": y, "part": "lemma"})
        else:
            # both identified vertices avoidable in well-f-covered factors: never well-f-covered
            def ok(G):
                return wfc(G) and any(not every_maximal_forest_contains(G, v) for v in range(G.n))
            G, H = _rand_where(rng, 3, 7, ok), _rand_where(rng, 3, 7, ok)
            x = rng.choice([v for v in range(G.n) if not every_maximal_forest_contains(G, v)])
            y = rng.choice([v for v in range(H.n) if not every_maximal_forest_contains(H, v)])
            yield Instance(f"avoidable #{t} x={x} y={y}", {"G": G, "H": H}, {"x": x, "y": y, "part": "avoidable"})


def _pred_identify(inst: Instance) -> Outcome:
    G, H = inst.graphs["G"], inst.graphs["H"]
    res = identify_vertex(G, inst.data["x"], H, inst.data["y"])
    R = res.graph
    if inst.data["part"] == "avoidable":
        return None if not wfc(R) else ({"well_f_covered": False}, {"well_f_covered": True})
    expected = {"f": res.predicted_f, "well_f_covered": True if wfc(G) and wfc(H) else wfc(R)}
    observed = {"f": fnum(R), "well_f_covered": wfc(R)}
    return None if expected == observed else (expected, observed)


def _gen_path_connect(scale, rng):
    for t in range(scale.random_trials):
        want_wfc = t % 2 == 0
        G = _rand_where(rng, 1, 5, lambda g: not want_wfc or wfc(g))
        H = _rand_where(rng, 1, 5, lambda g: not want_wfc or wfc(g))
        x, y, d = rng.randrange(G.n), rng.randrange(H.n), rng.randint(1, 4)
        yield Instance(f"#{t} x={x} y={y} d={d}", {"G": G, "H": H}, {"x": x, "y": y, "d": d})


def _pred_path_connect(inst: Instance) -> Outcome:
    G, H = inst.graphs["G"], inst.graphs["H"]
    res = connect_by_path(G, inst.data["x"], H, inst.data["y"], inst.data["d"])
    R = res.graph
    expected = {"f": res.predicted_f, "well_f_covered": True if wfc(G) and wfc(H) else wfc(R)}
    observed = {"f": fnum(R), "well_f_covered": wfc(R)}
    return None if expected == observed else (expected, observed)


def _degree2_edges(G: Graph) -> list:
    return [e for e in G.edges if G.degree(e.u) == 2 or G.degree(e.v) == 2]


def _gen_subdivide(scale, rng):
    for t in range(scale.random_trials):
        want_wfc = t % 2 == 0
        G = _rand_where(rng, 3, 9, lambda g: bool(_degree2_edges(g)) and (not want_wfc or wfc(g)))
        e = rng.choice(_degree2_edges(G))
        d = rng.randint(2, 4)
        yield Instance(f"#{t} e={tuple(e)} d={d}", {"G": G}, {"e": e, "d": d})


def _pred_subdivide(inst: Instance) -> Outcome:
    G = inst.graphs["G"]
    res = replace_edge_with_path(G, inst.data["e"], inst.data["d"])
    R = res.graph
    expected = {"f": res.predicted_f, "well_f_covered": wfc(G)}
    observed = {"f": fnum(R), "well_f_covered": wfc(R)}
    return None if expected == observed else (expected, observed)


def _random_simple_path(G: Graph, k: int, rng: random.Random) -> Optional[list[int]]:
    for _ in range(20):
        path = [rng.randrange(G.n)]
        while len(path) < k:
            options = sorted(G.neighbors(path[-1]) - set(path))
            if not options:
                break
            path.append(rng.choice(options))
        if len(path) == k:
            return path
    return None


def _random_forest_with_path(k: int, extra: int, rng: random.Random) -> tuple[Graph, list[int]]:
    edges = [(i, i + 1) for i in range(k - 1)]
    for v in range(k, k + extra):
        if rng.random() < 0.8:
            edges.append((rng.randrange(v), v))
    perm = list(range(k + extra))
    rng.shuffle(perm)
    H = Graph(k + extra, [(perm[u], perm[v]) for u, v in edges])
    return H, [perm[i] for i in range(k)]


def _gen_glue(scale, rng):
    for t in range(scale.random_trials):
        want_wfc = t % 2 == 0
        k = rng.randint(2, 4)
        while True:
            G = _rand_where(rng, k, 8, lambda g: g.m > 0 and (not want_wfc or wfc(g)))
            path_g = _random_simple_path(G, k, rng)
            if path_g is not None:
                break
        H, path_h = _random_forest_with_path(k, rng.randint(0, 4), rng)
        yield Instance(f"#{t} k={k} pG={path_g} pH={path_h}", {"G": G, "H": H},
                       {"path_g": path_g, "path_h": path_h})


def _glue(inst: Instance):
    G, H = inst.graphs["G"], inst.graphs["H"]
    return glue_forest_along_path(G, inst.data["path_g"], H, inst.data["path_h"])


def _pred_glue(inst: Instance) -> Outcome:
    G = inst.graphs["G"]
    res = _glue(inst)
    expected = {"f": res.predicted_f, "well_f_covered": wfc(G)}
    observed = {"f": fnum(res.graph), "well_f_covered": wfc(res.graph)}
    return None if expected == observed else (expected, observed)


def _glue_statement_fails(inst: Instance) -> bool:
    G, H = inst.graphs["G"], inst.graphs["H"]
    k = len(inst.data["path_g"])
    return fnum(_glue(inst).graph) != fnum(G) - H.n + k


def _gen_gadget(scale, rng):
    for n in range(2, 6):
        yield Instance(f"gadget({n})", {"G": clique_edge_gadget(n).graph}, {"n": n})
    for t in range(8):
        n = 2 + t % 4
        yield Instance(f"gadget({n}) relabeled #{t}", {"G": _relabel(clique_edge_gadget(n).graph, rng)}, {"n": n})


def _pred_gadget(inst: Instance) -> Outcome:
    G = inst.graphs["G"]
    n = inst.data["n"]
    expected = {"f": n * (n - 1) // 2 + 1, "well_f_covered": True}
    observed = {"f": fnum(G), "well_f_covered": wfc(G)}
    return None if expected == observed else (expected, observed)


def matching_shapes(n: int, s: int, rng: random.Random, count: int = 5) -> list[list[tuple[int, int]]]:
    """Up to ``count`` distinct matchings between ``s`` copies of K_n (always including the empty one)."""
    cross = [(a, b) for a, b in combinations(range(n * s), 2) if a // n != b // n]
    shapes = [[]]
    seen = {()}
    for _ in range(200):
        if len(shapes) >= count:
            break
        order = cross[:]
        rng.shuffle(order)
        keep = rng.random()
        used: set[int] = set()
        chosen = []
        for a, b in order:
            if a not in used and b not in used and rng.random() < keep:
                chosen.append((a, b))
                used.update((a, b))
        key = tuple(sorted(chosen))
        if key not in seen:
            seen.add(key)
            shapes.append(list(key))
    return shapes


def _gen_matched(scale, rng):
    for n in range(1, 5):
        for s in range(1, 5):
            for i, shape in enumerate(matching_shapes(n, s, rng)):
                G = matched_cliques(n, s, shape).graph
                yield Instance(f"n={n} s={s} matching={shape}", {"G": G}, {"n": n, "s": s})


def _pred_matched(inst: Instance) -> Outcome:
    G = inst.graphs["G"]
    n, s = inst.data["n"], inst.data["s"]
    expected = {"well_f_covered": True, "f": 2 * s if n >= 3 else fnum(G)}
    observed = {"well_f_covered": wfc(G), "f": fnum(G)}
    return None if expected == observed else (expected, observed)


# -- joins -------------------------------------------------------------------------------


def _conditions_both_nonempty(G: Graph, H: Graph) -> bool:
    ig, ih = indep(G), indep(H)
    return (wfc(G) and wfc(H) and ig.well_covered and ih.size_ge2_uniform
            and fnum(G) == fnum(H) == ig.alpha + 1 == ih.alpha + 1)


def _hyp_nonempty_g(G: Graph) -> bool:
    return G.m > 0 and not has_dominating_vertex(G)


def _gen_join_nonempty(scale, rng, h_undominated: bool = False):
    factors = labeled_graphs_upto(scale.factor_n_max, 2)
    gs = [G for G in factors if _hyp_nonempty_g(G)]
    hs = [H for H in factors if H.m > 0 and (not h_undominated or not has_dominating_vertex(H))]
    for G in gs:
        for H in hs:
            yield Instance(f"{_tag(G)} v {_tag(H)}", {"G": G, "H": H})
    pool = labeled_graphs_upto(min(scale.factor_n_max + 1, MAX_FACTOR_N), 2)
    pool_g = [G for G in pool if _hyp_nonempty_g(G) and wfc(G) and indep(G).well_covered
              and fnum(G) == indep(G).alpha + 1]
    pool_h = [H for H in pool if H.m > 0 and (not h_undominated or not has_dominating_vertex(H))
              and wfc(H) and indep(H).size_ge2_uniform and fnum(H) == indep(H).alpha + 1]
    for t in range(scale.random_trials):
        if t % 2 == 0 and pool_g:
            G = rng.choice(pool_g)
            matches = [H for H in pool_h if fnum(H) == fnum(G)]
            if matches:
                yield Instance(f"conditioned #{t}", {"G": G, "H": rng.choice(matches)})
                continue
        G = _rand_where(rng, 2, 6, _hyp_nonempty_g)
        H = _rand_where(rng, 2, 6, lambda h: h.m > 0 and (not h_undominated or not has_dominating_vertex(h)))
        yield Instance(f"random #{t}", {"G": G, "H": H})


def _pred_join_nonempty(inst: Instance) -> Outcome:
    G, H = inst.graphs["G"], inst.graphs["H"]
    J = join(G, H).graph
    lhs, rhs = wfc(J), _conditions_both_nonempty(G, H)
    if lhs != rhs:
        return ({"well_f_covered": rhs}, {"well_f_covered": lhs})
    if lhs and not fnum(J) == fnum(G) == fnum(H):
        return ({"f": [fnum(G), fnum(H)]}, {"f": fnum(J)})
    return None


def _pred_join_nonempty_remark(inst: Instance) -> Outcome:
    G, H = inst.graphs["G"], inst.graphs["H"]
    if wfc(join(G, H).graph) and not indep(H).well_covered:
        return ({"H_well_covered": True}, {"H_well_covered": False})
    return None


def _gen_join_dominated(scale, rng):
    factors = [G for G in labeled_graphs_upto(scale.factor_n_max, 1) if has_dominating_vertex(G)]
    for G in factors:
        for H in factors:
            yield Instance(f"{_tag(G)} v {_tag(H)}", {"G": G, "H": H})
    for t in range(scale.random_trials):
        if t % 2 == 0:
            G, H = complete_graph(rng.randint(1, 6)), complete_graph(rng.randint(1, 6))
        else:
            G = _rand_where(rng, 1, 6, has_dominating_vertex, attempts=20000)
            H = _rand_where(rng, 1, 6, has_dominating_vertex, attempts=20000)
        yield Instance(f"random #{t}", {"G": G, "H": H})


def _pred_join_dominated(inst: Instance) -> Outcome:
    G, H = inst.graphs["G"], inst.graphs["H"]
    lhs = wfc(join(G, H).graph)
    rhs = is_complete(G) and is_complete(H)
    return None if lhs == rhs else ({"well_f_covered": rhs}, {"well_f_covered": lhs})


def _conditions_with_edgeless(G: Graph, n: int) -> bool:
    ig = indep(G)
    return wfc(G) and ig.size_ge2_uniform and fnum(G) == ig.alpha + 1 == n + 1


def _gen_join_edgeless(scale, rng, g_undominated: bool = False):
    def hyp(G):
        return G.m > 0 and (not g_undominated or not has_dominating_vertex(G))

    gs = [G for G in labeled_graphs_upto(scale.factor_n_max, 2) if hyp(G)]
    for G in gs:
        for n in range(2, scale.factor_n_max + 1):
            yield Instance(f"{_tag(G)} v E{n}", {"G": G, "H": empty_graph(n)})
    pool = [G for G in labeled_graphs_upto(min(scale.factor_n_max + 1, MAX_FACTOR_N), 2)
            if hyp(G) and fnum(G) >= 3 and _conditions_with_edgeless(G, fnum(G) - 1)]
    for t in range(scale.random_trials):
        if t % 2 == 0 and pool:
            G = rng.choice(pool)
            n = fnum(G) - 1
        else:
            G = _rand_where(rng, 2, 6, hyp)
            n = rng.randint(2, 5)
        yield Instance(f"random #{t} E{n}", {"G": G, "H": empty_graph(n)})


def _pred_join_edgeless(inst: Instance) -> Outcome:
    G, H = inst.graphs["G"], inst.graphs["H"]
    J = join(G, H).graph
    lhs, rhs = wfc(J), _conditions_with_edgeless(G, H.n)
    if lhs != rhs:
        return ({"well_f_covered": rhs}, {"well_f_covered": lhs})
    if lhs and not fnum(J) == fnum(G) == H.n + 1:
        return ({"f": H.n + 1}, {"f": fnum(J), "f_G": fnum(G)})
    return None


def _pred_join_edgeless_remark(inst: Instance) -> Outcome:
    G, H = inst.graphs["G"], inst.graphs["H"]
    if wfc(join(G, H).graph) and not indep(G).well_covered:
        return ({"G_well_covered": True}, {"G_well_covered": False})
    return None


def _gen_join_vertex(scale, rng):
    gs = [G for G in labeled_graphs_upto(min(scale.factor_n_max + 1, MAX_FACTOR_N), 2) if _hyp_nonempty_g(G)]
    for G in gs:
        yield Instance(f"{_tag(G)} v K1", {"G": G, "H": complete_graph(1)})
    for t in range(scale.random_trials):
        G = _rand_where(rng, 4, 9, _hyp_nonempty_g)
        yield Instance(f"random #{t} v K1", {"G": G, "H": complete_graph(1)})


def _pred_join_vertex(inst: Instance) -> Outcome:
    G, H = inst.graphs["G"], inst.graphs["H"]
    J = join(G, H).graph
    ig = indep(G)
    lhs = wfc(J)
    rhs = wfc(G) and ig.well_covered and fnum(G) == ig.alpha + 1
    if lhs != rhs:
        return ({"well_f_covered": rhs}, {"well_f_covered": lhs})
    if lhs and fnum(J) != fnum(G):
        return ({"f": fnum(G)}, {"f": fnum(J)})
    return None


def _no_maximal_independent_set(inst: Instance) -> bool:
    # the literal hypothesis; every graph has at least one maximal independent set
    return indep(inst.graphs["G"]).alpha < 0


def _gen_wheels(scale, rng):
    for n in range(4, 14):
        yield Instance(f"W{n}", {"G": wheel_graph(n)}, {"n": n})


def _pred_wheel(inst: Instance) -> Outcome:
    n = inst.data["n"]
    observed = wfc(inst.graphs["G"])
    return None if observed == (n in (4, 5)) else ({"well_f_covered": n in (4, 5)}, {"well_f_covered": observed})


def _wheel_row(inst: Instance) -> tuple[str, Any]:
    G = inst.graphs["G"]
    return inst.label, {"well_f_covered": wfc(G), "f": fnum(G)}


def _gen_edgeless_pairs(scale, rng):
    top = scale.factor_n_max + 1
    for a in range(1, top + 1):
        for b in range(1, top + 1):
            yield Instance(f"E{a} v E{b}", {"G": empty_graph(a), "H": empty_graph(b)}, {"r": a, "s": b})


def _gen_bipartite(scale, rng):
    top = scale.factor_n_max + 1
    for r in range(1, top + 1):
        for s in range(1, top + 1):
            yield Instance(f"K{r},{s}", {"G": family("complete_bipartite", r, s).graph}, {"r": r, "s": s})


def _pred_bipartite(inst: Instance) -> Outcome:
    r, s = inst.data["r"], inst.data["s"]
    G = inst.graphs["G"] if "H" not in inst.graphs else join(inst.graphs["G"], inst.graphs["H"]).graph
    expected = {"well_f_covered": r == s or min(r, s) == 1}
    observed = {"well_f_covered": wfc(G)}
    if expected["well_f_covered"]:
        expected["f"] = max(r, s) + 1
        observed["f"] = fnum(G)
    return None if expected == observed else (expected, observed)


# -- registry ----------------------------------------------------------------------------

REGISTRY: dict[str, TheoremCheck] = {}


def _register(check: TheoremCheck) -> None:
    if check.id in REGISTRY:
        raise ValueError(f"duplicate check id {check.id}")
    REGISTRY[check.id] = check


for _check in [
    TheoremCheck("D3.1", "engine verdict equals the brute-force census of maximal forest orders",
                 _gen_definition, _pred_definition),
    TheoremCheck("P3.cycle", "cycles are well-f-covered with f(C_n) = n - 1", _gen_cycles, _pred_f_and_wfc),
    TheoremCheck("P3.complete", "complete graphs are well-f-covered with f(K_n) = 2 (n >= 2), f(K_1) = 1",
                 _gen_completes, _pred_f_and_wfc),
    TheoremCheck("P3.bridge", "deleting a bridge preserves the forest number and well-f-coveredness",
                 _gen_bridges, _pred_bridge),
    TheoremCheck("S4.fixtures", "drawn examples have the stated (well-f-covered, well-covered) classes",
                 _gen_fixtures, _pred_fixture),
    TheoremCheck("T5.f1", "f(G) = 1 iff G is trivial; then well-f-covered", _gen_all_small, _boundary("f1")),
    TheoremCheck("T5.1", "connected G: f(G) = 2 iff G is complete of order >= 2; then well-f-covered",
                 _gen_connected_small, _boundary("f2c")),
    TheoremCheck("T5.f2disc", "disconnected G: f(G) = 2 iff G is edgeless of order 2; then well-f-covered",
                 _gen_disconnected_small, _boundary("f2d")),
    TheoremCheck("T5.fn", "f(G) = |V| iff G is a forest; then well-f-covered", _gen_all_small, _boundary("fn")),
    TheoremCheck("T5.2", "well-f-covered with f = |V| - 1 iff exactly one cycle", _gen_all_small,
                 _boundary("unicyclic")),
    TheoremCheck("T6.1", "G + H well-f-covered iff both are; f(G + H) = f(G) + f(H)", _gen_union, _pred_union),
    TheoremCheck("L6.2", "identifying a vertex lying in every maximal forest adds f(H) - 1 and keeps "
                 "well-f-coveredness; identifying two avoidable vertices breaks it", _gen_identify, _pred_identify),
    TheoremCheck("C6.3", "joining by a path of length d: f = f(G) + f(H) + d - 1, well-f-covered if both are",
                 _gen_path_connect, _pred_path_connect),
    TheoremCheck("L6.4", "subdividing an edge at a degree-2 vertex: f grows by d - 1, "
                 "well-f-coveredness unchanged", _gen_subdivide, _pred_subdivide),
    TheoremCheck("L6.5", "gluing a forest along a path of k vertices: f(L) = f(G) + |V(H)| - k, "
                 "well-f-coveredness unchanged", _gen_glue, _pred_glue,
                 tallies={"statement_variant_failed": _glue_statement_fails},
                 erratum_tally="statement_variant_failed",
                 notes={"checked_formula": "f(G) + |V(H)| - k",
                        "statement_variant": "f(G) - |V(H)| + k"}),
    TheoremCheck("T6.6", "clique edge-gadget is well-f-covered with f = C(n,2) + 1", _gen_gadget, _pred_gadget),
    TheoremCheck("T6.7", "matched cliques are well-f-covered; f = 2s for n >= 3", _gen_matched, _pred_matched),
    TheoremCheck("T6.8", "join of graphs with edges (G without a dominating vertex): well-f-covered iff "
                 "both are well-f-covered, G is well-covered, H has uniform maximal independent sets of "
                 "size >= 2, and f(G) = f(H) = alpha(G) + 1 = alpha(H) + 1; then f = f(G)", _gen_join_nonempty, _pred_join_nonempty),
    TheoremCheck("R6.9", "as T6.8 with H also without a dominating vertex: well-f-covered join forces H "
                 "well-covered", lambda sc, r: _gen_join_nonempty(sc, r, h_undominated=True),
                 _pred_join_nonempty_remark),
    TheoremCheck("T6.10", "both factors with a dominating vertex: join well-f-covered iff both complete",
                 _gen_join_dominated, _pred_join_dominated),
    TheoremCheck("T6.11", "G with an edge, H edgeless of order n >= 2: join well-f-covered iff G is "
                 "well-f-covered with uniform maximal independent sets of size >= 2 and "
                 "f(G) = alpha(G) + 1 = n + 1; then f = n + 1", _gen_join_edgeless, _pred_join_edgeless),
    TheoremCheck("R6.12", "as T6.11 with G without a dominating vertex: well-f-covered join forces G "
                 "well-covered", lambda sc, r: _gen_join_edgeless(sc, r, g_undominated=True),
                 _pred_join_edgeless_remark),
    TheoremCheck("T6.13", "G with an edge and no dominating vertex, H = K_1: join well-f-covered iff G is "
                 "well-f-covered, well-covered and f(G) = alpha(G) + 1", _gen_join_vertex, _pred_join_vertex,
                 tallies={"literal_hypothesis_instances": _no_maximal_independent_set},
                 notes={"reading": "corrected: G has an edge and no maximal independent set of size 1; "
                                   "the literal 'no maximal independent set' is unsatisfiable"}),
    TheoremCheck("C6.14", "wheel W_n (n >= 4) is well-f-covered iff n in {4, 5}", _gen_wheels, _pred_wheel,
                 row=_wheel_row),
    TheoremCheck("T6.15", "join of edgeless graphs of orders r, s is well-f-covered iff r = s or min = 1",
                 _gen_edgeless_pairs, _pred_bipartite),
    TheoremCheck("C6.16", "K_{r,s} is well-f-covered iff r = s or min(r, s) = 1; f(K_{n,n}) = n + 1",
                 _gen_bipartite, _pred_bipartite),
]:
    _register(_check)


def verify(check_id: str, scale: Optional[Scale] = None) -> TheoremCheckResult:
    """Run one registered check at the given scale."""
    if check_id not in REGISTRY:
        raise UnknownCheckError(check_id)
    scale = scale or Scale()
    check = REGISTRY[check_id]
    rng = random.Random(f"{scale.seed}/{check_id}")
    return _run(check_id, check.generator(scale, rng), check.predicate,
                check.tallies, check.erratum_tally, check.notes, check.row)


def verify_many(ids: Iterable[str], scale: Optional[Scale] = None) -> list[TheoremCheckResult]:
    ids = list(ids)
    for i in ids:
        if i not in REGISTRY:
            raise UnknownCheckError(i)
    order = {k: i for i, k in enumerate(REGISTRY)}
    return [verify(i, scale) for i in sorted(dict.fromkeys(ids), key=order.__getitem__)]


# -- reports -----------------------------------------------------------------------------


def emit_report(results: list[TheoremCheckResult], fmt: str = "json", seed: Optional[int] = None,
                timestamp: Optional[str] = None, scale: Optional[Scale] = None) -> str:
    """Render results as JSON or CSV.

    ``timestamp`` defaults to null so that equal inputs give byte-identical
    reports.
    """
    if fmt == "json":
        run: dict[str, Any] = {"seed": seed, "timestamp": timestamp, "version": __version__}
        if scale is not None:
            run["scale"] = scale.as_dict()
        doc = {"run": run, "results": [r.as_dict() for r in results]}
        return json.dumps(doc, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["id", "instances_checked", "verdict", "counterexample_count"])
        for r in results:
            writer.writerow([r.id, r.instances_checked, r.verdict, len(r.counterexamples)])
        return buf.getvalue()
    raise ValueError(f"unknown report format {fmt!r}")
