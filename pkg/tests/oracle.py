"""Independent brute-force oracles working on plain (n, edge list) data.

Nothing here imports the package, so agreement with it is meaningful.
"""

from itertools import combinations


def _components(vertices, edges):
    parent = {v: v for v in vertices}

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for u, v in edges:
        parent[find(u)] = find(v)
    return len({find(v) for v in vertices})


def is_acyclic(S, edges):
    S = set(S)
    inside = [(u, v) for u, v in edges if u in S and v in S]
    return len(inside) == len(S) - _components(S, inside)


def is_independent(S, edges):
    S = set(S)
    return not any(u in S and v in S for u, v in edges)


def maximal_sets(n, edges, good):
    subsets = [frozenset(c) for k in range(n + 1) for c in combinations(range(n), k)]
    ok = [S for S in subsets if good(S, edges)]
    return {S for S in ok if all(not good(S | {v}, edges) for v in range(n) if v not in S)}


def maximal_forests(n, edges):
    return maximal_sets(n, edges, is_acyclic)


def maximal_independent_sets(n, edges):
    return maximal_sets(n, edges, is_independent)


def forest_orders(n, edges):
    return {len(S) for S in maximal_forests(n, edges)}


def forest_number(n, edges):
    return max(forest_orders(n, edges))


def well_f_covered(n, edges):
    return len(forest_orders(n, edges)) == 1


def well_covered(n, edges):
    return len({len(S) for S in maximal_independent_sets(n, edges)}) == 1


def edge_list(G):
    return [tuple(e) for e in G.edges]


def isomorphic(n1, edges1, n2, edges2):
    from itertools import permutations

    if n1 != n2 or len(edges1) != len(edges2):
        return False
    target = {frozenset(e) for e in edges2}
    deg1 = sorted(sum(v in e for e in edges1) for v in range(n1))
    deg2 = sorted(sum(v in e for e in edges2) for v in range(n2))
    if deg1 != deg2:
        return False
    return any({frozenset((p[u], p[v])) for u, v in edges1} == target for p in permutations(range(n1)))
