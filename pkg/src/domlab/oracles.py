"""Deliberately naive reference computations.

Nothing here shares code paths with the solvers or generators it checks:
domination uses plain ``set`` arithmetic over all subsets, trees come from
Prüfer sequences deduplicated by AHU tree codes, and connected graphs come
from all labeled edge sets deduplicated with networkx's VF2 matcher.
"""

from __future__ import annotations

from itertools import combinations, product

import networkx as nx

from .graph import Graph


def _dominates(g: Graph, xs: tuple[int, ...]) -> bool:
    seen = set(xs)
    for x in xs:
        seen.update(g.adj[x])
    return len(seen) == g.n


def naive_gamma_sets(g: Graph) -> tuple[int, tuple[tuple[int, ...], ...]]:
    """``(gamma, all minimum dominating sets)`` by trying sizes 1, 2, ... in turn."""
    for k in range(1, g.n + 1):
        found = tuple(xs for xs in combinations(range(g.n), k) if _dominates(g, xs))
        if found:
            return k, found
    raise AssertionError("the whole vertex set always dominates")


def naive_gamma(g: Graph) -> int:
    return naive_gamma_sets(g)[0]


# --- trees from Prüfer sequences ---------------------------------------------


def prufer_decode(seq: tuple[int, ...]) -> list[tuple[int, int]]:
    n = len(seq) + 2
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = [w for w in range(n) if degree[w] == 1]
    edges.append((u, v))
    return edges


def _ahu(adj: list[list[int]], root: int, parent: int) -> str:
    return "(" + "".join(sorted(_ahu(adj, c, root) for c in adj[root] if c != parent)) + ")"


def tree_code(n: int, edges: list[tuple[int, int]]) -> str:
    """AHU encoding rooted at the center (minimum over a bicentral pair)."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    if n <= 2:
        return str(n)
    degree = [len(a) for a in adj]
    layer = [v for v in range(n) if degree[v] == 1]
    remaining = n
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            for w in adj[v]:
                degree[w] -= 1
                if degree[w] == 1:
                    nxt.append(w)
        layer = nxt
    return min(_ahu(adj, c, -1) for c in layer)


def prufer_trees(n: int) -> list[Graph]:
    """One tree per class, from all ``n^(n-2)`` Prüfer sequences."""
    if n == 1:
        return [Graph(1)]
    if n == 2:
        return [Graph(2, [(0, 1)])]
    reps: dict[str, Graph] = {}
    for seq in product(range(n), repeat=n - 2):
        edges = prufer_decode(seq)
        code = tree_code(n, edges)
        if code not in reps:
            reps[code] = Graph(n, edges)
    return list(reps.values())


# --- connected graphs from all labeled edge sets -----------------------------


def naive_connected_graphs(n: int) -> list[Graph]:
    """One connected graph per class, from all ``2^C(n,2)`` labeled edge sets."""
    pairs = list(combinations(range(n), 2))
    buckets: dict[tuple, list[nx.Graph]] = {}
    reps: list[Graph] = []
    for bitset in range(1 << len(pairs)):
        chosen = [p for i, p in enumerate(pairs) if bitset >> i & 1]
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(chosen)
        if not nx.is_connected(h):
            continue
        key = (len(chosen), tuple(sorted(d for _, d in h.degree())))
        bucket = buckets.setdefault(key, [])
        if any(nx.is_isomorphic(h, other) for other in bucket):
            continue
        bucket.append(h)
        reps.append(Graph(n, chosen))
    return reps
