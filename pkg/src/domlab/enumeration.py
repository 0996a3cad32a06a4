"""Small-graph enumeration, canonical forms and the graph6 codec.

The canonical form is the minimum upper-triangle adjacency code over the
vertex orderings reachable by individualization/refinement from the
degree partition. Two unplaced twin vertices (equal open or closed
neighborhoods) are interchangeable by an automorphism, so only one of them
is branched on; that keeps cliques, stars and complete bipartite graphs
cheap.
"""

from __future__ import annotations

import functools
import os
from typing import Iterable, Iterator

import networkx as nx

from .errors import CapacityExceeded, InvalidSize, MalformedGraph6, MalformedInput
from .graph import Graph, bits

CANON_MAX_N = 14
MAX_TREE_N = 14
MAX_CONNECTED_N = 8
GRAPH6_MAX_N = 62


def env_cap(default: int) -> int:
    """``DOMLAB_MAX_N`` may only lower a cap."""
    raw = os.environ.get("DOMLAB_MAX_N")
    if raw is None:
        return default
    try:
        return min(default, int(raw))
    except ValueError:
        return default


# --- canonical form --------------------------------------------------------


def _refine(masks: tuple[int, ...], colors: list[int]) -> list[int]:
    """Color refinement to the coarsest equitable partition finer than ``colors``.

    New colors are ranks of label-free signatures, so the ordered partition
    is an isomorphism invariant.
    """
    n = len(masks)
    ncolors = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted(colors[w] for w in bits(masks[v])))) for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncolors:
            return colors
        ncolors = len(rank)


def _code(masks: tuple[int, ...], order: list[int]) -> int:
    """Upper-triangle adjacency bits under ``order``, column by column."""
    code = 0
    for j in range(1, len(order)):
        row = masks[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def _canonical_code(g: Graph) -> int:
    masks = g.masks
    n = g.n
    best: int | None = None

    def search(colors: list[int]) -> None:
        nonlocal best
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            order = sorted(range(n), key=colors.__getitem__)
            code = _code(masks, order)
            if best is None or code < best:
                best = code
            return
        target = next(cells[c] for c in sorted(cells) if len(cells[c]) > 1)
        tried: list[int] = []
        for v in target:
            if any(masks[v] & ~(1 << w) == masks[w] & ~(1 << v) for w in tried):
                continue
            tried.append(v)
            c = colors[v]
            split = [2 * x + (1 if x == c and w != v else 0) for w, x in enumerate(colors)]
            search(_refine(masks, split))

    search(_refine(masks, [m.bit_count() for m in masks]))
    assert best is not None
    return best


def canonical_form(g: Graph) -> bytes:
    """Isomorphism-invariant byte string: ``n`` then the minimum adjacency code."""
    if g.n > CANON_MAX_N:
        raise CapacityExceeded(f"canonical form supports n <= {CANON_MAX_N}")
    nbits = g.n * (g.n - 1) // 2
    code = _canonical_code(g)
    return bytes([g.n]) + code.to_bytes((nbits + 7) // 8, "big")


def canonical_graph(g: Graph) -> Graph:
    """The relabeling of ``g`` whose plain adjacency code is the canonical one."""
    cf = canonical_form(g)
    n = cf[0]
    code = int.from_bytes(cf[1:], "big")
    nbits = n * (n - 1) // 2
    edges = []
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if code >> pos & 1:
                edges.append((i, j))
            pos -= 1
    return Graph(n, edges)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    return canonical_form(g) == canonical_form(h)


# --- generators -------------------------------------------------------------


def all_trees(n: int) -> Iterator[Graph]:
    """One tree per isomorphism class, in canonical-form order."""
    if not 1 <= n <= env_cap(MAX_TREE_N):
        raise InvalidSize(f"tree order must lie in 1..{env_cap(MAX_TREE_N)}, got {n}")
    yield from _trees(n)


@functools.lru_cache(maxsize=None)
def _trees(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    out = [canonical_graph(Graph(n, t.edges())) for t in nx.nonisomorphic_trees(n)]
    return tuple(sorted(out, key=canonical_form))


def all_connected_graphs(n: int) -> Iterator[Graph]:
    """One connected graph per isomorphism class, in canonical-form order."""
    if not 1 <= n <= env_cap(MAX_CONNECTED_N):
        raise InvalidSize(
            f"connected graph order must lie in 1..{env_cap(MAX_CONNECTED_N)}, got {n}"
        )
    yield from _connected(n)


@functools.lru_cache(maxsize=None)
def _connected(n: int) -> tuple[Graph, ...]:
    # Every connected graph has a non-cut vertex, so each class on n vertices
    # arises by attaching a new vertex to some class on n - 1 vertices.
    if n == 1:
        return (Graph(1),)
    found: dict[bytes, Graph] = {}
    for base in _connected(n - 1):
        for nbrs in range(1, 1 << (n - 1)):
            masks = [m | ((nbrs >> v & 1) << (n - 1)) for v, m in enumerate(base.masks)]
            masks.append(nbrs)
            g = Graph.from_masks(masks)
            cf = canonical_form(g)
            if cf not in found:
                found[cf] = g
    return tuple(canonical_graph(found[k]) for k in sorted(found))


# --- graph6 -----------------------------------------------------------------

GRAPH6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    if g.n > GRAPH6_MAX_N:
        raise CapacityExceeded(f"graph6 short form supports n <= {GRAPH6_MAX_N}")
    out = [chr(63 + g.n)]
    acc = 0
    nacc = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (g.masks[i] >> j & 1)
            nacc += 1
            if nacc == 6:
                out.append(chr(63 + acc))
                acc = nacc = 0
    if nacc:
        out.append(chr(63 + (acc << (6 - nacc))))
    return "".join(out)


def parse_graph6(s: str) -> Graph:
    text = s.strip()
    offset = 0
    if text.startswith(GRAPH6_HEADER):
        text = text[len(GRAPH6_HEADER):]
        offset = len(GRAPH6_HEADER)
    if not text:
        raise MalformedGraph6("empty graph6 string", offset)
    for i, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise MalformedGraph6(f"invalid character {ch!r}", offset + i)
    n = ord(text[0]) - 63
    if n > GRAPH6_MAX_N:
        raise MalformedGraph6("long size form is not supported", offset)
    if n == 0:
        raise MalformedGraph6("graph with no vertices", offset)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = text[1:]
    if len(body) != need:
        raise MalformedGraph6(
            f"expected {need} data bytes for n={n}, got {len(body)}",
            offset + 1 + min(len(body), need),
        )
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                edges.append((i, j))
            k += 1
    if need and (ord(body[-1]) - 63) & ((1 << (6 * need - nbits)) - 1):
        raise MalformedGraph6("nonzero padding bits", offset + need)
    return Graph(n, edges)


def read_graph6_lines(lines: Iterable[str]) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line number, graph)`` for each non-blank line."""
    for lineno, line in enumerate(lines, 1):
        line = line.strip()
        if not line:
            continue
        if line == GRAPH6_HEADER:
            continue
        try:
            yield lineno, parse_graph6(line)
        except MalformedGraph6 as exc:
            raise MalformedInput(str(exc), lineno) from exc
