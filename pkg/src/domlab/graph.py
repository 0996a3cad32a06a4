"""Immutable simple graphs on dense vertex ids ``0..n-1``.

Adjacency is kept twice: as ``frozenset`` rows for readable queries and as
integer bitmasks (bit ``w`` of ``masks[v]`` set iff ``vw`` is an edge) for
the solvers. Edits never mutate; they return new graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import (
    CapacityExceeded,
    EmptySet,
    InvalidVertex,
    MalformedInput,
    NotAnEdge,
)

MAX_N = 64


class Edge(NamedTuple):
    u: int
    v: int

    @classmethod
    def of(cls, a: int, b: int) -> "Edge":
        if a == b:
            raise NotAnEdge(f"loop at vertex {a}")
        return cls(a, b) if a < b else cls(b, a)

    def other(self, x: int) -> int:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise InvalidVertex(f"{x} is not an endpoint of {tuple(self)}")

    @property
    def mask(self) -> int:
        return (1 << self.u) | (1 << self.v)


def as_edge(e: Sequence[int]) -> Edge:
    a, b = e
    return Edge.of(int(a), int(b))


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph with ``1 <= n <= 64`` vertices."""

    __slots__ = ("n", "masks", "_adj", "_closed", "_edges", "_hash")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()) -> None:
        if not 1 <= n <= MAX_N:
            raise CapacityExceeded(f"vertex count {n} outside 1..{MAX_N}")
        masks = [0] * n
        for e in edges:
            a, b = e
            if not (0 <= a < n and 0 <= b < n):
                raise InvalidVertex(f"edge {tuple(e)} out of range for n={n}")
            if a == b:
                raise NotAnEdge(f"loop at vertex {a}")
            masks[a] |= 1 << b
            masks[b] |= 1 << a
        self._init(n, tuple(masks))

    def _init(self, n: int, masks: tuple[int, ...]) -> None:
        self.n = n
        self.masks = masks
        self._adj = None
        self._closed = None
        self._edges = None
        self._hash = None

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Build from neighbor bitmasks; trusted input (symmetric, loop-free)."""
        if len(masks) > MAX_N:
            raise CapacityExceeded(f"vertex count {len(masks)} exceeds {MAX_N}")
        g = cls.__new__(cls)
        g._init(len(masks), tuple(masks))
        return g

    @classmethod
    def null(cls) -> "Graph":
        """The graph with no vertices; only meaningful as ``join``'s second argument."""
        g = cls.__new__(cls)
        g._init(0, ())
        return g

    @property
    def adj(self) -> tuple[frozenset[int], ...]:
        if self._adj is None:
            self._adj = tuple(frozenset(bits(m)) for m in self.masks)
        return self._adj

    @property
    def closed(self) -> tuple[int, ...]:
        """Closed-neighborhood bitmasks."""
        if self._closed is None:
            self._closed = tuple(m | (1 << v) for v, m in enumerate(self.masks))
        return self._closed

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[Edge]:
        if self._edges is None:
            self._edges = [
                Edge(u, v) for u, m in enumerate(self.masks) for v in bits(m >> (u + 1) << (u + 1))
            ]
        return list(self._edges)

    @property
    def m(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def has_edge(self, a: int, b: int) -> bool:
        return 0 <= a < self.n and 0 <= b < self.n and bool(self.masks[a] >> b & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.masks[v].bit_count()

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise InvalidVertex(f"vertex {v!r} not in 0..{self.n - 1}")

    def _check_edge(self, e: Sequence[int]) -> Edge:
        edge = as_edge(e)
        if not self.has_edge(edge.u, edge.v):
            raise NotAnEdge(f"{tuple(edge)} is not an edge")
        return edge

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.masks == other.masks

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.masks))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={[tuple(e) for e in self.edges()]})"


# --- edits -----------------------------------------------------------------


def remove_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = g._check_edge(e)
    masks = list(g.masks)
    masks[u] &= ~(1 << v)
    masks[v] &= ~(1 << u)
    return Graph.from_masks(masks)


def add_edge(g: Graph, e: Sequence[int]) -> Graph:
    u, v = as_edge(e)
    g._check_vertex(u)
    g._check_vertex(v)
    masks = list(g.masks)
    masks[u] |= 1 << v
    masks[v] |= 1 << u
    return Graph.from_masks(masks)


def subdivide_edge(g: Graph, e: Sequence[int]) -> Graph:
    """Replace ``uv`` by the path ``u, n, v``; the new vertex gets id ``n``."""
    u, v = g._check_edge(e)
    if g.n + 1 > MAX_N:
        raise CapacityExceeded(f"subdivision needs {g.n + 1} vertices")
    w = g.n
    masks = list(g.masks)
    masks[u] = masks[u] & ~(1 << v) | (1 << w)
    masks[v] = masks[v] & ~(1 << u) | (1 << w)
    masks.append((1 << u) | (1 << v))
    return Graph.from_masks(masks)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint copies of ``g`` and ``h`` plus every ``g``-``h`` edge."""
    if g.n == 0:
        raise CapacityExceeded("first join operand must be non-null")
    n = g.n + h.n
    if n > MAX_N:
        raise CapacityExceeded(f"join needs {n} vertices")
    gmask = g.full
    hmask = ((1 << h.n) - 1) << g.n
    masks = [m | hmask for m in g.masks] + [(m << g.n) | gmask for m in h.masks]
    return Graph.from_masks(masks)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    n = g.n + h.n
    if n > MAX_N:
        raise CapacityExceeded(f"union needs {n} vertices")
    return Graph.from_masks(list(g.masks) + [m << g.n for m in h.masks])


def corona(g: Graph) -> Graph:
    """Attach one pendant leaf to every vertex; the leaf of ``v`` gets id ``n + v``."""
    n = g.n
    if 2 * n > MAX_N:
        raise CapacityExceeded(f"corona needs {2 * n} vertices")
    masks = [m | (1 << (n + v)) for v, m in enumerate(g.masks)]
    masks += [1 << v for v in range(n)]
    return Graph.from_masks(masks)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """``g[X]`` with the members of ``X`` relabeled ``0..|X|-1`` in increasing order."""
    xs = sorted(set(vertices))
    if not xs:
        raise EmptySet("induced subgraph of an empty vertex set")
    for v in xs:
        g._check_vertex(v)
    index = {v: i for i, v in enumerate(xs)}
    masks = [to_mask(index[w] for w in bits(g.masks[v]) if w in index) for v in xs]
    return Graph.from_masks(masks)


# --- neighborhoods ---------------------------------------------------------


def neighborhood(g: Graph, u: int) -> frozenset[int]:
    g._check_vertex(u)
    return g.adj[u]


def closed_neighborhood(g: Graph, u: int) -> frozenset[int]:
    g._check_vertex(u)
    return g.adj[u] | {u}


def closed_neighborhood_of_set(g: Graph, xs: Iterable[int]) -> frozenset[int]:
    out: set[int] = set()
    for u in xs:
        out |= closed_neighborhood(g, u)
    return frozenset(out)


def closed_mask_of(g: Graph, mask: int) -> int:
    out = 0
    for v in bits(mask):
        out |= g.closed[v]
    return out


# --- structure -------------------------------------------------------------


def degrees(g: Graph) -> tuple[int, ...]:
    return tuple(m.bit_count() for m in g.masks)


def leaves(g: Graph) -> frozenset[int]:
    return frozenset(v for v, m in enumerate(g.masks) if m.bit_count() == 1)


def leaves_of(g: Graph, u: int) -> frozenset[int]:
    """Leaves adjacent to ``u``."""
    return frozenset(w for w in neighborhood(g, u) if g.masks[w].bit_count() == 1)


def supports(g: Graph) -> frozenset[int]:
    leaf_mask = to_mask(leaves(g))
    return frozenset(v for v, m in enumerate(g.masks) if m & leaf_mask)


def strong_supports(g: Graph) -> frozenset[int]:
    leaf_mask = to_mask(leaves(g))
    return frozenset(v for v, m in enumerate(g.masks) if (m & leaf_mask).bit_count() > 1)


def weak_supports(g: Graph) -> frozenset[int]:
    return supports(g) - strong_supports(g)


def universal_vertices(g: Graph) -> frozenset[int]:
    return frozenset(v for v, c in enumerate(g.closed) if c == g.full)


def components(g: Graph) -> list[frozenset[int]]:
    """Connected components, ordered by smallest member."""
    return [frozenset(bits(c)) for c in component_masks(g.closed, g.full)]


def component_masks(closed: Sequence[int], full: int) -> list[int]:
    out = []
    rest = full
    while rest:
        comp = frontier = rest & -rest
        while frontier:
            reach = 0
            for v in bits(frontier):
                reach |= closed[v]
            frontier = reach & ~comp
            comp |= reach
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(component_masks(g.closed, g.full)) == 1


def is_tree(g: Graph) -> bool:
    return is_connected(g) and g.m == g.n - 1


def is_hairy(g: Graph) -> bool:
    """Every vertex is a leaf or a support vertex."""
    return leaves(g) | supports(g) == frozenset(range(g.n))


def is_star(g: Graph) -> bool:
    """``K_{1,k}`` with ``k >= 2``."""
    if g.n < 3 or g.m != g.n - 1:
        return False
    return sorted(degrees(g)) == [1] * (g.n - 1) + [g.n - 1]


def is_independent(g: Graph, xs: Iterable[int]) -> bool:
    mask = to_mask(xs)
    return all(not (g.masks[v] & mask) for v in bits(mask))


@dataclass(frozen=True)
class Structure:
    degrees: tuple[int, ...]
    leaves: frozenset[int]
    supports: frozenset[int]
    strong_supports: frozenset[int]
    weak_supports: frozenset[int]
    universal_vertices: frozenset[int]
    is_connected: bool
    components: list[frozenset[int]]
    is_hairy: bool


def structural_queries(g: Graph) -> Structure:
    sup = supports(g)
    strong = strong_supports(g)
    return Structure(
        degrees=degrees(g),
        leaves=leaves(g),
        supports=sup,
        strong_supports=strong,
        weak_supports=sup - strong,
        universal_vertices=universal_vertices(g),
        is_connected=is_connected(g),
        components=components(g),
        is_hairy=is_hairy(g),
    )


# --- edge-list text format -------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    """Parse ``n`` on the first line, then one ``u v`` pair per line.

    Blank lines and ``#`` comments are ignored. Loops, repeated edges and
    out-of-range ids are rejected with the offending line number.
    """
    n = None
    seen: set[Edge] = set()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 1 or not parts[0].isdigit():
                raise MalformedInput(f"expected vertex count, got {line!r}", lineno)
            n = int(parts[0])
            if not 1 <= n <= MAX_N:
                raise MalformedInput(f"vertex count {n} outside 1..{MAX_N}", lineno)
            continue
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise MalformedInput(f"expected 'u v', got {line!r}", lineno)
        a, b = int(parts[0]), int(parts[1])
        if a >= n or b >= n:
            raise MalformedInput(f"vertex id out of range 0..{n - 1}", lineno)
        if a == b:
            raise MalformedInput(f"loop at vertex {a}", lineno)
        e = Edge.of(a, b)
        if e in seen:
            raise MalformedInput(f"duplicate edge {a} {b}", lineno)
        seen.add(e)
    if n is None:
        raise MalformedInput("empty edge list")
    return Graph(n, seen)


def format_edgelist(g: Graph) -> str:
    lines = [str(g.n)] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"
