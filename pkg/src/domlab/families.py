"""Named graph families, the two composite constructions, and the closed-form
domination numbers and SR/ASR verdicts known for them."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import graph as gc
from .domination import gamma
from .errors import DisconnectedResult, InvalidSize, SpecInvalid, UnknownFamily
from .graph import Graph, to_mask


def path(n: int) -> Graph:
    if n < 1:
        raise InvalidSize(f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidSize(f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    if n < 1:
        raise InvalidSize(f"complete graph needs n >= 1, got {n}")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    if n < 1:
        raise InvalidSize(f"empty graph needs n >= 1, got {n}")
    return Graph(n)


def complete_bipartite(m: int, n: int) -> Graph:
    """``K_{m,n}`` with blocks ``0..m-1`` and ``m..m+n-1``."""
    if m < 1 or n < 1:
        raise InvalidSize(f"complete bipartite needs m, n >= 1, got {m}, {n}")
    return Graph(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def star(n: int) -> Graph:
    """``K_{1,n}``; the center is vertex 0."""
    if n < 1:
        raise InvalidSize(f"star needs n >= 1 leaves, got {n}")
    return complete_bipartite(1, n)


def wheel(rim: int) -> Graph:
    return gc.join(complete(1), cycle(rim))


# --- G_t(H1, H2) -----------------------------------------------------------


@dataclass(frozen=True)
class GtSpec:
    """Two hairy graphs joined by a path ``u, x_1, ..., x_t, v``."""

    h1: Graph
    h2: Graph
    u: int
    v: int
    t: int

    def validate(self) -> None:
        if self.t < 1:
            raise SpecInvalid("t >= 1", f"t={self.t}")
        for name, h, x in (("h1", self.h1, self.u), ("h2", self.h2, self.v)):
            if not gc.is_hairy(h):
                raise SpecInvalid(f"{name} hairy")
            if not gc.is_connected(h):
                raise SpecInvalid(f"{name} connected")
            if x not in gc.supports(h):
                raise SpecInvalid(f"{'u' if name == 'h1' else 'v'} in Supp({name})", f"vertex {x}")
            if gamma(h) < 2:
                raise SpecInvalid(f"gamma({name}) >= 2")


def build_gt(spec: GtSpec) -> Graph:
    """Ids: ``h1`` block, then ``h2`` block, then ``x_1..x_t``."""
    spec.validate()
    n1, n2, t = spec.h1.n, spec.h2.n, spec.t
    base = gc.disjoint_union(gc.disjoint_union(spec.h1, spec.h2), Graph(t))
    route = [spec.u] + [n1 + n2 + i for i in range(t)] + [n1 + spec.v]
    edges = [e for e in base.edges()] + list(zip(route, route[1:]))
    return Graph(base.n, edges)


# --- B_m ---------------------------------------------------------------------


@dataclass(frozen=True)
class BmBlock:
    """Block ``K_r + h``; ``s`` lists the ``h`` vertices allowed to carry bridges."""

    r: int
    h: Graph
    s: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "s", frozenset(self.s))


@dataclass(frozen=True)
class BmSpec:
    blocks: Sequence[BmBlock]
    # ((block i, vertex of h_i), (block j, vertex of h_j)), i != j
    bridges: Sequence[tuple[tuple[int, int], tuple[int, int]]] = field(default_factory=tuple)

    @property
    def m(self) -> int:
        return len(self.blocks)

    def validate(self) -> None:
        if not self.blocks:
            raise SpecInvalid("m >= 1")
        for i, b in enumerate(self.blocks):
            if b.r < 3:
                raise SpecInvalid("r_i >= 3", f"block {i} has r={b.r}")
            if b.h.n < 1:
                raise SpecInvalid("h_i nonempty", f"block {i}")
            if any(not 0 <= x < b.h.n for x in b.s):
                raise SpecInvalid("S_i subset of V(H_i)", f"block {i}")
            if gc.closed_mask_of(b.h, to_mask(b.s)) == b.h.full:
                raise SpecInvalid("N_H[S] != V(H)", f"block {i}")
        seen = set()
        for (i, a), (j, c) in self.bridges:
            if not (0 <= i < self.m and 0 <= j < self.m) or i == j:
                raise SpecInvalid("bridge joins two distinct blocks", f"{(i, a)}-{(j, c)}")
            if a not in self.blocks[i].s or c not in self.blocks[j].s:
                raise SpecInvalid("bridge endpoints in S", f"{(i, a)}-{(j, c)}")
            key = frozenset(((i, a), (j, c)))
            if key in seen:
                raise SpecInvalid("bridges distinct", f"{(i, a)}-{(j, c)}")
            seen.add(key)


def bm_offsets(spec: BmSpec) -> list[int]:
    out, acc = [], 0
    for b in spec.blocks:
        out.append(acc)
        acc += b.r + b.h.n
    return out


def build_bm(spec: BmSpec, allow_disconnected: bool = False) -> Graph:
    """Blocks ``join(K_r, h)`` laid out in order, then the bridge edges.

    Within block ``i`` the clique takes the first ``r_i`` ids and vertex
    ``x`` of ``h_i`` sits at ``offset_i + r_i + x``.
    """
    spec.validate()
    g = None
    for b in spec.blocks:
        block = gc.join(complete(b.r), b.h)
        g = block if g is None else gc.disjoint_union(g, block)
    offs = bm_offsets(spec)
    edges = g.edges()
    for (i, a), (j, c) in spec.bridges:
        edges.append((offs[i] + spec.blocks[i].r + a, offs[j] + spec.blocks[j].r + c))
    out = Graph(g.n, edges)
    if not allow_disconnected and not gc.is_connected(out):
        raise DisconnectedResult("bridge edges leave the blocks disconnected")
    return out


# --- expected values -------------------------------------------------------


class Expected(str, enum.Enum):
    SR = "SR"
    ASR = "ASR"
    NEITHER = "NEITHER"
    UNSPECIFIED = "UNSPECIFIED"


def _ceil3(n: int) -> int:
    return -(-n // 3)


def expected_gamma(family: str, params: Any) -> int:
    """Closed-form domination number for a family instance.

    ``params`` is ``n`` for path/cycle/complete/star, ``(m, n)`` for
    complete_bipartite, the graph itself for hairy, a spec for gt/bm.
    """
    if family in ("path", "cycle"):
        return _ceil3(params)
    if family in ("complete", "star"):
        return 1
    if family == "complete_bipartite":
        m, n = params
        return 1 if min(m, n) == 1 else 2
    if family == "hairy":
        g: Graph = params
        if not gc.is_hairy(g):
            raise SpecInvalid("hairy", "graph has a vertex that is neither leaf nor support")
        if g.n == 2:
            return 1
        return len(gc.supports(g))
    if family == "bm":
        return params.m
    raise UnknownFamily(f"no closed-form domination number for {family!r}")


def expected_verdict(family: str, params: Any) -> Expected:
    """Verdict the family results promise; UNSPECIFIED where none applies."""
    if family == "path":
        n = params
        if n == 2:
            return Expected.ASR
        if n == 3 or (n >= 4 and n % 3 == 1):
            return Expected.SR
        return Expected.NEITHER if n >= 4 else Expected.UNSPECIFIED
    if family == "cycle":
        return Expected.SR if params % 3 in (1, 2) else Expected.ASR
    if family == "complete":
        if params == 2:
            return Expected.ASR
        return Expected.ASR if params >= 3 else Expected.UNSPECIFIED
    if family == "complete_bipartite":
        m, n = params
        return Expected.SR if max(m, n) > 1 else Expected.ASR
    if family == "star":
        return Expected.SR if params >= 2 else Expected.ASR
    if family == "hairy":
        g = params
        if not gc.is_hairy(g):
            return Expected.UNSPECIFIED
        return Expected.SR if g.n >= 3 else Expected.ASR
    if family == "gt":
        t = params.t
        return Expected.SR if t == 1 or t % 3 == 0 else Expected.UNSPECIFIED
    if family == "bm":
        return Expected.ASR
    raise UnknownFamily(f"no verdict known for {family!r}")
