"""Removal versus subdivision, edge by edge.

For an edge ``e`` of a connected graph ``G`` the domination numbers of
``G - e`` and ``G_e`` (``e`` subdivided once) each lie in
``{gamma(G), gamma(G) + 1}``. A graph is SR when the two agree on every
edge, ASR when they disagree on every edge, and NEITHER otherwise.

The minimum dominating sets of ``G`` are enumerated once per graph and
shared by every per-edge predicate.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

from . import graph as gc
from .domination import GammaFamily, all_gamma_sets, epn_mask, gamma, satisfies_teschner
from .errors import (
    Disconnected,
    NotATree,
    NotSRTree,
    PreconditionGammaNotOne,
    TooSmall,
)
from .graph import Edge, Graph, bits


class Relation(str, enum.Enum):
    LESS = "LESS"
    EQUAL = "EQUAL"
    GREATER = "GREATER"


class Verdict(str, enum.Enum):
    SR = "SR"
    ASR = "ASR"
    NEITHER = "NEITHER"


class Rank1Verdict(str, enum.Enum):
    ASR = "ASR"
    NEITHER = "NEITHER"
    SR_STAR = "SR_star"


@dataclass(frozen=True)
class EdgeProfile:
    edge: Edge
    gamma: int
    gamma_removed: int
    gamma_subdivided: int
    relation: Relation
    is_bondage: bool
    is_weak: bool
    is_strong: bool


@dataclass(frozen=True)
class GraphVerdict:
    verdict: Verdict
    profiles: tuple[EdgeProfile, ...]


@dataclass(frozen=True)
class TreeCheck:
    is_sr: bool
    edge: Edge | None = None
    kind: str | None = None  # "weak" or "strong"


@dataclass(frozen=True)
class Rank1Report:
    universal_count: int
    verdict: Rank1Verdict


@dataclass(frozen=True)
class ASRStructureReport:
    has_leaf: bool
    bondage_edges: frozenset[Edge]
    partition_ok: bool
    insensitive: bool


def _require_connected(g: Graph, min_n: int = 2) -> None:
    if g.n < min_n:
        raise TooSmall(f"need at least {min_n} vertices, got {g.n}")
    if not gc.is_connected(g):
        raise Disconnected("graph is not connected")


def _require_tree(t: Graph) -> None:
    if t.n < 2 or not gc.is_tree(t):
        raise NotATree("input is not a tree on at least 2 vertices")


def _compare(a: int, b: int) -> Relation:
    if a < b:
        return Relation.LESS
    return Relation.EQUAL if a == b else Relation.GREATER


def is_weak_edge(g: Graph, e: Sequence[int], fam: GammaFamily | None = None) -> bool:
    """No minimum dominating set meets ``e``."""
    edge = g._check_edge(e)
    if fam is None:
        fam = all_gamma_sets(g)
    return all(not d & edge.mask for d in fam.masks)


def is_strong_edge(g: Graph, e: Sequence[int], fam: GammaFamily | None = None) -> bool:
    """Teschner's condition holds, and for some minimum dominating set ``D``
    the end of ``e`` in ``D`` has the other end as its only private neighbor."""
    edge = g._check_edge(e)
    if fam is None:
        fam = all_gamma_sets(g)
    if not satisfies_teschner(g, edge, fam):
        return False
    for d in fam.masks:
        inside = d & edge.mask
        x = inside.bit_length() - 1
        if epn_mask(g, x, d) == edge.mask ^ inside:
            return True
    return False


def _profile(g: Graph, edge: Edge, base: int, fam: GammaFamily) -> EdgeProfile:
    removed = gamma(gc.remove_edge(g, edge))
    subdivided = gamma(gc.subdivide_edge(g, edge))
    return EdgeProfile(
        edge=edge,
        gamma=base,
        gamma_removed=removed,
        gamma_subdivided=subdivided,
        relation=_compare(removed, subdivided),
        is_bondage=removed > base,
        is_weak=is_weak_edge(g, edge, fam),
        is_strong=is_strong_edge(g, edge, fam),
    )


def edge_profile(g: Graph, e: Sequence[int], fam: GammaFamily | None = None) -> EdgeProfile:
    edge = g._check_edge(e)
    _require_connected(g)
    if fam is None:
        fam = all_gamma_sets(g)
    return _profile(g, edge, fam.gamma, fam)


def verdict_of(profiles: Sequence[EdgeProfile]) -> Verdict:
    if all(p.relation is Relation.EQUAL for p in profiles):
        return Verdict.SR
    if all(p.relation is not Relation.EQUAL for p in profiles):
        return Verdict.ASR
    return Verdict.NEITHER


def classify_graph(g: Graph, fam: GammaFamily | None = None) -> GraphVerdict:
    _require_connected(g)
    if fam is None:
        fam = all_gamma_sets(g)
    profiles = tuple(_profile(g, e, fam.gamma, fam) for e in g.edges())
    return GraphVerdict(verdict_of(profiles), profiles)


def sr_tree_check(t: Graph, fam: GammaFamily | None = None) -> TreeCheck:
    """A tree is SR exactly when it has neither weak nor strong edges.

    Returns the first offending edge in ``(u, v)`` order on failure.
    """
    _require_tree(t)
    if fam is None:
        fam = all_gamma_sets(t)
    for e in t.edges():
        if is_weak_edge(t, e, fam):
            return TreeCheck(False, e, "weak")
        if is_strong_edge(t, e, fam):
            return TreeCheck(False, e, "strong")
    return TreeCheck(True)


def leaf_strong_support_edges(g: Graph) -> frozenset[Edge]:
    lv = gc.leaves(g)
    strong = gc.strong_supports(g)
    return frozenset(
        e for e in g.edges() if (e.u in lv and e.v in strong) or (e.v in lv and e.u in strong)
    )


def sr_tree_bondage_edges(t: Graph, check: bool = True) -> frozenset[Edge]:
    """Bondage edges of an SR-tree: a leaf joined to a strong support."""
    _require_tree(t)
    if check and not sr_tree_check(t).is_sr:
        raise NotSRTree("tree is not SR")
    return leaf_strong_support_edges(t)


def asr_rank1_verdict(g: Graph) -> Rank1Report:
    """Verdict for a graph dominated by one vertex, read off its universal vertices."""
    _require_connected(g, 3)
    if gamma(g) != 1:
        raise PreconditionGammaNotOne("domination number is not 1")
    count = len(gc.universal_vertices(g))
    if count >= 3:
        verdict = Rank1Verdict.ASR
    elif gc.is_star(g):
        verdict = Rank1Verdict.SR_STAR
    else:
        verdict = Rank1Verdict.NEITHER
    return Rank1Report(count, verdict)


def gamma_set_partition_check(g: Graph, fam: GammaFamily | None = None) -> bool:
    """Every minimum dominating set's closed neighborhoods partition ``V``."""
    if fam is None:
        fam = all_gamma_sets(g)
    for d in fam.masks:
        cover = 0
        total = 0
        for v in bits(d):
            cover |= g.closed[v]
            total += g.closed[v].bit_count()
        if cover != g.full or total != g.n:
            return False
    return True


def bondage_edges(g: Graph) -> frozenset[Edge]:
    base = gamma(g)
    return frozenset(e for e in g.edges() if gamma(gc.remove_edge(g, e)) > base)


def asr_structure_report(g: Graph, fam: GammaFamily | None = None) -> ASRStructureReport:
    _require_connected(g, 3)
    if fam is None:
        fam = all_gamma_sets(g)
    bondage = bondage_edges(g)
    return ASRStructureReport(
        has_leaf=bool(gc.leaves(g)),
        bondage_edges=bondage,
        partition_ok=gamma_set_partition_check(g, fam),
        insensitive=not bondage,
    )
