"""Exact domination number, minimum dominating set enumeration and EPN.

All searches work on closed-neighborhood bitmasks. The core scheme picks
an undominated vertex with the fewest candidate dominators and branches on
each vertex of its closed neighborhood, pruning with a coverage bound::

    |partial| + ceil(undominated / best single-vertex gain) >= incumbent

Disconnected graphs are solved one component at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import InvalidVertex, VertexNotInSet
from .graph import Graph, bits, closed_mask_of, component_masks, remove_edge, to_mask


@dataclass(frozen=True)
class DominationCertificate:
    gamma: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class GammaFamily:
    """All minimum dominating sets, each a sorted tuple, in lexicographic order."""

    gamma: int
    sets: tuple[tuple[int, ...], ...]

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(to_mask(d) for d in self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def __iter__(self):
        return iter(self.sets)


def _greedy(closed: Sequence[int], universe: int) -> int:
    covered = 0
    size = 0
    while covered != universe:
        unc = universe & ~covered
        w = max(bits(universe), key=lambda v: (closed[v] & unc).bit_count())
        covered |= closed[w] & universe
        size += 1
    return size


def _min_size(closed: Sequence[int], universe: int) -> int:
    """Size of a minimum set dominating ``universe`` (a union of components)."""
    if universe & (universe - 1) == 0:
        return 1 if universe else 0
    verts = list(bits(universe))
    cl = [0] * len(closed)
    for v in verts:
        cl[v] = closed[v] & universe
    order = sorted(verts, key=lambda v: cl[v].bit_count())
    best = _greedy(cl, universe)

    def search(covered: int, size: int) -> None:
        nonlocal best
        unc = universe & ~covered
        if not unc:
            best = size
            return
        gain = max((cl[w] & unc).bit_count() for w in verts)
        if size + -(-unc.bit_count() // gain) >= best:
            return
        for v in order:
            if unc >> v & 1:
                break
        opts = sorted(bits(cl[v]), key=lambda w: -(cl[w] & unc).bit_count())
        for w in opts:
            search(covered | cl[w], size + 1)
            if size + 1 >= best:
                return

    search(0, 0)
    return best


def gamma(g: Graph) -> int:
    """Domination number, without a witness."""
    return sum(_min_size(g.closed, comp) for comp in component_masks(g.closed, g.full))


def _lex_first(closed: Sequence[int], n: int, full: int, k: int) -> int:
    """Lexicographically smallest dominating set of size ``k`` (``k`` = gamma)."""
    suffix = [0] * (n + 1)
    for v in range(n - 1, -1, -1):
        suffix[v] = suffix[v + 1] | closed[v]
    maxgain = max(c.bit_count() for c in closed)

    def search(start: int, covered: int, size: int, chosen: int) -> int | None:
        if covered == full:
            return chosen
        unc = full & ~covered
        if size + -(-unc.bit_count() // maxgain) > k:
            return None
        for v in range(start, n):
            if unc & ~suffix[v]:
                return None
            found = search(v + 1, covered | closed[v], size + 1, chosen | (1 << v))
            if found is not None:
                return found
        return None

    found = search(0, 0, 0, 0)
    assert found is not None
    return found


def domination_number(g: Graph) -> DominationCertificate:
    k = gamma(g)
    witness = _lex_first(g.closed, g.n, g.full, k)
    return DominationCertificate(k, tuple(bits(witness)))


def _enumerate(closed: Sequence[int], n: int, full: int, k: int) -> list[int]:
    """Every dominating set of size exactly ``k``; each produced once.

    Branching on the dominators of an undominated vertex, the i-th branch
    forbids the first i-1 dominators so the branches partition the sets.
    """
    out: list[int] = []
    verts = range(n)

    def search(covered: int, chosen: int, size: int, forbidden: int) -> None:
        unc = full & ~covered
        if not unc:
            out.append(chosen)
            return
        if size == k:
            return
        allowed = [closed[w] & unc if not forbidden >> w & 1 else 0 for w in verts]
        gain = max(c.bit_count() for c in allowed)
        if gain == 0 or size + -(-unc.bit_count() // gain) > k:
            return
        pick = -1
        fewest = n + 1
        for v in bits(unc):
            c = (closed[v] & ~forbidden).bit_count()
            if c < fewest:
                pick, fewest = v, c
                if c <= 1:
                    break
        if fewest == 0:
            return
        for w in bits(closed[pick] & ~forbidden):
            search(covered | closed[w], chosen | (1 << w), size + 1, forbidden)
            forbidden |= 1 << w

    search(0, 0, 0, 0)
    return out


def all_gamma_sets(g: Graph) -> GammaFamily:
    k = gamma(g)
    found = _enumerate(g.closed, g.n, g.full, k)
    sets = sorted(tuple(bits(m)) for m in found)
    return GammaFamily(k, tuple(sets))


def _check_vertices(g: Graph, xs: Iterable[int]) -> int:
    mask = 0
    for v in xs:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise InvalidVertex(f"vertex {v!r} not in 0..{g.n - 1}")
        mask |= 1 << v
    return mask


def is_dominating(g: Graph, xs: Iterable[int]) -> bool:
    return closed_mask_of(g, _check_vertices(g, xs)) == g.full


def dominates_mask(g: Graph, mask: int) -> bool:
    cov = 0
    for v in bits(mask):
        cov |= g.closed[v]
    return cov == g.full


def epn_mask(g: Graph, u: int, dmask: int) -> int:
    others = 0
    for x in bits(dmask & ~(1 << u)):
        others |= g.closed[x]
    return g.masks[u] & ~others


def epn(g: Graph, u: int, d: Iterable[int]) -> frozenset[int]:
    """External private neighbors of ``u`` with respect to ``d``."""
    dmask = _check_vertices(g, d)
    g._check_vertex(u)
    if not dmask >> u & 1:
        raise VertexNotInSet(f"{u} is not a member of the set")
    return frozenset(bits(epn_mask(g, u, dmask)))


def satisfies_teschner(g: Graph, e: Sequence[int], fam: GammaFamily | None = None) -> bool:
    """Every minimum dominating set holds exactly one end of ``e`` and the
    other end is a private neighbor of it."""
    edge = g._check_edge(e)
    if fam is None:
        fam = all_gamma_sets(g)
    for dmask in fam.masks:
        inside = dmask & edge.mask
        if inside == 0 or inside == edge.mask:
            return False
        x = inside.bit_length() - 1
        if not epn_mask(g, x, dmask) & (edge.mask ^ inside):
            return False
    return True


def is_bondage_edge(g: Graph, e: Sequence[int]) -> bool:
    return gamma(remove_edge(g, e)) > gamma(g)
