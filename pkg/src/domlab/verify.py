"""Registry of exhaustive theorem checks.

Each entry enumerates a finite family of instances, re-derives the claim
for every instance with the exact solver, and reports violations. Claim
strings are our own one-line statements of what is being checked.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable

from . import families as fam
from . import graph as gc
from .domination import GammaFamily, all_gamma_sets, epn_mask, gamma, satisfies_teschner
from .edge_classify import (
    GraphVerdict,
    Verdict,
    asr_rank1_verdict,
    classify_graph,
    edge_profile,
    gamma_set_partition_check,
    leaf_strong_support_edges,
    sr_tree_check,
)
from .enumeration import (
    MAX_CONNECTED_N,
    MAX_TREE_N,
    all_connected_graphs,
    all_trees,
    env_cap,
    to_graph6,
)
from .errors import UnknownTheoremId
from .graph import Graph, bits
from .oracles import naive_connected_graphs, naive_gamma_sets, prufer_trees


@dataclass
class Scope:
    max_tree_n: int | None = None
    max_graph_n: int | None = None


@dataclass
class TheoremResult:
    theorem_id: str
    claim: str
    scope: str
    instances_checked: int
    violations: list[str] = field(default_factory=list)
    witnesses: list[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "theorem_id": self.theorem_id,
            "claim": self.claim,
            "scope": self.scope,
            "instances_checked": self.instances_checked,
            "violations": self.violations,
            "witnesses": self.witnesses,
            "passed": self.passed,
        }


@dataclass
class VerifyReport:
    results: list[TheoremResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self) -> dict:
        return {"passed": self.passed, "theorems": [r.to_dict() for r in self.results]}

    def table(self) -> str:
        rows = [("theorem", "scope", "instances", "violations", "status")]
        for r in self.results:
            rows.append((r.theorem_id, r.scope, str(r.instances_checked),
                         str(len(r.violations)), "PASS" if r.passed else "FAIL"))
        widths = [max(len(row[i]) for row in rows) for i in range(5)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
        for r in self.results:
            for v in r.violations[:5]:
                lines.append(f"  {r.theorem_id}: {v}")
            for w in r.witnesses:
                lines.append(f"  {r.theorem_id} witness: {w}")
        return "\n".join(lines)


class Context:
    """Per-run memo of minimum-dominating-set families and verdicts."""

    def __init__(self) -> None:
        self._fams: dict[Graph, GammaFamily] = {}
        self._verdicts: dict[Graph, GraphVerdict] = {}

    def fam(self, g: Graph) -> GammaFamily:
        if g not in self._fams:
            self._fams[g] = all_gamma_sets(g)
        return self._fams[g]

    def verdict(self, g: Graph) -> GraphVerdict:
        if g not in self._verdicts:
            self._verdicts[g] = classify_graph(g, self.fam(g))
        return self._verdicts[g]


def connected_upto(lo: int, hi: int):
    for n in range(lo, hi + 1):
        yield from all_connected_graphs(n)


def trees_upto(lo: int, hi: int):
    for n in range(lo, hi + 1):
        yield from all_trees(n)


@dataclass(frozen=True)
class Theorem:
    theorem_id: str
    claim: str
    run: Callable[[Context, Scope, "Theorem"], TheoremResult]


def _graph_n(scope: Scope, default: int) -> int:
    n = default if scope.max_graph_n is None else scope.max_graph_n
    return min(n, env_cap(MAX_CONNECTED_N))


def _tree_n(scope: Scope, default: int) -> int:
    n = default if scope.max_tree_n is None else scope.max_tree_n
    return min(n, env_cap(MAX_TREE_N))


def _g6(g: Graph) -> str:
    return to_graph6(g)


# --- checks -------------------------------------------------------------------


def _path_classes(ctx, scope, th):
    res = TheoremResult(th.theorem_id, th.claim, "paths 2<=n<=30", 0)
    for n in range(2, 31):
        got = classify_graph(fam.path(n)).verdict.value
        want = "ASR" if n == 2 else "SR" if n == 3 or n % 3 == 1 else "NEITHER"
        res.instances_checked += 1
        if got != want:
            res.violations.append(f"P{n}: {got}, expected {want}")
    return res


def _cycle_classes(ctx, scope, th):
    res = TheoremResult(th.theorem_id, th.claim, "cycles 3<=n<=30", 0)
    for n in range(3, 31):
        got = classify_graph(fam.cycle(n)).verdict.value
        want = "SR" if n % 3 in (1, 2) else "ASR"
        res.instances_checked += 1
        if got != want:
            res.violations.append(f"C{n}: {got}, expected {want}")
    return res


def _gamma_formula(ctx, scope, th):
    res = TheoremResult(th.theorem_id, th.claim, "paths 1..40, cycles 3..40", 0)
    for name, build, lo in (("P", fam.path, 1), ("C", fam.cycle, 3)):
        for n in range(lo, 41):
            got = gamma(build(n))
            res.instances_checked += 1
            if got != -(-n // 3):
                res.violations.append(f"{name}{n}: gamma {got}, expected {-(-n // 3)}")
    return res


def _complete_examples(ctx, scope, th):
    res = TheoremResult(th.theorem_id, th.claim, "K_n 3..9, K_{m,n} 1..6", 0)
    for n in range(3, 10):
        res.instances_checked += 1
        got = classify_graph(fam.complete(n)).verdict
        if got is not Verdict.ASR:
            res.violations.append(f"K{n}: {got.value}")
    for m in range(1, 7):
        for n in range(1, 7):
            if max(m, n) == 1:
                continue
            res.instances_checked += 1
            got = classify_graph(fam.complete_bipartite(m, n)).verdict
            if got is not Verdict.SR:
                res.violations.append(f"K{m},{n}: {got.value}")
    return res


def _intro_profiles(ctx, scope, th):
    res = TheoremResult(th.theorem_id, th.claim, "P6, P7, P8, K3", 0)
    checks = [
        ("P6 v3v4", fam.path(6), [(2, 3)], (2, 3)),
        ("P6 v1v2", fam.path(6), [(0, 1)], (3, 3)),
        ("P8 v4v5", fam.path(8), [(3, 4)], (4, 3)),
        ("P8 v3v4", fam.path(8), [(2, 3)], (3, 3)),
        ("P7 all", fam.path(7), fam.path(7).edges(), (3, 3)),
        ("K3 all", fam.complete(3), fam.complete(3).edges(), (1, 2)),
    ]
    for label, g, edges, want in checks:
        for e in edges:
            p = edge_profile(g, e)
            res.instances_checked += 1
            if (p.gamma_removed, p.gamma_subdivided) != want:
                res.violations.append(f"{label} {tuple(e)}: {(p.gamma_removed, p.gamma_subdivided)}")
    return res


def _bounds(ctx, scope, th):
    hi = _graph_n(scope, 8)
    res = TheoremResult(th.theorem_id, th.claim, f"connected 2<=n<={hi}", 0)
    for g in connected_upto(2, hi):
        for p in ctx.verdict(g).profiles:
            res.instances_checked += 1
            k = p.gamma
            if not (k <= p.gamma_removed <= k + 1 and k <= p.gamma_subdivided <= k + 1):
                res.violations.append(f"{_g6(g)} {tuple(p.edge)}")
    return res


def _teschner(ctx, scope, th):
    hi = _graph_n(scope, 7)
    res = TheoremResult(th.theorem_id, th.claim, f"connected 2<=n<={hi}", 0)
    for g in connected_upto(2, hi):
        f = ctx.fam(g)
        for e in g.edges():
            res.instances_checked += 1
            bond = gamma(gc.remove_edge(g, e)) > f.gamma
            if bond != satisfies_teschner(g, e, f):
                res.violations.append(f"{_g6(g)} {tuple(e)}: bondage={bond}")
    return res


def _hairy_sr(ctx, scope, th):
    hi = _graph_n(scope, 8)
    res = TheoremResult(th.theorem_id, th.claim, f"hairy connected 3<=n<={hi}; coronas of n<=4", 0)
    subjects = [g for g in connected_upto(3, hi) if gc.is_hairy(g)]
    subjects += [gc.corona(g) for g in connected_upto(2, min(4, hi))]
    for g in subjects:
        res.instances_checked += 1
        v = ctx.verdict(g).verdict
        if v is not Verdict.SR:
            res.violations.append(f"{_g6(g)}: {v.value}")
    return res


def _strong_support(ctx, scope, th):
    hi = _graph_n(scope, 7)
    res = TheoremResult(th.theorem_id, th.claim, f"connected 3<=n<={hi}", 0)
    for g in connected_upto(3, hi):
        lv = gc.leaves(g)
        strong = gc.strong_supports(g)
        sup = gc.supports(g)
        for p in ctx.verdict(g).profiles:
            u, v = p.edge
            k = p.gamma
            if (u in strong and v in lv) or (v in strong and u in lv):
                res.instances_checked += 1
                if not (p.gamma_removed == k + 1 == p.gamma_subdivided):
                    res.violations.append(f"{_g6(g)} {(u, v)} leaf edge: {p.gamma_removed},{p.gamma_subdivided}")
            if u in sup and v in sup:
                res.instances_checked += 1
                if not (p.gamma_removed == k == p.gamma_subdivided):
                    res.violations.append(f"{_g6(g)} {(u, v)} support edge: {p.gamma_removed},{p.gamma_subdivided}")
    return res


def _sr_tree_char(ctx, scope, th):
    hi = _tree_n(scope, 12)
    res = TheoremResult(th.theorem_id, th.claim, f"trees 2<=n<={hi}", 0)
    for t in trees_upto(2, hi):
        res.instances_checked += 1
        brute = ctx.verdict(t).verdict is Verdict.SR
        if brute != sr_tree_check(t, ctx.fam(t)).is_sr:
            res.violations.append(f"{_g6(t)}: brute SR={brute}")
    return res


def _sr_tree_bondage(ctx, scope, th):
    hi = _tree_n(scope, 12)
    res = TheoremResult(th.theorem_id, th.claim, f"SR-trees 2<=n<={hi}", 0)
    for t in trees_upto(2, hi):
        verdict = ctx.verdict(t)
        if verdict.verdict is not Verdict.SR:
            continue
        res.instances_checked += 1
        bond = {p.edge for p in verdict.profiles if p.is_bondage}
        if bond != set(leaf_strong_support_edges(t)):
            res.violations.append(f"{_g6(t)}: bondage edges differ")
        keep = {p.edge for p in verdict.profiles if p.gamma_removed == p.gamma}
        lv, weak = gc.leaves(t), gc.weak_supports(t)
        restated = {e for e in t.edges()
                    if (e.u not in lv and e.v not in lv) or e.u in weak or e.v in weak}
        if keep != restated:
            res.violations.append(f"{_g6(t)}: gamma-preserving edges differ")
    return res


def _asr_gamma1(ctx, scope, th):
    hi = _graph_n(scope, 7)
    res = TheoremResult(th.theorem_id, th.claim, f"connected 3<=n<={hi}, gamma=1", 0)
    for g in connected_upto(3, hi):
        if ctx.fam(g).gamma != 1:
            continue
        res.instances_checked += 1
        v = ctx.verdict(g).verdict
        u = len(gc.universal_vertices(g))
        if (v is Verdict.ASR) != (u >= 3):
            res.violations.append(f"{_g6(g)}: {v.value} with {u} universal")
        if u in (1, 2) and not gc.is_star(g) and v is not Verdict.NEITHER:
            res.violations.append(f"{_g6(g)}: {v.value}, expected NEITHER")
        if asr_rank1_verdict(g).verdict.value not in (v.value, "SR_star"):
            res.violations.append(f"{_g6(g)}: rank-1 shortcut disagrees")
    return res


def _asr_structure(ctx, scope, th):
    hi = _graph_n(scope, 8)
    res = TheoremResult(th.theorem_id, th.claim, f"ASR among connected 3<=n<={hi}", 0)
    for g in connected_upto(3, hi):
        if ctx.verdict(g).verdict is not Verdict.ASR:
            continue
        res.instances_checked += 1
        f = ctx.fam(g)
        if gc.leaves(g):
            res.violations.append(f"{_g6(g)}: has a leaf")
        if any(p.is_bondage for p in ctx.verdict(g).profiles):
            res.violations.append(f"{_g6(g)}: has a bondage edge")
        if not gamma_set_partition_check(g, f):
            res.violations.append(f"{_g6(g)}: partition check fails")
        if not all(gc.is_independent(g, d) for d in f.sets):
            res.violations.append(f"{_g6(g)}: dependent gamma-set")
    return res


def _converse_witness(ctx, scope, th):
    hi = _graph_n(scope, 8)
    res = TheoremResult(th.theorem_id, th.claim, f"connected 3<=n<={hi}", 0)
    # The smallest witness is P3; also report the first one with gamma >= 2.
    need_any, need_multi = True, True
    for g in connected_upto(3, hi):
        res.instances_checked += 1
        if ctx.verdict(g).verdict is Verdict.ASR or not gamma_set_partition_check(g, ctx.fam(g)):
            continue
        if need_any or (need_multi and ctx.fam(g).gamma >= 2):
            res.witnesses.append(_g6(g))
            need_multi = need_multi and ctx.fam(g).gamma < 2
            need_any = False
        if not (need_any or need_multi):
            break
    if not res.witnesses:
        res.violations.append("no non-ASR graph passes the partition check")
    return res


GT_HAIRY = {
    "corona(k2)": lambda: gc.corona(fam.complete(2)),
    "corona(p3)": lambda: gc.corona(fam.path(3)),
    "corona(k3)": lambda: gc.corona(fam.complete(3)),
}


def gt_specs(ts=(1, 3, 6)):
    for n1, b1 in GT_HAIRY.items():
        for n2, b2 in GT_HAIRY.items():
            h1, h2 = b1(), b2()
            for t in ts:
                for u in sorted(gc.supports(h1)):
                    for v in sorted(gc.supports(h2)):
                        yield f"{n1} {n2} u={u} v={v} t={t}", fam.GtSpec(h1, h2, u, v, t)


def _gt_theorem(ctx, scope, th):
    res = TheoremResult(th.theorem_id, th.claim, "h in corona(K2|P3|K3), t in {1,3,6}", 0)
    for label, spec in gt_specs():
        res.instances_checked += 1
        v = classify_graph(fam.build_gt(spec)).verdict
        if v is not Verdict.SR:
            res.violations.append(f"{label}: {v.value}")
    return res


BM_PIECES = [
    fam.path(3),
    fam.empty(2),
    fam.path(2),
    fam.empty(1),
    fam.empty(3),
    fam.path(4),
    fam.cycle(4),
]


def bm_specs(count: int = 24, max_n: int = 18, seed: int = 20240229) -> list[fam.BmSpec]:
    """Random valid B_m specs with ``m`` in 1..3, each connected and within ``max_n``."""
    rng = random.Random(seed)
    out: list[fam.BmSpec] = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 100000:
            raise RuntimeError("could not generate enough B_m specs")
        m = 1 + len(out) % 3
        blocks = []
        for _ in range(m):
            h = rng.choice(BM_PIECES)
            r = rng.choice((3, 3, 4))
            full = h.full
            subsets = [
                s for s in range(1 << h.n)
                if gc.closed_mask_of(h, s) != full
            ]
            s = rng.choice(subsets)
            blocks.append(fam.BmBlock(r, h, frozenset(bits(s))))
        if sum(b.r + b.h.n for b in blocks) > max_n:
            continue
        pairs = [
            ((i, a), (j, b))
            for i in range(m) for j in range(i + 1, m)
            for a in sorted(blocks[i].s) for b in sorted(blocks[j].s)
        ]
        chosen = [p for p in pairs if rng.random() < 0.5]
        spec = fam.BmSpec(tuple(blocks), tuple(chosen))
        g = fam.build_bm(spec, allow_disconnected=True)
        if not gc.is_connected(g):
            continue
        out.append(spec)
    return out


def _bm_proposition(ctx, scope, th):
    res = TheoremResult(th.theorem_id, th.claim, "24 random specs, m in 1..3, n<=18", 0)
    for spec in bm_specs():
        g = fam.build_bm(spec)
        res.instances_checked += 1
        v = classify_graph(g)
        k = v.profiles[0].gamma
        if v.verdict is not Verdict.ASR or k != spec.m:
            res.violations.append(f"{_g6(g)}: {v.verdict.value}, gamma={k}, m={spec.m}")
    return res


def _no_asr_tree(ctx, scope, th):
    hi = _tree_n(scope, 12)
    res = TheoremResult(th.theorem_id, th.claim, f"trees 3<=n<={hi}", 0)
    for t in trees_upto(3, hi):
        res.instances_checked += 1
        if ctx.verdict(t).verdict is Verdict.ASR:
            res.violations.append(f"{_g6(t)}")
    return res


def _solver_oracle(ctx, scope, th):
    gn = _graph_n(scope, 6)
    tn = _tree_n(scope, 9)
    res = TheoremResult(th.theorem_id, th.claim, f"connected n<={gn}, trees n<={tn}", 0)
    subjects = list(connected_upto(1, gn)) + list(trees_upto(1, tn))
    for g in subjects:
        res.instances_checked += 1
        k, sets = naive_gamma_sets(g)
        f = all_gamma_sets(g)
        if gamma(g) != k or f.gamma != k or f.sets != sets:
            res.violations.append(f"{_g6(g)}: solver disagrees with subset enumeration")
    return res


def _enum_counts(ctx, scope, th):
    tn = _tree_n(scope, 8)
    gn = _graph_n(scope, 6)
    res = TheoremResult(th.theorem_id, th.claim, f"trees n<={tn}, connected n<={gn}", 0)
    for n in range(1, tn + 1):
        res.instances_checked += 1
        a, b = len(list(all_trees(n))), len(prufer_trees(n))
        if a != b:
            res.violations.append(f"trees n={n}: {a} vs oracle {b}")
    for n in range(1, gn + 1):
        res.instances_checked += 1
        a, b = len(list(all_connected_graphs(n))), len(naive_connected_graphs(n))
        if a != b:
            res.violations.append(f"connected n={n}: {a} vs oracle {b}")
    return res


def _two_in_epn(ctx, scope, th):
    hi = _tree_n(scope, 10)
    res = TheoremResult(th.theorem_id, th.claim, f"trees 2<=n<={hi}", 0)
    for t in trees_upto(2, hi):
        f = ctx.fam(t)
        for p in ctx.verdict(t).profiles:
            if not p.is_bondage or p.is_strong:
                continue
            for d in f.masks:
                res.instances_checked += 1
                inside = d & p.edge.mask
                x = inside.bit_length() - 1
                far = p.edge.mask ^ inside
                if not (epn_mask(t, x, d) & t.masks[x] & ~far):
                    res.violations.append(f"{_g6(t)} {tuple(p.edge)}")
    return res


REGISTRY: dict[str, Theorem] = {
    th.theorem_id: th
    for th in [
        Theorem("path-class", "P_n is ASR for n=2, SR iff n=3 or n=1 mod 3, else neither", _path_classes),
        Theorem("cycle-class", "C_n is SR iff n=1,2 mod 3, else ASR", _cycle_classes),
        Theorem("gamma-formula", "gamma(P_n) = gamma(C_n) = ceil(n/3)", _gamma_formula),
        Theorem("complete-examples", "K_n (n>=3) is ASR; K_{m,n} with max(m,n)>1 is SR", _complete_examples),
        Theorem("intro-profiles", "removal/subdivision values for P6, P7, P8 and K3 edges", _intro_profiles),
        Theorem("bounds", "gamma <= gamma(G-e), gamma(G_e) <= gamma+1", _bounds),
        Theorem("teschner", "bondage edge <=> Teschner condition over all gamma-sets", _teschner),
        Theorem("hairy-sr", "hairy graphs on >= 3 vertices are SR", _hairy_sr),
        Theorem("strong-support", "leaf at strong support: both +1; support-support edge: both equal gamma", _strong_support),
        Theorem("sr-tree-char", "tree is SR <=> no weak and no strong edge", _sr_tree_char),
        Theorem("sr-tree-bondage", "in SR-trees, bondage <=> leaf joined to strong support", _sr_tree_bondage),
        Theorem("asr-gamma1", "gamma=1: ASR <=> at least three universal vertices", _asr_gamma1),
        Theorem("asr-structure", "ASR: no leaves, no bondage edges, gamma-sets partition V and are independent", _asr_structure),
        Theorem("converse-witness", "some non-ASR graph passes the partition check", _converse_witness),
        Theorem("gt-theorem", "G_t(H1,H2) is SR for hairy H1,H2 with gamma>=2 and t=1 or t=0 mod 3", _gt_theorem),
        Theorem("bm-proposition", "every B_m graph is ASR with domination number m", _bm_proposition),
        Theorem("no-asr-tree", "no tree on >= 3 vertices is ASR", _no_asr_tree),
        Theorem("two-in-epn", "tree bondage edge that is not strong: extra private neighbor in every gamma-set", _two_in_epn),
        Theorem("solver-oracle", "branch-and-bound gamma and gamma-sets equal subset enumeration", _solver_oracle),
        Theorem("enum-counts", "generator counts equal naive oracle counts", _enum_counts),
    ]
}


def run_verify(theorem_ids: list[str] | None = None, scope: Scope | None = None) -> VerifyReport:
    scope = scope or Scope()
    ids = theorem_ids or list(REGISTRY)
    unknown = [t for t in ids if t not in REGISTRY]
    if unknown:
        raise UnknownTheoremId(f"unknown theorem id(s): {', '.join(unknown)}")
    ctx = Context()
    results = []
    for tid in dict.fromkeys(ids):
        th = REGISTRY[tid]
        start = time.perf_counter()
        res = th.run(ctx, scope, th)
        res.seconds = time.perf_counter() - start
        results.append(res)
    return VerifyReport(results)
