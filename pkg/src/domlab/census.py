"""Per-graph census records and the ordered, optionally parallel, census run."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Iterator, Sequence

from . import graph as gc
from .domination import all_gamma_sets
from .edge_classify import classify_graph, gamma_set_partition_check
from .enumeration import CANON_MAX_N, canonical_form, parse_graph6, to_graph6
from .graph import Graph

SCHEMA = "domlab.census/1"


@dataclass(frozen=True)
class CensusFlags:
    has_leaf: bool
    partition_ok: bool
    universal_count: int


@dataclass(frozen=True)
class CensusRecord:
    graph6: str
    n: int
    m: int
    gamma: int
    verdict: str
    num_gamma_sets: int
    bondage_count: int
    weak_count: int
    strong_count: int
    flags: CensusFlags

    def to_dict(self) -> dict:
        return {"schema": SCHEMA, **asdict(self)}

    @classmethod
    def from_dict(cls, d: dict) -> "CensusRecord":
        fields = {k: v for k, v in d.items() if k != "schema"}
        fields["flags"] = CensusFlags(**fields["flags"])
        return cls(**fields)

    def field(self, name: str):
        if name.startswith("flags."):
            return getattr(self.flags, name[len("flags."):])
        return getattr(self, name)


CSV_COLUMNS = [
    "graph6", "n", "m", "gamma", "verdict", "num_gamma_sets",
    "bondage_count", "weak_count", "strong_count",
    "has_leaf", "partition_ok", "universal_count",
]


def census_record(g: Graph) -> CensusRecord:
    fam = all_gamma_sets(g)
    result = classify_graph(g, fam)
    profiles = result.profiles
    return CensusRecord(
        graph6=to_graph6(g),
        n=g.n,
        m=g.m,
        gamma=fam.gamma,
        verdict=result.verdict.value,
        num_gamma_sets=len(fam),
        bondage_count=sum(p.is_bondage for p in profiles),
        weak_count=sum(p.is_weak for p in profiles),
        strong_count=sum(p.is_strong for p in profiles),
        flags=CensusFlags(
            has_leaf=bool(gc.leaves(g)),
            partition_ok=gamma_set_partition_check(g, fam),
            universal_count=len(gc.universal_vertices(g)),
        ),
    )


def verify_record(rec: CensusRecord) -> bool:
    """Re-derive every field from the record's graph6 alone."""
    return census_record(parse_graph6(rec.graph6)) == rec


def _order_key(g: Graph) -> tuple:
    if g.n <= CANON_MAX_N:
        return (0, canonical_form(g))
    return (1, to_graph6(g).encode())


def _work(g6: str) -> tuple[tuple, CensusRecord]:
    g = parse_graph6(g6)
    return _order_key(g), census_record(g)


def run_census(graphs: Iterable[Graph], jobs: int = 1) -> list[CensusRecord]:
    """Records in canonical-form order, independent of ``jobs``."""
    codes = [to_graph6(g) for g in graphs]
    if jobs > 1 and len(codes) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            pairs = list(pool.map(_work, codes, chunksize=max(1, len(codes) // (8 * jobs))))
    else:
        pairs = [_work(c) for c in codes]
    pairs.sort(key=lambda p: p[0])
    return [rec for _, rec in pairs]


def matches(rec: CensusRecord, filters: Sequence[tuple[str, str]]) -> bool:
    for key, want in filters:
        got = rec.field(key)
        if isinstance(got, bool):
            ok = str(got).lower() == want.lower()
        else:
            ok = str(got) == want
        if not ok:
            return False
    return True


def summary(records: Sequence[CensusRecord]) -> dict:
    tally = Counter(r.verdict for r in records)
    return {
        "schema": SCHEMA,
        "summary": {
            "total": len(records),
            "SR": tally.get("SR", 0),
            "ASR": tally.get("ASR", 0),
            "NEITHER": tally.get("NEITHER", 0),
        },
    }


def render_jsonl(records: Sequence[CensusRecord]) -> Iterator[str]:
    for rec in records:
        yield json.dumps(rec.to_dict(), sort_keys=True)
    yield json.dumps(summary(records), sort_keys=True)


def render_csv(records: Sequence[CensusRecord]) -> Iterator[str]:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        f = rec.flags
        writer.writerow([
            rec.graph6, rec.n, rec.m, rec.gamma, rec.verdict, rec.num_gamma_sets,
            rec.bondage_count, rec.weak_count, rec.strong_count,
            f.has_leaf, f.partition_ok, f.universal_count,
        ])
    yield from buf.getvalue().splitlines()
    s = summary(records)["summary"]
    yield "# " + " ".join(f"{k}={v}" for k, v in s.items())
