"""Text grammar for graph constructions.

Compact terms (no spaces)::

    p7 c9 k5 s4 e3 k2,3       path, cycle, complete, star K_{1,n}, empty, K_{m,n}
    path(7) cycle(9) complete(5) star(4) complete_bipartite(2,3)
    corona(T)  join(T,T)  null  g6=<graph6>

Command words (as given to ``construct``)::

    path 7 | cycle 9 | complete 5 | star 4 | complete_bipartite 2 3
    corona <words or term>
    gt <T1> <T2> u=<id> v=<id> t=<k>
    bm <r>:<T>:<s,...>;...;bridges=<i>.<a>-<j>.<b>,...
"""

from __future__ import annotations

import re
from typing import Sequence

from . import families as fam
from . import graph as gc
from .enumeration import parse_graph6
from .errors import DomlabError, SpecInvalid
from .graph import Graph

_SHORT = re.compile(r"([pckse])(\d+)(?:,(\d+))?")
_NAMED = {
    "path": fam.path,
    "cycle": fam.cycle,
    "complete": fam.complete,
    "star": fam.star,
    "empty": fam.empty,
    "complete_bipartite": fam.complete_bipartite,
}


class _TermParser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0

    def fail(self, msg: str) -> SpecInvalid:
        return SpecInvalid("term syntax", f"{msg} at offset {self.pos} in {self.text!r}")

    def eat(self, ch: str) -> None:
        if self.text[self.pos:self.pos + 1] != ch:
            raise self.fail(f"expected {ch!r}")
        self.pos += 1

    def ident(self) -> str:
        m = re.compile(r"[A-Za-z_][A-Za-z_0-9]*").match(self.text, self.pos)
        if not m:
            raise self.fail("expected a name")
        self.pos = m.end()
        return m.group()

    def number(self) -> int:
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            raise self.fail("expected a number")
        self.pos = m.end()
        return int(m.group())

    def term(self, allow_null: bool = False) -> Graph:
        if self.text.startswith("g6=", self.pos):
            end = self.pos + 3
            while end < len(self.text) and self.text[end] not in ",)":
                end += 1
            g = parse_graph6(self.text[self.pos + 3:end])
            self.pos = end
            return g
        m = _SHORT.match(self.text, self.pos)
        if m and (m.end() == len(self.text) or self.text[m.end()] in ",)"):
            self.pos = m.end()
            kind, a, b = m.group(1), int(m.group(2)), m.group(3)
            if b is not None:
                if kind != "k":
                    raise self.fail("only k takes two sizes")
                return fam.complete_bipartite(a, int(b))
            return {"p": fam.path, "c": fam.cycle, "k": fam.complete, "s": fam.star, "e": fam.empty}[kind](a)
        name = self.ident()
        if name == "null":
            if not allow_null:
                raise self.fail("null graph only allowed as join's second operand")
            return Graph.null()
        self.eat("(")
        if name == "corona":
            g = gc.corona(self.term())
        elif name == "join":
            left = self.term()
            self.eat(",")
            g = gc.join(left, self.term(allow_null=True))
        elif name in _NAMED:
            args = [self.number()]
            while self.text[self.pos:self.pos + 1] == ",":
                self.pos += 1
                args.append(self.number())
            g = _NAMED[name](*args)
        else:
            raise self.fail(f"unknown constructor {name!r}")
        self.eat(")")
        return g


def parse_term(text: str) -> Graph:
    p = _TermParser(text.strip())
    g = p.term()
    if p.pos != len(p.text):
        raise p.fail("trailing characters")
    return g


def _keyvals(words: Sequence[str], keys: set[str]) -> dict[str, int]:
    out = {}
    for w in words:
        k, sep, v = w.partition("=")
        if not sep or k not in keys or not v.lstrip("-").isdigit():
            raise SpecInvalid("gt syntax", f"bad parameter {w!r}")
        out[k] = int(v)
    missing = keys - out.keys()
    if missing:
        raise SpecInvalid("gt syntax", f"missing {', '.join(sorted(missing))}")
    return out


def parse_bm(text: str) -> fam.BmSpec:
    blocks = []
    bridges = []
    for item in filter(None, (s.strip() for s in text.split(";"))):
        if item.startswith("bridges="):
            for pair in filter(None, item[len("bridges="):].split(",")):
                m = re.fullmatch(r"(\d+)\.(\d+)-(\d+)\.(\d+)", pair.strip())
                if not m:
                    raise SpecInvalid("bm syntax", f"bad bridge {pair!r}")
                i, a, j, b = map(int, m.groups())
                bridges.append(((i, a), (j, b)))
            continue
        parts = item.split(":")
        if len(parts) != 3 or not parts[0].isdigit():
            raise SpecInvalid("bm syntax", f"block {item!r} is not r:term:s")
        s_ids = [x for x in parts[2].split(",") if x]
        if not all(x.isdigit() for x in s_ids):
            raise SpecInvalid("bm syntax", f"bad S list {parts[2]!r}")
        blocks.append(fam.BmBlock(int(parts[0]), parse_term(parts[1]), frozenset(map(int, s_ids))))
    return fam.BmSpec(tuple(blocks), tuple(bridges))


def construct(words: Sequence[str]) -> Graph:
    """Build the graph described by command words such as ``["corona", "path", "3"]``."""
    if not words:
        raise SpecInvalid("construct syntax", "empty spec")
    head, rest = words[0], list(words[1:])
    try:
        if head in _NAMED and rest:
            if not all(w.isdigit() for w in rest):
                raise SpecInvalid(f"{head} syntax", "sizes must be integers")
            return _NAMED[head](*map(int, rest))
        if head == "corona" and rest:
            return gc.corona(construct(rest))
        if head == "join" and len(rest) == 2:
            return gc.join(parse_term(rest[0]), _TermParser(rest[1]).term(allow_null=True))
        if head == "gt":
            if len(rest) != 5:
                raise SpecInvalid("gt syntax", "gt <h1> <h2> u=<id> v=<id> t=<k>")
            kv = _keyvals(rest[2:], {"u", "v", "t"})
            spec = fam.GtSpec(parse_term(rest[0]), parse_term(rest[1]), kv["u"], kv["v"], kv["t"])
            return fam.build_gt(spec)
        if head == "bm":
            return fam.build_bm(parse_bm(" ".join(rest)))
        if not rest:
            return parse_term(head)
    except SpecInvalid:
        raise
    except DomlabError as exc:
        raise SpecInvalid(type(exc).__name__, str(exc)) from exc
    raise SpecInvalid("construct syntax", f"cannot parse {' '.join(words)!r}")
