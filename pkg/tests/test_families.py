from __future__ import annotations

import pytest

from domlab import graph as gc
from domlab.domination import gamma
from domlab.edge_classify import Verdict, classify_graph
from domlab.enumeration import all_connected_graphs, is_isomorphic
from domlab.errors import DisconnectedResult, SpecInvalid, UnknownFamily
from domlab.families import (
    BmBlock,
    BmSpec,
    Expected,
    GtSpec,
    build_bm,
    build_gt,
    complete,
    complete_bipartite,
    cycle,
    empty,
    expected_gamma,
    expected_verdict,
    path,
    star,
    wheel,
)


class TestBasicFamilies:
    def test_sizes(self):
        assert (path(7).n, path(7).m) == (7, 6)
        assert (cycle(9).n, cycle(9).m) == (9, 9)
        assert complete(5).m == 10
        assert empty(3).m == 0
        assert complete_bipartite(2, 3).m == 6
        assert (star(4).n, star(4).m) == (5, 4)
        assert wheel(5).m == 10

    def test_star_center(self):
        assert gc.universal_vertices(star(4)) == {0}

    def test_examples(self):
        assert gamma(path(7)) == 3
        assert classify_graph(complete_bipartite(2, 3)).verdict is Verdict.SR
        assert gamma(star(4)) == 1
        assert classify_graph(star(4)).verdict is Verdict.SR


class TestExpected:
    def test_gamma_examples(self):
        assert expected_gamma("path", 8) == 3
        assert expected_gamma("complete", 6) == 1
        assert expected_gamma("hairy", gc.corona(path(3))) == 3
        assert expected_gamma("hairy", path(2)) == 1
        assert expected_gamma("complete_bipartite", (3, 3)) == 2

    def test_verdict_examples(self):
        assert expected_verdict("cycle", 9) is Expected.ASR
        assert expected_verdict("path", 10) is Expected.SR
        assert expected_verdict("complete_bipartite", (3, 3)) is Expected.SR
        assert expected_verdict("path", 2) is Expected.ASR
        assert expected_verdict("path", 6) is Expected.NEITHER

    def test_unknown(self):
        with pytest.raises(UnknownFamily):
            expected_gamma("petersen", 10)
        with pytest.raises(UnknownFamily):
            expected_verdict("petersen", 10)

    def test_agree_with_solver(self):
        cases = [("path", n, path(n)) for n in range(2, 16)]
        cases += [("cycle", n, cycle(n)) for n in range(3, 16)]
        cases += [("complete", n, complete(n)) for n in range(2, 8)]
        cases += [("star", n, star(n)) for n in range(1, 7)]
        cases += [("complete_bipartite", (a, b), complete_bipartite(a, b))
                  for a in range(1, 4) for b in range(1, 4)]
        for family, params, g in cases:
            assert gamma(g) == expected_gamma(family, params), (family, params)
            want = expected_verdict(family, params)
            if want is not Expected.UNSPECIFIED:
                assert classify_graph(g).verdict.value == want.value, (family, params)

    def test_hairy_agree_with_solver(self):
        for n in range(2, 7):
            for g in all_connected_graphs(n):
                if gc.is_hairy(g):
                    assert gamma(g) == expected_gamma("hairy", g)


class TestGt:
    def p4(self):
        return gc.corona(complete(2))

    @pytest.mark.parametrize("t, n", [(1, 9), (3, 11), (2, 10)])
    def test_sizes(self, t, n):
        g = build_gt(GtSpec(self.p4(), self.p4(), 0, 0, t))
        assert g.n == n
        assert gc.is_tree(g)

    @pytest.mark.parametrize("t", [1, 3])
    def test_sr(self, t):
        g = build_gt(GtSpec(self.p4(), self.p4(), 0, 0, t))
        assert classify_graph(g).verdict is Verdict.SR

    def test_route_is_a_cut(self):
        spec = GtSpec(self.p4(), gc.corona(path(3)), 1, 2, 3)
        g = build_gt(spec)
        route_edges = [e for e in g.edges() if e.v >= 10]
        for e in route_edges:
            assert not gc.is_connected(gc.remove_edge(g, e))

    def test_invalid(self):
        with pytest.raises(SpecInvalid):
            build_gt(GtSpec(self.p4(), self.p4(), 0, 0, 0))
        with pytest.raises(SpecInvalid):
            build_gt(GtSpec(cycle(4), self.p4(), 0, 0, 1))
        with pytest.raises(SpecInvalid):
            build_gt(GtSpec(self.p4(), self.p4(), 2, 0, 1))
        with pytest.raises(SpecInvalid):
            build_gt(GtSpec(path(2), self.p4(), 0, 0, 1))


class TestBm:
    def block(self):
        return BmBlock(3, path(3), frozenset({0}))

    def test_two_blocks(self):
        g = build_bm(BmSpec((self.block(), self.block()), (((0, 0), (1, 0)),)))
        assert g.n == 12
        assert gamma(g) == 2
        assert classify_graph(g).verdict is Verdict.ASR

    def test_single_block(self):
        g = build_bm(BmSpec((BmBlock(3, path(3)),)))
        assert is_isomorphic(g, gc.join(complete(3), path(3)))
        assert gamma(g) == 1
        assert classify_graph(g).verdict is Verdict.ASR

    def test_s_dominating_h(self):
        bad = BmBlock(3, path(2), frozenset({0, 1}))
        with pytest.raises(SpecInvalid):
            build_bm(BmSpec((bad, bad), (((0, 0), (1, 0)),)))

    def test_small_clique(self):
        with pytest.raises(SpecInvalid):
            build_bm(BmSpec((BmBlock(2, path(3)),)))

    def test_bridge_outside_s(self):
        with pytest.raises(SpecInvalid):
            build_bm(BmSpec((self.block(), self.block()), (((0, 2), (1, 0)),)))

    def test_disconnected(self):
        spec = BmSpec((self.block(), self.block()))
        with pytest.raises(DisconnectedResult):
            build_bm(spec)
        assert build_bm(spec, allow_disconnected=True).n == 12
