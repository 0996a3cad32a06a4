from __future__ import annotations

import pytest

from domlab import graph as gc
from domlab.domination import all_gamma_sets, epn, is_bondage_edge
from domlab.edge_classify import (
    Rank1Verdict,
    Relation,
    Verdict,
    asr_rank1_verdict,
    asr_structure_report,
    classify_graph,
    edge_profile,
    gamma_set_partition_check,
    is_strong_edge,
    is_weak_edge,
    leaf_strong_support_edges,
    sr_tree_bondage_edges,
    sr_tree_check,
)
from domlab.enumeration import all_connected_graphs, all_trees
from domlab.errors import (
    Disconnected,
    NotAnEdge,
    NotATree,
    NotSRTree,
    PreconditionGammaNotOne,
    TooSmall,
)
from domlab.families import complete, cycle, path, star, wheel
from domlab.graph import Graph


def double_star() -> Graph:
    return Graph(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


class TestEdgeProfile:
    def test_p6_middle(self):
        p = edge_profile(path(6), (2, 3))
        assert (p.gamma_removed, p.gamma_subdivided, p.relation) == (2, 3, Relation.LESS)

    def test_p8_middle(self):
        p = edge_profile(path(8), (3, 4))
        assert (p.gamma_removed, p.gamma_subdivided, p.relation) == (4, 3, Relation.GREATER)
        assert p.is_bondage

    def test_k3(self):
        for e in complete(3).edges():
            p = edge_profile(complete(3), e)
            assert (p.gamma_removed, p.gamma_subdivided, p.relation) == (1, 2, Relation.LESS)

    def test_p7_all_equal_three(self):
        g = path(7)
        for e in g.edges():
            p = edge_profile(g, e)
            assert p.gamma_removed == p.gamma_subdivided == 3

    def test_not_an_edge(self):
        with pytest.raises(NotAnEdge):
            edge_profile(path(4), (0, 2))


class TestClassify:
    @pytest.mark.parametrize(
        "g, verdict",
        [
            (path(7), Verdict.SR),
            (complete(5), Verdict.ASR),
            (path(6), Verdict.NEITHER),
            (path(2), Verdict.ASR),
            (cycle(6), Verdict.ASR),
            (cycle(7), Verdict.SR),
        ],
    )
    def test_examples(self, g, verdict):
        assert classify_graph(g).verdict is verdict

    def test_p6_has_equal_and_less(self):
        rels = {p.relation for p in classify_graph(path(6)).profiles}
        assert {Relation.LESS, Relation.EQUAL} <= rels

    def test_profiles_cover_edges(self):
        g = wheel(5)
        assert [p.edge for p in classify_graph(g).profiles] == g.edges()

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            classify_graph(Graph(4, [(0, 1), (2, 3)]))

    def test_too_small(self):
        with pytest.raises(TooSmall):
            classify_graph(Graph(1))

    def test_trichotomy_matches_recomputation(self):
        for n in range(2, 7):
            for g in all_connected_graphs(n):
                rels = [p.relation for p in classify_graph(g).profiles]
                eq = [r is Relation.EQUAL for r in rels]
                expected = Verdict.SR if all(eq) else Verdict.ASR if not any(eq) else Verdict.NEITHER
                assert classify_graph(g).verdict is expected


class TestWeakStrong:
    def test_weak_examples(self):
        assert is_weak_edge(path(6), (2, 3))
        assert not is_weak_edge(path(7), (2, 3))
        assert not is_weak_edge(path(4), (1, 2))

    def test_strong_examples(self):
        assert is_strong_edge(path(8), (3, 4))
        assert epn(path(8), 3, [1, 3, 6]) == {4}
        assert not is_strong_edge(star(3), (0, 1))
        assert not is_strong_edge(path(6), (0, 1))

    def test_shared_family(self):
        g = path(8)
        fam = all_gamma_sets(g)
        assert [is_weak_edge(g, e, fam) for e in g.edges()] == [is_weak_edge(g, e) for e in g.edges()]


class TestTreeCheck:
    def test_p7(self):
        assert sr_tree_check(path(7)).is_sr

    def test_p6_weak(self):
        c = sr_tree_check(path(6))
        assert (c.is_sr, tuple(c.edge), c.kind) == (False, (2, 3), "weak")

    def test_p2_strong(self):
        c = sr_tree_check(path(2))
        assert (c.is_sr, tuple(c.edge), c.kind) == (False, (0, 1), "strong")

    def test_not_a_tree(self):
        with pytest.raises(NotATree):
            sr_tree_check(cycle(5))

    def test_agrees_with_classification(self):
        for n in range(2, 10):
            for t in all_trees(n):
                assert sr_tree_check(t).is_sr == (classify_graph(t).verdict is Verdict.SR)


class TestTreeBondage:
    def test_star(self):
        assert sr_tree_bondage_edges(star(3)) == frozenset(star(3).edges())

    def test_p7(self):
        assert sr_tree_bondage_edges(path(7)) == frozenset()

    def test_double_star(self):
        t = double_star()
        leaf_edges = {e for e in t.edges() if e.u in gc.leaves(t) or e.v in gc.leaves(t)}
        assert len(leaf_edges) == 4
        assert sr_tree_bondage_edges(t) == leaf_edges
        assert {e for e in t.edges() if is_bondage_edge(t, e)} == leaf_edges

    def test_rejects_non_sr(self):
        with pytest.raises(NotSRTree):
            sr_tree_bondage_edges(path(6))
        assert sr_tree_bondage_edges(path(6), check=False) == leaf_strong_support_edges(path(6))

    def test_matches_direct_bondage(self):
        for n in range(2, 10):
            for t in all_trees(n):
                if sr_tree_check(t).is_sr:
                    direct = {e for e in t.edges() if is_bondage_edge(t, e)}
                    assert sr_tree_bondage_edges(t, check=False) == direct


class TestRank1:
    def test_k3(self):
        r = asr_rank1_verdict(complete(3))
        assert (r.universal_count, r.verdict) == (3, Rank1Verdict.ASR)

    def test_k3_join_c5(self):
        g = gc.join(complete(3), cycle(5))
        assert asr_rank1_verdict(g).verdict is Rank1Verdict.ASR
        assert classify_graph(g).verdict is Verdict.ASR

    def test_wheel(self):
        r = asr_rank1_verdict(wheel(5))
        assert (r.universal_count, r.verdict) == (1, Rank1Verdict.NEITHER)
        assert classify_graph(wheel(5)).verdict is Verdict.NEITHER

    def test_star(self):
        assert asr_rank1_verdict(star(4)).verdict is Rank1Verdict.SR_STAR

    def test_gamma_not_one(self):
        with pytest.raises(PreconditionGammaNotOne):
            asr_rank1_verdict(path(4))


class TestPartitionAndStructure:
    def test_partition_examples(self):
        assert gamma_set_partition_check(complete(3))
        assert gamma_set_partition_check(cycle(6))
        assert not gamma_set_partition_check(cycle(4))

    def test_k5_report(self):
        r = asr_structure_report(complete(5))
        assert (r.has_leaf, r.bondage_edges, r.partition_ok, r.insensitive) == (
            False, frozenset(), True, True)

    def test_star_report(self):
        r = asr_structure_report(star(3))
        assert r.has_leaf
        assert not r.insensitive

    def test_c6_report(self):
        r = asr_structure_report(cycle(6))
        assert (r.has_leaf, r.bondage_edges, r.partition_ok) == (False, frozenset(), True)
