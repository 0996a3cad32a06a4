from __future__ import annotations

import pytest
from hypothesis import given, settings

from domlab import graph as gc
from domlab.errors import (
    CapacityExceeded,
    EmptySet,
    InvalidVertex,
    MalformedInput,
    NotAnEdge,
)
from domlab.families import complete, cycle, path, star, wheel
from domlab.domination import gamma
from domlab.enumeration import is_isomorphic
from domlab.graph import Edge, Graph

from .strategies import graphs


def edge_set(g):
    return {tuple(e) for e in g.edges()}


def test_graph_rejects_bad_construction():
    with pytest.raises(CapacityExceeded):
        Graph(0)
    with pytest.raises(CapacityExceeded):
        Graph(65)
    with pytest.raises(NotAnEdge):
        Graph(3, [(1, 1)])
    with pytest.raises(InvalidVertex):
        Graph(3, [(0, 3)])


def test_repeated_edges_collapse():
    assert Graph(3, [(0, 1), (1, 0), (0, 1)]).m == 1


def test_edge_normalization():
    assert Edge.of(4, 2) == (2, 4)
    assert Edge.of(2, 4).other(2) == 4
    with pytest.raises(NotAnEdge):
        Edge.of(1, 1)


class TestRemoveEdge:
    def test_p3(self):
        assert edge_set(gc.remove_edge(path(3), (0, 1))) == {(1, 2)}

    def test_k3_gives_p3(self):
        for e in complete(3).edges():
            assert is_isomorphic(gc.remove_edge(complete(3), e), path(3))

    def test_p8_middle_edge(self):
        g = gc.remove_edge(path(8), (3, 4))
        assert is_isomorphic(g, gc.disjoint_union(path(4), path(4)))
        assert gamma(g) == 4

    def test_original_unmodified(self):
        g = path(4)
        gc.remove_edge(g, (1, 2))
        assert g.m == 3

    def test_not_an_edge(self):
        with pytest.raises(NotAnEdge):
            gc.remove_edge(path(4), (0, 2))


class TestSubdivide:
    def test_p3_gives_p4(self):
        g = gc.subdivide_edge(path(3), (0, 1))
        assert g.n == 4
        assert edge_set(g) == {(1, 2), (0, 3), (1, 3)}
        assert is_isomorphic(g, path(4))

    def test_cycle(self):
        for e in cycle(5).edges():
            assert is_isomorphic(gc.subdivide_edge(cycle(5), e), cycle(6))

    def test_triangle_subdivided(self):
        for e in complete(3).edges():
            g = gc.subdivide_edge(complete(3), e)
            assert g.n == 4
            assert gamma(g) == 2

    def test_new_vertex_is_n(self):
        g = gc.subdivide_edge(star(3), (0, 2))
        assert g.adj[4] == {0, 2}

    def test_capacity(self):
        with pytest.raises(CapacityExceeded):
            gc.subdivide_edge(path(64), (0, 1))


class TestJoinCorona:
    def test_join_null_is_identity(self):
        assert gc.join(complete(3), Graph.null()) == complete(3)

    def test_wheel(self):
        w = gc.join(Graph(1), cycle(5))
        assert w.n == 6 and w.m == 10
        assert sorted(gc.degrees(w)) == [3, 3, 3, 3, 3, 5]
        assert w == wheel(5)

    def test_join_cliques(self):
        assert gc.join(complete(3), path(2)) == complete(5)

    def test_join_capacity(self):
        with pytest.raises(CapacityExceeded):
            gc.join(complete(40), complete(30))

    def test_corona_small(self):
        assert is_isomorphic(gc.corona(Graph(1)), path(2))
        assert is_isomorphic(gc.corona(path(2)), path(4))

    def test_corona_p3(self):
        h = gc.corona(path(3))
        assert h.n == 6
        assert gc.is_hairy(h)
        assert gc.induced_subgraph(h, gc.supports(h)) == path(3)


class TestNeighborhoods:
    def test_open_and_closed(self):
        g = path(3)
        assert gc.neighborhood(g, 1) == {0, 2}
        assert gc.closed_neighborhood(g, 1) == {0, 1, 2}
        assert gc.closed_neighborhood_of_set(path(4), [0, 3]) == {0, 1, 2, 3}

    def test_invalid_vertex(self):
        with pytest.raises(InvalidVertex):
            gc.neighborhood(path(3), 3)


class TestStructure:
    def test_star(self):
        s = gc.structural_queries(star(3))
        assert s.leaves == {1, 2, 3}
        assert s.strong_supports == {0}
        assert s.universal_vertices == {0}
        assert s.is_hairy

    def test_p4(self):
        s = gc.structural_queries(path(4))
        assert s.supports == {1, 2}
        assert s.weak_supports == {1, 2}
        assert s.strong_supports == frozenset()
        assert s.is_hairy

    def test_c6(self):
        s = gc.structural_queries(cycle(6))
        assert not s.leaves and not s.supports and not s.is_hairy

    def test_components(self):
        g = gc.disjoint_union(path(3), cycle(3))
        assert gc.components(g) == [{0, 1, 2}, {3, 4, 5}]
        assert not gc.is_connected(g)


class TestInducedSubgraph:
    def test_k4(self):
        assert gc.induced_subgraph(complete(4), [0, 2, 3]) == complete(3)

    def test_p5_prefix(self):
        assert gc.induced_subgraph(path(5), [0, 1, 2]) == path(3)

    def test_errors(self):
        with pytest.raises(EmptySet):
            gc.induced_subgraph(path(3), [])
        with pytest.raises(InvalidVertex):
            gc.induced_subgraph(path(3), [5])


class TestEdgeList:
    def test_round_trip(self):
        g = cycle(5)
        assert gc.parse_edgelist(gc.format_edgelist(g)) == g

    def test_comments_and_blank_lines(self):
        assert gc.parse_edgelist("# P3\n3\n\n0 1\n1 2 # tail\n") == path(3)

    @pytest.mark.parametrize(
        "text, line",
        [
            ("3\n0 0\n", 2),
            ("3\n0 1\n1 0\n", 3),
            ("3\n0 3\n", 2),
            ("x\n", 1),
            ("3\n0 1 2\n", 2),
        ],
    )
    def test_rejects(self, text, line):
        with pytest.raises(MalformedInput) as info:
            gc.parse_edgelist(text)
        assert info.value.line == line


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=9))
def test_remove_then_add_restores(g):
    for e in g.edges():
        assert gc.add_edge(gc.remove_edge(g, e), e) == g


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=9))
def test_subdivide_sizes(g):
    for e in g.edges():
        h = gc.subdivide_edge(g, e)
        assert h.n == g.n + 1 and h.m == g.m + 1


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=9))
def test_corona_is_hairy(g):
    assert gc.is_hairy(gc.corona(g))


@settings(max_examples=40, deadline=None)
@given(graphs(min_n=1, max_n=6), graphs(min_n=1, max_n=6))
def test_join_is_complete_across(g, h):
    j = gc.join(g, h)
    assert all(j.has_edge(a, g.n + b) for a in range(g.n) for b in range(h.n))
    assert j.m == g.m + h.m + g.n * h.n


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=2, max_n=9))
def test_removal_drops_degree_sum_by_two(g):
    for e in g.edges():
        assert sum(gc.degrees(gc.remove_edge(g, e))) == sum(gc.degrees(g)) - 2


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=9))
def test_adjacency_symmetric_loop_free(g):
    for u in range(g.n):
        assert u not in g.adj[u]
        for v in g.adj[u]:
            assert u in g.adj[v]
