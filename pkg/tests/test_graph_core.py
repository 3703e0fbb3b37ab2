import random
from collections import Counter

import networkx as nx
import pytest

from conftest import random_graph, to_nx
from tools.constructions import basic_graph
from tools.errors import MalformedInput, PreconditionViolated, SizeCapExceeded
from tools.graph_core import (
    Graph,
    add_vertex_with_neighborhood,
    build_graph,
    canonical_form,
    complement,
    delete_edge,
    delete_vertices,
    disjoint_union,
    enumerate_graphs,
    graph_from_rows,
    induced_subgraph,
    is_bipartite,
    is_clique,
    is_independent,
    masks_of_size,
    members,
    merge_vertices,
    relabel,
    vertex_set,
)


def test_build_graph_rejects_bad_edges():
    with pytest.raises(MalformedInput):
        build_graph(3, [(1, 1)])
    with pytest.raises(MalformedInput):
        build_graph(3, [(0, 3)])
    with pytest.raises(SizeCapExceeded):
        build_graph(33, [])


def test_graph_from_rows_requires_symmetry():
    assert graph_from_rows(2, [0b10, 0b01]).edges() == [(0, 1)]
    with pytest.raises(MalformedInput):
        graph_from_rows(2, [0b10, 0b00])


def test_degrees_and_edges(c5):
    assert c5.edge_count() == 5
    assert c5.edges() == [(0, 1), (0, 4), (1, 2), (2, 3), (3, 4)]
    assert all(c5.degree(v) == 2 for v in range(5))
    assert c5.degree(0, within=vertex_set([1, 2])) == 1
    assert c5.neighbors(0) == [1, 4]


def test_masks_of_size_are_increasing():
    masks = list(masks_of_size(5, 2))
    assert len(masks) == 10
    assert masks == sorted(masks)
    assert all(m.bit_count() == 2 for m in masks)
    assert list(masks_of_size(4, 0)) == [0]


def test_induced_subgraph_compacts_in_order(c5):
    sub, mapping = induced_subgraph(c5, vertex_set([0, 1, 2]))
    assert mapping == {0: 0, 1: 1, 2: 2}
    assert sub.edges() == [(0, 1), (1, 2)]
    assert delete_vertices(c5, 1 << 4).edges() == [(0, 1), (1, 2), (2, 3)]


def test_independence_and_clique_predicates(c5, diamond):
    assert is_independent(c5, vertex_set([0, 2]))
    assert not is_independent(c5, vertex_set([0, 1]))
    assert is_clique(diamond, vertex_set([0, 1, 2]))
    assert not is_clique(diamond, vertex_set([0, 2, 3]))
    assert is_independent(c5, 0) and is_clique(c5, 0)


def test_is_bipartite():
    assert is_bipartite(basic_graph("cycle", 4))
    assert not is_bipartite(basic_graph("cycle", 5))
    assert is_bipartite(Graph(0, ()))
    assert is_bipartite(basic_graph("cycle", 5), 0b01111)


def test_merge_vertices_keeps_smallest_representative():
    c4 = basic_graph("cycle", 4)
    merged, mapping = merge_vertices(c4, [vertex_set([0, 2])])
    assert mapping == {0: 0, 1: 1, 2: 0, 3: 2}
    assert merged.edges() == [(0, 1), (0, 2)]


def test_merge_vertices_preconditions():
    c4 = basic_graph("cycle", 4)
    with pytest.raises(PreconditionViolated):
        merge_vertices(c4, [vertex_set([0, 1])])
    with pytest.raises(PreconditionViolated):
        merge_vertices(c4, [vertex_set([0, 2]), vertex_set([2])])


def test_edge_and_vertex_editing(c5):
    assert delete_edge(c5, 0, 1).edge_count() == 4
    with pytest.raises(PreconditionViolated):
        delete_edge(c5, 0, 2)
    bigger = add_vertex_with_neighborhood(c5, vertex_set([0, 2]))
    assert bigger.n == 6
    assert members(bigger.adj[5]) == [0, 2]


def test_complement_and_union(c5):
    assert nx.is_isomorphic(to_nx(complement(c5)), to_nx(c5))
    triangle = basic_graph("complete", 3)
    union = disjoint_union(triangle, triangle)
    assert union.n == 6 and union.edge_count() == 6
    assert not union.has_edge(2, 3)


def test_canonical_form_is_a_class_invariant():
    rng = random.Random(7)
    for _ in range(40):
        g = random_graph(rng, rng.randint(1, 7))
        order = list(range(g.n))
        rng.shuffle(order)
        h = relabel(g, order)
        assert nx.is_isomorphic(to_nx(g), to_nx(h))
        assert canonical_form(g) == canonical_form(h)


def test_canonical_form_separates_classes():
    path = basic_graph("path", 4)
    star = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert canonical_form(path)[1] != canonical_form(star)[1]


@pytest.mark.parametrize("n", range(6))
def test_dedup_enumeration_matches_atlas(n):
    atlas = Counter(G.number_of_nodes() for G in nx.graph_atlas_g())
    graphs = list(enumerate_graphs(n, dedup=True))
    assert len(graphs) == atlas[n]
    for i, g in enumerate(graphs):
        for h in graphs[i + 1:]:
            assert not nx.is_isomorphic(to_nx(g), to_nx(h))


def test_dedup_counts():
    assert [sum(1 for _ in enumerate_graphs(n, dedup=True)) for n in range(7)] == [1, 1, 2, 4, 11, 34, 156]


@pytest.mark.slow
def test_dedup_count_order_seven():
    assert sum(1 for _ in enumerate_graphs(7, dedup=True)) == 1044


def test_labeled_enumeration():
    graphs = list(enumerate_graphs(5, dedup=False))
    assert len(graphs) == 1024
    assert len(set(graphs)) == 1024
    with pytest.raises(SizeCapExceeded):
        list(enumerate_graphs(3, dedup=False, cap=2))


def test_enumeration_caps():
    with pytest.raises(SizeCapExceeded):
        next(enumerate_graphs(9, dedup=True))
    with pytest.raises(SizeCapExceeded):
        next(enumerate_graphs(8, dedup=False))
