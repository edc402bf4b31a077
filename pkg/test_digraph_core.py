#!/usr/bin/env python3
"""
Test script for digraph construction, induced subdigraphs and strong components
"""

import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings

from compspec_errors import EmptyGraph, SelfLoop, VertexOutOfRange
from digraph_core import (Digraph, delete_vertex, from_arc_list, induced_arc_count_mask,
                          induced_subdigraph, is_acyclic, is_cycle, is_strongly_connected,
                          is_strongly_connected_mask, mask_to_vertices, permute_vertices,
                          scc_decompose)
from digraph_families import gen_complete, gen_cycle, gen_infinity, gen_path
from digraph_strategies import digraphs


def to_networkx(D: Digraph) -> nx.DiGraph:
    G = nx.DiGraph()
    G.add_nodes_from(range(D.n))
    G.add_edges_from(D.arcs)
    return G


def test_rejects_self_loop():
    with pytest.raises(SelfLoop) as info:
        from_arc_list(3, [(0, 1), (2, 2)])
    assert info.value.u == 2


def test_rejects_out_of_range_vertex():
    with pytest.raises(VertexOutOfRange) as info:
        from_arc_list(3, [(0, 3)])
    assert (info.value.u, info.value.n) == (3, 3)


def test_duplicate_arcs_collapse():
    D = from_arc_list(2, [(0, 1), (0, 1), (1, 0)])
    assert D.arc_count == 2


def test_neighbor_lists_and_degrees():
    D = gen_infinity(2, 3)
    assert D.out_neighbors[0] == (1, 2)
    assert D.in_neighbors[0] == (1, 3)
    assert D.degree_pairs() == [(2, 2), (1, 1), (1, 1), (1, 1)]


def test_adjacency_matrix():
    matrix = gen_cycle(3).adjacency_matrix()
    assert np.array_equal(matrix, np.array([[0, 1, 0], [0, 0, 1], [1, 0, 0]], dtype=float))


def test_induced_subdigraph_relabels_in_order():
    D = gen_infinity(3, 3)
    sub = induced_subdigraph(D, [4, 0, 3])
    assert sub.n == 3
    assert sub.labels == (0, 3, 4)
    # 0->3, 3->4, 4->0 in D
    assert sub.arcs == frozenset({(0, 1), (1, 2), (2, 0)})


def test_induced_subdigraph_composes_labels():
    D = gen_path(5)
    inner = induced_subdigraph(induced_subdigraph(D, [1, 2, 4]), [1, 2])
    assert inner.labels == (2, 4)
    assert inner.arc_count == 0


def test_delete_vertex():
    D = delete_vertex(gen_infinity(2, 2), 0)
    assert D.n == 2
    assert D.labels == (1, 2)
    assert D.arc_count == 0
    with pytest.raises(VertexOutOfRange):
        delete_vertex(D, 5)


def test_strong_connectivity_of_empty_digraph_errors():
    with pytest.raises(EmptyGraph):
        is_strongly_connected(Digraph(0, frozenset()))


def test_predicates_on_basic_shapes():
    assert is_strongly_connected(gen_cycle(5))
    assert is_cycle(gen_cycle(5))
    assert not is_acyclic(gen_cycle(5))
    assert is_acyclic(gen_path(5))
    assert not is_strongly_connected(gen_path(5))
    assert not is_cycle(gen_complete(3))
    assert is_cycle(gen_complete(2))
    assert is_strongly_connected(Digraph(1, frozenset()))
    assert not is_cycle(Digraph(1, frozenset()))


def test_mask_helpers():
    D = gen_infinity(2, 3)
    assert mask_to_vertices(0b1011) == (0, 1, 3)
    assert is_strongly_connected_mask(D, 0b0011)
    assert not is_strongly_connected_mask(D, 0b0110)
    assert not is_strongly_connected_mask(D, 0)
    assert induced_arc_count_mask(D, 0b1111) == D.arc_count
    assert induced_arc_count_mask(D, 0b1101) == 3
    assert induced_arc_count_mask(D, 0b0110) == 0


@settings(max_examples=200, deadline=None)
@given(D=digraphs(max_n=7))
def test_scc_decomposition_matches_networkx(D):
    ours = {frozenset(comp) for comp in scc_decompose(D).components}
    theirs = {frozenset(comp) for comp in nx.strongly_connected_components(to_networkx(D))}
    assert ours == theirs


@settings(max_examples=200, deadline=None)
@given(D=digraphs(max_n=7))
def test_scc_order_is_topological(D):
    decomposition = scc_decompose(D)
    index = decomposition.component_index()
    for u, v in D.arcs:
        assert index[u] <= index[v]


@settings(max_examples=100, deadline=None)
@given(D=digraphs(max_n=6))
def test_strong_connectivity_matches_networkx(D):
    assert is_strongly_connected(D) == nx.is_strongly_connected(to_networkx(D))


@settings(max_examples=100, deadline=None)
@given(D=digraphs(min_n=2, max_n=6))
def test_permutation_preserves_structure(D):
    perm = list(reversed(range(D.n)))
    P = permute_vertices(D, perm)
    assert P.arc_count == D.arc_count
    assert nx.is_isomorphic(to_networkx(P), to_networkx(D))
    assert sorted(len(c) for c in scc_decompose(P).components) == \
        sorted(len(c) for c in scc_decompose(D).components)


def test_permute_rejects_non_permutation():
    with pytest.raises(ValueError):
        permute_vertices(gen_cycle(3), [0, 0, 1])


if __name__ == "__main__":
    pytest.main([__file__])
