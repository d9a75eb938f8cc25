import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critcyc.coloring import is_k_critical
from critcyc.constructors import (GallaiSpec, branching_tree, gallai_graph, gallai_regular,
                                  gallai_spec_for_tree, hajos_chain, hajos_sum, hammock_counterexample,
                                  hj7, k_critical_of_order)
from critcyc.errors import BadSelection, DegreeTooHigh, EdgeNotPresent, OverlappingVertexSets, UnsupportedOrder
from critcyc.graph_core import Graph, complete_graph, connectivity, wheel_graph
from critcyc.oracles import longest_path_exact, max_linkage_bruteforce

from conftest import to_nx


def _iso(a, b):
    return nx.is_isomorphic(to_nx(a), to_nx(b))


# Hajós sums -----------------------------------------------------------------------

def test_hj7_counts_and_labels():
    g = hj7()
    assert (g.n, g.m) == (7, 11)
    assert [g.label(v) for v in g.vertices] == ["z", "p", "q", "k2", "r", "s", "l2"]
    assert g.has_edge(3, 6)
    assert is_k_critical(g, 4).is_critical


def test_hajos_sum_errors():
    K, L = complete_graph(4), complete_graph(4, start=4)
    with pytest.raises(OverlappingVertexSets):
        hajos_sum(K, (0, 1), complete_graph(4), (0, 1))
    with pytest.raises(EdgeNotPresent):
        hajos_sum(K.remove_edge(0, 1), (0, 1), L, (4, 5))
    with pytest.raises(EdgeNotPresent):
        hajos_sum(K, (0, 1), L, (4, 9))


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([complete_graph(4), wheel_graph(5), hj7()]),
       st.sampled_from([complete_graph(4), wheel_graph(5), hj7()]), st.data())
def test_hajos_sum_counts_and_criticality(K, L, data):
    L = L.relabel({v: v + 50 for v in L.vertices})
    ke = data.draw(st.sampled_from(K.edges))
    le = data.draw(st.sampled_from(L.edges))
    if data.draw(st.booleans()):
        ke = ke[::-1]
    g = hajos_sum(K, ke, L, le)
    assert g.n == K.n + L.n - 1 and g.m == K.m + L.m - 1
    assert is_k_critical(g, 4).is_critical


def test_hajos_sum_k5_pairs_stay_critical():
    K, L = complete_graph(5), complete_graph(5, start=5)
    assert is_k_critical(hajos_sum(K, (0, 1), L, (5, 6)), 5).is_critical


def test_hajos_chain_counts():
    for length in (1, 2, 3):
        g = hajos_chain(4, length)
        assert g.n == 4 + 3 * (length - 1) and g.m == 6 + 5 * (length - 1)
        assert is_k_critical(g, 4).is_critical


# Gallai's construction --------------------------------------------------------------

def test_gallai_single_node_is_k4():
    assert gallai_regular(4, 0) == complete_graph(4)


def test_gallai_single_edge_is_hj7():
    spec = gallai_spec_for_tree(4, Graph([0, 1], [(0, 1)]))
    assert _iso(gallai_graph(spec), hj7())


def test_gallai_claw_is_ga13():
    g = gallai_regular(4, 1)
    assert (g.n, g.m) == (13, 21)
    assert g.label(0) == "x_0"
    assert is_k_critical(g, 4).is_critical


def test_gallai_order_formula():
    for k, h in [(4, 0), (4, 1), (4, 2), (5, 1), (5, 2), (6, 1)]:
        tree = branching_tree(k, h)
        assert gallai_regular(k, h).n == 1 + tree.n * (k - 1)
        assert max((tree.degree(t) for t in tree.vertices), default=0) <= k - 1


def test_gallai_5_2_order():
    # root with k-1 children, every other internal node with k-2 children: 1 + 4 + 12 nodes
    tree = branching_tree(5, 2)
    assert tree.n == 17
    assert gallai_regular(5, 2).n == 69


def test_gallai_spec_rejections():
    star = Graph(range(5), [(0, i) for i in range(1, 5)])
    spec = GallaiSpec(4, star, {t: complete_graph(4) for t in range(5)}, {t: 0 for t in range(5)},
                      {(0, i): i for i in range(1, 5)} | {(i, 0): 1 for i in range(1, 5)})
    with pytest.raises(DegreeTooHigh):
        gallai_graph(spec)
    edge = Graph([0, 1], [(0, 1)])
    bad = GallaiSpec(4, edge, {0: complete_graph(4), 1: complete_graph(4)}, {0: 0, 1: 0},
                     {(0, 1): 0, (1, 0): 1})
    with pytest.raises(BadSelection):
        gallai_graph(bad)


@pytest.mark.parametrize("k,h", [(4, 1), (5, 1), (4, 2)])
def test_gallai_path_bound_avoiding_hub(k, h):
    g = gallai_regular(k, h)
    tree = branching_tree(k, h)
    # every H_t is K_k, so a tree path R allows (k-1)|R| vertices; the longest tree path has 2h+1 nodes
    longest_tree_path = nx.diameter(to_nx(tree)) + 1 if tree.n > 1 else 1
    cap = (k - 1) * longest_tree_path
    assert longest_path_exact(g.remove_vertices([0])).length + 1 <= cap


def test_gallai_4_2_is_critical():
    assert is_k_critical(gallai_regular(4, 2), 4).is_critical


# the linkage counterexample ----------------------------------------------------------------

@pytest.mark.parametrize("t", [2, 3])
def test_hammock_counterexample_shape(t):
    g, X, Y = hammock_counterexample(t)
    assert g.n == t * t + 3
    assert connectivity(g)[0] == 3
    assert X[1] == Y[1] and g.label(X[0]) == "x" and g.label(Y[0]) == "y"


@pytest.mark.parametrize("t", [2, 3])
def test_hammock_counterexample_linkage_bound(t):
    g, X, Y = hammock_counterexample(t)
    best, P1, P2 = max_linkage_bruteforce(g, X, Y)
    assert best == 3 * t - 1
    assert not set(P1) & set(P2)


# orders ------------------------------------------------------------------------------

def test_k_critical_of_order_examples():
    assert k_critical_of_order(4, 4) == complete_graph(4)
    w = k_critical_of_order(4, 6)
    assert _iso(w, wheel_graph(5))
    g7 = k_critical_of_order(4, 7)
    assert g7.n == 7 and is_k_critical(g7, 4).is_critical


@pytest.mark.parametrize("k,n", [(4, 8), (4, 9), (4, 10), (5, 5), (5, 7), (5, 9), (5, 11)])
def test_k_critical_of_order_is_verified(k, n):
    g = k_critical_of_order(k, n)
    assert g.n == n and is_k_critical(g, k).is_critical


def test_k_critical_of_order_gaps():
    with pytest.raises(UnsupportedOrder):
        k_critical_of_order(4, 5)
    with pytest.raises(UnsupportedOrder):
        k_critical_of_order(5, 12)
