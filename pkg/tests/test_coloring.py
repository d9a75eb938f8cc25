from itertools import product

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critcyc.coloring import (chromatic_number, find_coloring, is_k_critical, is_proper, split_two_cut,
                              two_cut_type)
from critcyc.constructors import hajos_sum, hj7
from critcyc.errors import BudgetExceeded, InfeasiblePin, NotACut
from critcyc.graph_core import Graph, complete_graph, cycle_graph, petersen_graph, wheel_graph

from conftest import graphs, to_nx


def _colorable_bruteforce(g, c, pins=None):
    pins = pins or {}
    free = [v for v in g.vertices if v not in pins]
    for cols in product(range(1, c + 1), repeat=len(free)):
        a = dict(pins)
        a.update(zip(free, cols))
        if all(a[u] != a[v] for u, v in g.edges):
            return True
    return False


def test_find_coloring_examples():
    assert find_coloring(cycle_graph(5), 2) is None
    col = find_coloring(cycle_graph(5), 3)
    assert col is not None and col.is_proper_for(cycle_graph(5))
    assert find_coloring(complete_graph(4), 3) is None


def test_find_coloring_bad_pins():
    with pytest.raises(InfeasiblePin):
        find_coloring(complete_graph(3), 3, pins={0: 1, 1: 1})
    with pytest.raises(InfeasiblePin):
        find_coloring(complete_graph(3), 3, pins={0: 4})


def test_find_coloring_respects_pins():
    col = find_coloring(cycle_graph(6), 3, pins={0: 2, 3: 2})
    assert col.assignment[0] == 2 and col.assignment[3] == 2


def test_find_coloring_budget():
    with pytest.raises(BudgetExceeded):
        find_coloring(complete_graph(9), 8, budget=3)


def test_chromatic_numbers():
    assert chromatic_number(petersen_graph()) == 3
    assert chromatic_number(wheel_graph(5)) == 4
    assert chromatic_number(hj7()) == 4


@settings(max_examples=150)
@given(graphs(max_n=7), st.integers(1, 4), st.data())
def test_find_coloring_matches_bruteforce(g, c, data):
    pins = {}
    if g.n and data.draw(st.booleans()):
        v = data.draw(st.sampled_from(g.vertices))
        pins[v] = data.draw(st.integers(1, c))
    col = find_coloring(g, c, pins=pins)
    assert (col is not None) == _colorable_bruteforce(g, c, pins)
    if col is not None:
        assert is_proper(g, col.assignment, c)
        assert all(col.assignment[v] == k for v, k in pins.items())


@settings(max_examples=80)
@given(graphs(max_n=8))
def test_chromatic_number_matches_networkx_bound(g):
    chi = chromatic_number(g)
    # greedy upper bound from networkx, clique lower bound
    greedy = max(nx.coloring.greedy_color(to_nx(g)).values(), default=-1) + 1
    clique = max((len(c) for c in nx.find_cliques(to_nx(g))), default=0)
    assert clique <= chi <= greedy


def test_is_k_critical_examples():
    rep = is_k_critical(complete_graph(4), 4)
    assert rep.is_critical and len(rep.per_edge) == 6
    assert is_k_critical(wheel_graph(5), 4).is_critical
    assert not is_k_critical(cycle_graph(6), 3).is_critical


def test_criticality_certificates_check_out(critical):
    name, g, k = critical
    rep = is_k_critical(g, k)
    assert rep.is_critical, name
    assert rep.chromatic_witness.is_proper_for(g)
    for (u, v), col in rep.per_edge.items():
        assert is_proper(g.remove_edge(u, v), col.assignment, k - 1)


def test_not_critical_when_an_edge_is_redundant():
    g = complete_graph(4).add_edge(0, 4).add_edge(1, 4)
    rep = is_k_critical(g, 4)
    assert not rep.is_critical


def test_two_cut_type_examples():
    k4e = complete_graph(4).remove_edge(0, 1)
    assert two_cut_type(k4e, 0, 1, 3) == (True, False)
    assert two_cut_type(Graph([0, 1], [(0, 1)]), 0, 1, 3) == (False, True)
    assert two_cut_type(Graph([0, 1], []), 0, 1, 3) == (True, True)


def test_split_hj7_at_z_k2():
    g = hj7()
    z, k2, l2 = 0, 3, 6
    sp = split_two_cut(g, z, k2, 4)
    assert set(sp.G1.vertices) == {0, 1, 2, 3}
    assert set(sp.G2.vertices) == {0, 3, 4, 5, 6}
    assert nx.is_isomorphic(to_nx(sp.G1_plus), to_nx(complete_graph(4)))
    assert nx.is_isomorphic(to_nx(sp.G2_contract), to_nx(complete_graph(4)))
    sp2 = split_two_cut(g, z, l2, 4)
    assert set(sp2.G1.vertices) == {0, 4, 5, 6}


def test_split_not_a_cut():
    with pytest.raises(NotACut):
        split_two_cut(complete_graph(4), 0, 1, 4)


def _hajos_pairs():
    k4, w5, k5 = complete_graph(4), wheel_graph(5), complete_graph(5)
    return [(k4, w5, 4), (w5, w5, 4), (hj7(), k4, 4), (k5, k5, 5)]


@pytest.mark.parametrize("K,L,k", _hajos_pairs())
def test_split_properties_on_hajos_sums(K, L, k):
    L = L.relabel({v: v + 100 for v in L.vertices})
    g = hajos_sum(K, K.edges[0], L, L.edges[-1])
    assert is_k_critical(g, k).is_critical
    for u, v in [(a, b) for a, b in _pairs(g) if len(g.components((a, b))) == 2 and not g.has_edge(a, b)]:
        sp = split_two_cut(g, u, v, k)
        assert sp.glue() == g
        assert two_cut_type(sp.G1, u, v, k - 1) == (True, False)
        assert two_cut_type(sp.G2, u, v, k - 1) == (False, True)
        assert not set(sp.G2.neighbors(u)) & set(sp.G2.neighbors(v))
        assert set(sp.G1.vertices) & set(sp.G2.vertices) == {u, v}


def _pairs(g):
    vs = g.vertices
    return [(vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs))]
