import networkx as nx
import pytest
from hypothesis import assume, given, settings

from critcyc.coloring import split_two_cut
from critcyc.constructors import gallai_regular, hajos_chain, hj7
from critcyc.decomposition import (ADDITIVE, CHECKS, CONTRACTIVE, classify_virtual_edges, is_cycle_graph,
                                   nucleus, standard_tree_decomposition, torso, validate_decomposition)
from critcyc.errors import NotTwoConnected
from critcyc.graph_core import (Graph, complete_graph, cycle_graph, is_three_connected, is_two_connected,
                                norm_edge, path_graph, petersen_graph, prism_graph, wheel_graph)

from conftest import graphs, to_nx

Z, P, Q, K2, R, S, L2 = range(7)


def _classified(g, k):
    return classify_virtual_edges(g, standard_tree_decomposition(g), k)


def assert_decomposition_axioms(g, dec):
    tree = dec.tree
    assert tree.n == 1 or nx.is_tree(to_nx(tree))
    assert set().union(*dec.bags.values()) == set(g.vertices)
    for u, v in g.edges:
        assert any({u, v} <= b for b in dec.bags.values())
    for v in g.vertices:
        holding = [t for t in tree.vertices if v in dec.bags[t]]
        assert nx.is_connected(to_nx(tree.subgraph(holding)))
    for e in tree.edges:
        assert len(dec.adhesions[e]) == 2
    for t in tree.vertices:
        h = torso(dec, t)
        assert is_three_connected(h) or is_cycle_graph(h)
        adh = {norm_edge(*sorted(dec.adhesion(t, s))) for s in tree.neighbors(t)}
        for a, b in Graph(sorted(dec.bags[t]), [(x, y) for x in dec.bags[t] for y in dec.bags[t] if x < y]).edges:
            assert h.has_edge(a, b) == (g.has_edge(a, b) or (a, b) in adh)


# examples --------------------------------------------------------------------------

def test_k4_single_node():
    dec = standard_tree_decomposition(complete_graph(4))
    assert dec.nodes == (0,) and torso(dec, 0) == complete_graph(4)


def test_c5_single_cycle_node():
    dec = standard_tree_decomposition(cycle_graph(5))
    assert dec.nodes == (0,) and dec.kinds[0] == "cycle" and torso(dec, 0) == cycle_graph(5)


def test_not_two_connected():
    with pytest.raises(NotTwoConnected):
        standard_tree_decomposition(path_graph(4))


def test_hj7_decomposition():
    g = hj7()
    dec = standard_tree_decomposition(g)
    bags = sorted(sorted(b) for b in dec.bags.values())
    assert bags == [[Z, P, Q, K2], [Z, K2, L2], [Z, R, S, L2]]
    mid = dec.node_with_bag({Z, K2, L2})
    assert dec.tree.degree(mid) == 2
    adh = sorted(sorted(a) for a in dec.adhesions.values())
    assert adh == [[Z, K2], [Z, L2]]
    assert torso(dec, dec.node_with_bag({Z, P, Q, K2})) == complete_graph(4)
    mid_torso = torso(dec, mid)
    assert mid_torso.m == 3 and [e for e in mid_torso.edges if g.has_edge(*e)] == [(K2, L2)]


def test_hj7_classification():
    dec = _classified(hj7(), 4)
    k_side = dec.node_with_bag({Z, P, Q, K2})
    mid = dec.node_with_bag({Z, K2, L2})
    assert [ve.classification for ve in dec.virtual_edges[k_side]] == [ADDITIVE]
    assert {(ve.u, ve.v): ve.classification for ve in dec.virtual_edges[mid]} == {
        (Z, K2): CONTRACTIVE, (Z, L2): CONTRACTIVE}


def test_hj7_nuclei():
    g = hj7()
    dec = _classified(g, 4)
    side = nucleus(g, dec, dec.node_with_bag({Z, P, Q, K2}), 4)
    assert not side.degenerate and side.critical and side.graph == complete_graph(4)
    mid = nucleus(g, dec, dec.node_with_bag({Z, K2, L2}), 4)
    assert mid.degenerate and mid.graph.n == 1


def test_single_bag_nucleus_is_the_graph():
    g = wheel_graph(5)
    dec = _classified(g, 4)
    nu = nucleus(g, dec, 0, 4)
    assert nu.graph == g and nu.critical


def test_validate_k4_all_pass():
    rep = validate_decomposition(complete_graph(4), _classified(complete_graph(4), 4), 4)
    assert rep.all_pass


def test_validate_hj7_reports_the_triangle():
    g = hj7()
    dec = _classified(g, 4)
    rep = validate_decomposition(g, dec, 4)
    mid = dec.node_with_bag({Z, K2, L2})
    assert {t for t, _ in rep.failures()} == {mid}
    assert not rep.checks[mid]["torso_3connected"] and not rep.checks[mid]["nucleus_critical"]
    assert rep.bags[mid] == frozenset({Z, K2, L2})
    assert "cycle" in rep.notes[mid]["torso_3connected"]


@pytest.mark.parametrize("k", [4, 5])
def test_gallai_failures_sit_on_cycle_torsos(k):
    # rigid nodes pass everything; only the triangles between the K_k blocks fail
    g = gallai_regular(k, 1)
    dec = _classified(g, k)
    rep = validate_decomposition(g, dec, k)
    for t in dec.nodes:
        if dec.kinds[t] == "rigid":
            assert all(rep.checks[t].values()), (t, rep.checks[t])
        else:
            assert is_cycle_graph(torso(dec, t)) and nucleus(g, dec, t, k).degenerate


# properties ----------------------------------------------------------------------

@settings(max_examples=120, deadline=None)
@given(graphs(min_n=3, max_n=9))
def test_decomposition_axioms_random(g):
    assume(is_two_connected(g))
    assert_decomposition_axioms(g, standard_tree_decomposition(g))


@pytest.mark.parametrize("g", [petersen_graph(), prism_graph(4), wheel_graph(6), hj7(),
                               gallai_regular(4, 2), hajos_chain(4, 4)], ids=str)
def test_decomposition_axioms_named(g):
    assert_decomposition_axioms(g, standard_tree_decomposition(g))


def test_decomposition_is_deterministic():
    g = gallai_regular(4, 2)
    assert standard_tree_decomposition(g).to_json() == standard_tree_decomposition(g).to_json()


@pytest.mark.parametrize("g,k", [(hj7(), 4), (gallai_regular(4, 1), 4), (hajos_chain(4, 3), 4),
                                 (gallai_regular(5, 1), 5)], ids=["HJ7", "GA13", "chain3", "gallai51"])
def test_classification_exclusive_and_forest(g, k):
    dec = _classified(g, k)
    for t, ves in dec.virtual_edges.items():
        for ve in ves:
            assert ve.classification in (ADDITIVE, CONTRACTIVE)
            sp = split_two_cut(g, ve.u, ve.v, k)
            in1 = dec.bags[t] <= set(sp.G1.vertices)
            in2 = dec.bags[t] <= set(sp.G2.vertices)
            assert in1 != in2
            assert (ve.classification == ADDITIVE) == in1
        nu = nucleus(g, dec, t, k)
        assert nu.forest
        if not nu.degenerate:
            assert nu.critical
            assert torso(dec, t).m <= 3 * nu.graph.m


def test_validation_report_lists_every_check():
    g = hj7()
    rep = validate_decomposition(g, _classified(g, 4), 4)
    assert all(set(c) == set(CHECKS) for c in rep.checks.values())
