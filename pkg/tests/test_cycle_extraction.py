import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from critcyc.constructors import gallai_regular, hajos_chain, hj7, k_critical_of_order
from critcyc.cycle_extraction import (bounded_spanning_tree, expand_virtual_path, heavy_vertex, key_path,
                                      level_bound, level_certificate, long_cycle_critical, long_path_via_dfs,
                                      rooted_decomposition)
from critcyc.decomposition import classify_virtual_edges, is_cycle_graph, standard_tree_decomposition
from critcyc.errors import (AllZeroWeights, LevelBoundViolated, NotCritical, NotDFSTree,
                            VirtualParentEdgeOnPath)
from critcyc.graph_core import (Graph, RootedTree, complete_graph, cycle_graph, dfs_spanning_tree,
                                wheel_graph)
from critcyc.oracles import longest_cycle_exact

from conftest import CORPUS, CORPUS_IDS

Z, P, Q, K2, R, S, L2 = range(7)


def _tree(parent):
    depth = {}

    def d(v):
        if v not in depth:
            depth[v] = 0 if parent[v] == v else d(parent[v]) + 1
        return depth[v]

    for v in parent:
        d(v)
    root = next(v for v, p in parent.items() if v == p)
    return RootedTree(root, dict(parent), depth)


def _hj7_rooted():
    g = hj7()
    dec = classify_virtual_edges(g, standard_tree_decomposition(g), 4)
    root = dec.node_with_bag({Z, P, Q, K2})
    return g, rooted_decomposition(g, 4, dec, root=root)


# DFS long paths ------------------------------------------------------------------------

def test_long_path_examples():
    assert long_path_via_dfs(complete_graph(4), 4).length == 3
    assert long_path_via_dfs(gallai_regular(4, 1), 4).length >= 4
    assert long_path_via_dfs(complete_graph(5), 5).length == 4


def test_long_path_bound_on_corpus(critical):
    name, g, k = critical
    p = long_path_via_dfs(g, k)
    # length >= log n / log(k-2)  <=>  (k-2)^length >= n
    assert (k - 2) ** p.length >= g.n, name
    assert p.vertices[0] == min(g.vertices)


# level counts ---------------------------------------------------------------------------

def test_level_certificate_k4():
    g = complete_graph(4)
    rep = level_certificate(g, 4, [], dfs_spanning_tree(g, 0))
    assert rep.counts == [1, 1, 1, 1] and rep.passed


def test_level_certificate_ga13():
    g = gallai_regular(4, 1)
    assert level_certificate(g, 4, [], dfs_spanning_tree(g, 0)).passed


def test_level_certificate_star_fails():
    star = Graph(range(10), [(0, i) for i in range(1, 10)])
    rep = level_certificate(star, 4, [], dfs_spanning_tree(star, 0))
    assert rep.counts == [1, 9] and not rep.passed
    assert rep.violations[0][:2] == (1, 9)


def test_level_certificate_rejects_non_dfs_tree():
    g = complete_graph(4)
    star = _tree({0: 0, 1: 0, 2: 0, 3: 0})
    with pytest.raises(NotDFSTree):
        level_certificate(g, 4, [], star)


def test_level_bound_values():
    assert [level_bound(4, 0, j) for j in (1, 2, 3, 4)] == [1, 1, 2, 4]
    assert [level_bound(5, 2, j) for j in (1, 2, 3)] == [16, 16, 48]


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(CORPUS), st.data())
def test_level_certificates_random_roots(entry, data):
    name, make, k = entry
    g = make()
    X = data.draw(st.lists(st.sampled_from(g.vertices), unique=True, max_size=2))
    rest = g.remove_vertices(X)
    if not rest.is_connected():
        return
    root = data.draw(st.sampled_from(rest.vertices))
    assert level_certificate(g, k, X, dfs_spanning_tree(rest, root)).passed


# heavy vertex -------------------------------------------------------------------------

def test_heavy_vertex_examples():
    assert heavy_vertex(_tree({0: 0, 1: 0}), 0, {0: 0, 1: 5}, 2) == (1, 1)
    path = _tree({0: 0, 1: 0, 2: 1})
    assert heavy_vertex(path, 0, {0: 0, 1: 1, 2: 8}, 2) == (2, 2)
    with pytest.raises(AllZeroWeights):
        heavy_vertex(path, 0, {0: 0, 1: 0, 2: 0}, 2)


def test_heavy_vertex_level_violation():
    wide = _tree({0: 0, 1: 0, 2: 0, 3: 0})
    with pytest.raises(LevelBoundViolated):
        heavy_vertex(wide, 0, {1: 1}, 2)


@st.composite
def weighted_trees(draw):
    k = draw(st.integers(2, 4))
    depth = draw(st.integers(1, 8))
    parent = {0: 0}
    level = [0]
    nxt = 1
    for l in range(1, depth + 1):
        size = draw(st.integers(1, min(k ** l, 12)))
        new = []
        for _ in range(size):
            parent[nxt] = draw(st.sampled_from(level))
            new.append(nxt)
            nxt += 1
        level = new
    phi = {v: draw(st.integers(0, 1000)) for v in parent if v}
    phi[0] = 0
    if not any(phi.values()):
        phi[nxt - 1] = 1
    return _tree(parent), phi, k


@settings(max_examples=1000, deadline=None)
@given(weighted_trees())
def test_heavy_vertex_inequality(inst):
    tree, phi, k = inst
    v, l = heavy_vertex(tree, 0, phi, k)
    total = sum(phi.values())
    assert l == tree.depth[v] > 0 and phi[v] > 0
    assert k ** (2 * l) * phi[v] >= total


# rooted decompositions ----------------------------------------------------------------

@pytest.mark.parametrize("entry", CORPUS, ids=CORPUS_IDS)
def test_rooted_decomposition_invariants(entry):
    name, make, k = entry
    g = make()
    rd = rooted_decomposition(g, k)
    tree = rd.dec.tree
    assert tree.n == 1 or tree.degree(rd.root) == 1
    a, b = rd.X[rd.root]
    assert g.has_edge(a, b)
    if rd.children[rd.root]:
        assert not {a, b} & rd.dec.adhesion(rd.root, rd.children[rd.root][0])
    for t in tree.vertices:
        assert rd.w[t] > 0
        assert rd.subtree_weight[t] == rd.w[t] + sum(rd.subtree_weight[c] for c in rd.children[t])
        if t != rd.root:
            assert set(rd.X[t]) == rd.dec.adhesion(t, rd.parent[t])
        if not rd.nuclei[t].degenerate and not is_cycle_graph(rd.dec.torsos[t]):
            assert rd.w[t] == rd.nuclei[t].graph.m
    assert rd.subtree_weight[rd.root] >= g.m >= g.n


# spanning trees of G_t - x ----------------------------------------------------------------

def test_bounded_tree_type_one_side():
    g, rd = _hj7_rooted()
    t = rd.dec.node_with_bag({Z, R, S, L2})
    assert set(rd.X[t]) == {Z, L2}
    tree = bounded_spanning_tree(g, rd, t, x=Z)
    assert tree.root == L2 and set(tree.vertices) == {R, S, L2}
    # G_t - z is a triangle, so any DFS tree of it is a path
    assert tree.level_counts() == [1, 1, 1]
    assert all(c <= 4 ** l for l, c in enumerate(tree.level_counts()))


def test_bounded_tree_type_two_side():
    g, rd = _hj7_rooted()
    t = rd.dec.node_with_bag({Z, K2, L2})
    assert set(rd.X[t]) == {Z, K2}
    tree = bounded_spanning_tree(g, rd, t, x=Z)
    assert tree.root == K2 and set(tree.vertices) == {K2, R, S, L2}
    # read back in G_t, the single edge at the merged vertex becomes an edge at k2
    assert all(rd.graph_of(t).has_edge(v, p) for v, p in tree.parent.items() if v != p)
    assert sum(1 for v, p in tree.parent.items() if p == K2 and v != K2) == 1
    assert all(c <= 4 ** l for l, c in enumerate(tree.level_counts()))


def test_bounded_tree_root_rejected():
    g, rd = _hj7_rooted()
    with pytest.raises(ValueError):
        bounded_spanning_tree(g, rd, rd.root)


# expanding virtual edges -------------------------------------------------------------------

def test_expand_identity_without_virtual_edges():
    g, rd = _hj7_rooted()
    assert expand_virtual_path(g, rd, rd.root, (Z, P, K2)).vertices == (Z, P, K2)


def test_expand_through_child_bag():
    g, rd = _hj7_rooted()
    mid = rd.dec.node_with_bag({Z, K2, L2})
    out = expand_virtual_path(g, rd, mid, (K2, L2, Z))
    assert out.vertices[:2] == (K2, L2) and out.vertices[-1] == Z
    assert out.vertices[2:-1] in ((R,), (S,), (R, S), (S, R))


def test_expand_rejects_parent_edge():
    g, rd = _hj7_rooted()
    mid = rd.dec.node_with_bag({Z, K2, L2})
    with pytest.raises(VirtualParentEdgeOnPath):
        expand_virtual_path(g, rd, mid, (L2, K2, Z))


# key paths and cycles ---------------------------------------------------------------------

def test_key_path_k4():
    g = complete_graph(4)
    rd = rooted_decomposition(g, 4)
    p = key_path(g, rd, rd.root)
    assert set(p.ends) == set(rd.X[rd.root]) and p.length == 3


def test_key_path_hj7_middle():
    g, rd = _hj7_rooted()
    mid = rd.dec.node_with_bag({Z, K2, L2})
    p = key_path(g, rd, mid)
    assert set(p.ends) == {Z, K2} and p.length >= 2
    assert set(p.vertices) <= set(rd.graph_of(mid).vertices)


def test_key_path_ga13_root():
    g = gallai_regular(4, 1)
    rd = rooted_decomposition(g, 4)
    p = key_path(g, rd, rd.root).validate()
    assert set(p.ends) == set(rd.X[rd.root])


def test_long_cycle_examples():
    w5 = long_cycle_critical(wheel_graph(5), 4)
    assert longest_cycle_exact(wheel_graph(5)).length == 6
    assert 3 <= w5.length <= 6
    g = hj7()
    c = long_cycle_critical(g, 4)
    assert c.length >= 3
    ham = (Z, P, Q, K2, L2, R, S)
    assert all(g.has_edge(a, b) for a, b in zip(ham, ham[1:] + ham[:1]))
    assert longest_cycle_exact(g).length == 7
    assert longest_cycle_exact(gallai_regular(4, 1)).length >= 6


def test_long_cycle_rejects_non_critical():
    with pytest.raises(NotCritical):
        long_cycle_critical(cycle_graph(6), 3)


@pytest.mark.parametrize("entry", CORPUS, ids=CORPUS_IDS)
def test_long_cycle_corpus_sound(entry):
    name, make, k = entry
    g = make()
    c = long_cycle_critical(g, k)
    exact = longest_cycle_exact(g).length
    assert c.claimed_length <= c.length <= exact
    assert k ** (100 * c.claimed_length) >= g.n


@pytest.mark.parametrize("g,k", [(hajos_chain(4, 3), 4), (hajos_chain(5, 3), 5), (gallai_regular(4, 2), 4),
                                 (k_critical_of_order(4, 9), 4), (k_critical_of_order(5, 11), 5)],
                         ids=["chain4x3", "chain5x3", "GA31", "crit4n9", "crit5n11"])
def test_long_cycle_from_every_leaf_root(g, k):
    dec = classify_virtual_edges(g, standard_tree_decomposition(g), k)
    leaves = [t for t in dec.tree.vertices if dec.tree.degree(t) <= 1]
    for r in leaves:
        rd = rooted_decomposition(g, k, dec, root=r)
        c = long_cycle_critical(g, k, verify=False, rdec=rd)
        assert c.length >= 3 and c.trace
