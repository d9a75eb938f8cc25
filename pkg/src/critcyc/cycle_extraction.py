"""Long paths and cycles in critical graphs.

DFS gives a path of length log n / log(k-2).  The cycle comes from a
recursion over a rooted standard tree-decomposition: every node t gets a pair
X_t and a path joining it inside G_t, built from a long cycle of the torso,
a long linkage through the torso into the heaviest child, or a walk down a
spanning tree with few vertices per level to a heavy child.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from .coloring import DEFAULT_BUDGET as COLORING_BUDGET, is_k_critical, two_cut_type
from .decomposition import (NucleusResult, StandardDecomposition, classify_virtual_edges,
                            is_cycle_graph, nucleus, standard_tree_decomposition)
from .errors import (AllZeroWeights, CritCycError, LevelBoundViolated, NotCritical, NotDFSTree,
                     TypeClassificationFailed, VirtualParentEdgeOnPath)
from .flows import DisjointPaths, menger_paths
from .graph_core import (CycleWitness, Graph, PathWitness, RootedTree, dfs_spanning_tree,
                         norm_edge)
from .linkage import (Hammock, Linkage, cycle_to_linkage_or_hammock, find_linkage,  # noqa: F401
                      hammock_to_nonsingular, long_cycle_3connected, nonsingular_to_linkage)
from .oracles import longest_path_exact


def _min_power(base: int, target: int) -> int:
    """Smallest h >= 0 with base**h >= target."""
    h = 0
    while base ** h < target:
        h += 1
    return h


# DFS paths and level counting ------------------------------------------------------

def long_path_via_dfs(g: Graph, k: int) -> PathWitness:
    """Root-to-deepest path of the DFS tree rooted at the smallest vertex.

    The claim is the least h with (k-2)^h >= n; a shorter path certifies that
    G is not k-critical.
    """
    if k < 4:
        raise ValueError("the DFS bound needs k >= 4")
    tree = dfs_spanning_tree(g, min(g.vertices))
    deepest = min(tree.vertices, key=lambda v: (-tree.depth[v], v))
    path = tuple(reversed(tree.path_to_root(deepest)))
    need = _min_power(k - 2, g.n)
    if len(path) - 1 < need:
        raise NotCritical(f"DFS path {len(path) - 1} < log n/log(k-2); G is not {k}-critical")
    trace = [f"DFS from {path[0]}, depth {len(path) - 1}; (k-2)^{need} >= n = {g.n}"]
    return PathWitness(path, g, need, trace).validate()


@dataclass
class LevelReport:
    counts: List[int]
    bounds: List[int]
    violations: List[Tuple[int, int, int]]  # (level, count, bound)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"counts": self.counts, "bounds": self.bounds, "passed": self.passed,
                "violations": [list(v) for v in self.violations]}


def level_bound(k: int, s: int, j: int) -> int:
    """Most vertices a DFS tree of G-X can have at depth j >= 1 when G is k-critical, |X| = s."""
    if j == 1:
        return (k - 1) ** s
    return (k - 2) ** (j - 2) * (k - 1) ** s


def level_certificate(g: Graph, k: int, X, tree: RootedTree) -> LevelReport:
    """Compare level sizes of a DFS tree of G-X with the criticality bound.

    A violation is a certificate that G is not k-critical.
    """
    rest = g.remove_vertices(X)
    if not tree.is_dfs_tree_of(rest):
        raise NotDFSTree("tree is not a DFS spanning tree of G - X")
    s = len(set(X))
    counts = tree.level_counts()
    bounds = [1] + [level_bound(k, s, j) for j in range(1, len(counts))]
    bad = [(j, c, b) for j, (c, b) in enumerate(zip(counts, bounds)) if c > b]
    return LevelReport(counts, bounds, bad)


def heavy_vertex(tree: RootedTree, root: int, phi: Mapping[int, int], k: int) -> Tuple[int, int]:
    """A vertex v at depth l with phi(v) > 0 and k^(2l) phi(v) >= phi(tree).

    Takes the first depth l whose layer carries at least phi(tree)/2^l and the
    heaviest vertex there.
    """
    if k < 2:
        raise ValueError("k must be at least 2")
    if root != tree.root:
        raise ValueError("root does not match the tree")
    if phi.get(root, 0) != 0:
        raise ValueError("phi(root) must be 0")
    total = sum(phi.get(v, 0) for v in tree.vertices)
    if total <= 0:
        raise AllZeroWeights("phi vanishes on the tree")
    counts = tree.level_counts()
    for l, c in enumerate(counts):
        if c > k ** l:
            raise LevelBoundViolated(f"{c} vertices at depth {l} > k^{l}")
    layers: Dict[int, List[int]] = {}
    for v in tree.vertices:
        layers.setdefault(tree.depth[v], []).append(v)
    for l in range(1, len(counts)):
        if 2 ** l * sum(phi.get(v, 0) for v in layers[l]) >= total:
            v = min(layers[l], key=lambda u: (-phi.get(u, 0), u))
            assert phi[v] > 0 and k ** (2 * l) * phi[v] >= total
            return v, l
    raise AssertionError("no layer carries its share of the weight")


# rooted decomposition -----------------------------------------------------------

@dataclass
class RootedDecomposition:
    g: Graph
    k: int
    dec: StandardDecomposition
    nuclei: Dict[int, NucleusResult]
    root: int
    parent: Dict[int, Optional[int]]
    children: Dict[int, List[int]]
    X: Dict[int, Tuple[int, int]]
    w: Dict[int, int]
    subtree_weight: Dict[int, int] = field(default_factory=dict)
    _gt: Dict[int, Graph] = field(default_factory=dict, repr=False)

    def subtree(self, t: int) -> List[int]:
        out, stack = [], [t]
        while stack:
            s = stack.pop()
            out.append(s)
            stack.extend(self.children[s])
        return sorted(out)

    def graph_of(self, t: int) -> Graph:
        """G_t: the subgraph of G induced by the bags of the subtree at t."""
        if t not in self._gt:
            vs = set()
            for s in self.subtree(t):
                vs |= self.dec.bags[s]
            self._gt[t] = self.g.subgraph(vs)
        return self._gt[t]

    def child_at(self, t: int, pair) -> int:
        """The child of t whose adhesion is ``pair``."""
        pair = frozenset(pair)
        for c in self.children[t]:
            if self.dec.adhesion(t, c) == pair:
                return c
        raise KeyError(f"no child of {t} with adhesion {sorted(pair)}")

    def to_json(self) -> dict:
        return {"root": self.root,
                "nodes": [{"id": t, "parent": self.parent[t], "X": list(self.X[t]), "w": self.w[t],
                           "subtree_weight": self.subtree_weight[t]} for t in self.dec.nodes]}


def node_weight(dec: StandardDecomposition, nu: NucleusResult, t: int) -> int:
    """|E(N_t)|; cycle torsos weigh their length and other degenerate nodes their torso size."""
    h = dec.torsos[t]
    if is_cycle_graph(h):
        return h.n
    if not nu.degenerate:
        return nu.graph.m
    return h.m


def rooted_decomposition(g: Graph, k: int, dec: Optional[StandardDecomposition] = None,
                         root: Optional[int] = None) -> RootedDecomposition:
    if dec is None:
        dec = standard_tree_decomposition(g)
    if any(ve.classification is None for ves in dec.virtual_edges.values() for ve in ves):
        dec = classify_virtual_edges(g, dec, k)
    nuclei = {t: nucleus(g, dec, t, k, verify=False) for t in dec.nodes}
    tree = dec.tree
    if root is None:
        leaves = [t for t in tree.vertices if tree.degree(t) <= 1]
        solid = [t for t in leaves if not is_cycle_graph(dec.torsos[t])]
        root = min(solid or leaves)
    if tree.n > 1 and tree.degree(root) != 1:
        raise ValueError(f"root {root} is not a leaf of the decomposition tree")
    rt = dec.rooted(root)
    parent = {t: (None if t == root else rt.parent[t]) for t in tree.vertices}
    children = {t: sorted(c for c in tree.vertices if parent[c] == t) for t in tree.vertices}
    X = {}
    for t in tree.vertices:
        if t != root:
            X[t] = tuple(sorted(dec.adhesion(t, parent[t])))
    avoid = dec.adhesion(root, children[root][0]) if children[root] else frozenset()
    bag_edges = [e for e in g.subgraph(dec.bags[root]).edges if not set(e) & avoid]
    if not bag_edges:
        raise CritCycError(f"root bag {sorted(dec.bags[root])} has no edge missing the child adhesion")
    X[root] = bag_edges[0]
    w = {t: node_weight(dec, nuclei[t], t) for t in tree.vertices}
    rd = RootedDecomposition(g, k, dec, nuclei, root, parent, children, X, w)
    for t in sorted(tree.vertices, key=lambda s: -rt.depth[s]):
        rd.subtree_weight[t] = w[t] + sum(rd.subtree_weight[c] for c in children[t])
    return rd


# spanning trees with few vertices per level ---------------------------------------------

def bounded_spanning_tree(g: Graph, rdec: RootedDecomposition, t: int,
                          x: Optional[int] = None) -> RootedTree:
    """Spanning tree of G_t - x rooted at x' with at most k^l vertices at depth l.

    If G_t + xx' is the critical graph this is a DFS tree of G_t - x; if
    G_t / xx' is, it is a DFS tree of the contraction rooted at the merged
    vertex that leaves it along a single edge at x', read back in G_t.
    """
    if t == rdec.root:
        raise ValueError("the root has no parent adhesion")
    a, b = rdec.X[t]
    if x is None:
        x = a
    if x not in (a, b):
        raise ValueError(f"{x} is not in X_t = {rdec.X[t]}")
    xp = b if x == a else a
    gt = rdec.graph_of(t)
    k = rdec.k
    same, distinct = two_cut_type(gt, x, xp, k - 1)
    if same and not distinct:
        tree = dfs_spanning_tree(gt.remove_vertices([x]), xp)
    elif distinct and not same:
        h, z = gt.contract(x, xp)
        w = min(v for v in gt.neighbors(xp) if v != x)
        r = dfs_spanning_tree(h, z, first_edge=(z, w))
        parent = {v: (xp if p == z else p) for v, p in r.parent.items() if v != z}
        parent[xp] = xp
        depth = {v: d for v, d in r.depth.items() if v != z}
        depth[xp] = 0
        tree = RootedTree(xp, parent, depth)
    else:
        raise TypeClassificationFailed(f"G_{t} is not exclusively one type at {rdec.X[t]}")
    for l, c in enumerate(tree.level_counts()):
        if c > k ** l:
            raise LevelBoundViolated(f"{c} vertices at depth {l} > k^{l} in the tree of G_{t} - {x}")
    return tree


# expanding virtual edges ---------------------------------------------------------

def _through_child(rdec: RootedDecomposition, child: int, u: int, v: int) -> Tuple[int, ...]:
    """A u-v path in G_child through the least bag vertex other than u, v."""
    gc = rdec.graph_of(child)
    w = min(rdec.dec.bags[child] - {u, v})
    twin = max(gc.vertices) + 1
    h = Graph(list(gc.vertices) + [twin], list(gc.edges) + [(twin, y) for y in gc.neighbors(w)])
    res = menger_paths(h, {u, v}, {w, twin}, 2, strict=True)
    if not isinstance(res, DisjointPaths):
        raise CritCycError(f"no two paths from {{{u},{v}}} to bag vertex {w} in G_{child}")
    p, q = res.paths
    if p[0] != u:
        p, q = q, p
    p = tuple(w if y == twin else y for y in p)
    q = tuple(w if y == twin else y for y in q)
    return p + tuple(reversed(q))[1:]


def expand_virtual_path(g: Graph, rdec: RootedDecomposition, t: int, torso_path) -> PathWitness:
    """Replace every virtual edge uv of a torso path by a u-v path through the child at uv."""
    seq = tuple(torso_path.vertices if isinstance(torso_path, PathWitness) else torso_path)
    out = [seq[0]]
    for u, v in zip(seq, seq[1:]):
        if g.has_edge(u, v):
            out.append(v)
            continue
        if t != rdec.root and set(rdec.X[t]) == {u, v}:
            raise VirtualParentEdgeOnPath(f"edge {u}{v} is the virtual edge to the parent of {t}")
        child = rdec.child_at(t, (u, v))
        out.extend(_through_child(rdec, child, u, v)[1:])
    return PathWitness(out, rdec.graph_of(t)).validate()


# the recursion ---------------------------------------------------------------------

def _cycle_order(h: Graph) -> Tuple[int, ...]:
    start = min(h.vertices)
    order = [start, min(h.neighbors(start))]
    while len(order) < h.n:
        nxt = [y for y in h.neighbors(order[-1]) if y != order[-2]]
        order.append(nxt[0])
    return tuple(order)


def _walk_from(cyc: Sequence[int], a: int, not_toward: int, stop) -> Tuple[int, ...]:
    """Walk the cycle from a, away from its neighbour ``not_toward``, until a vertex in ``stop``."""
    n = len(cyc)
    i = cyc.index(a)
    step = -1 if cyc[(i + 1) % n] == not_toward else 1
    out = [a]
    while out[-1] not in stop or len(out) == 1:
        i = (i + step) % n
        out.append(cyc[i])
    return tuple(out)


def _bound_claim(rdec: RootedDecomposition, t: int) -> int:
    """Least integer c with k^(100 c) >= w(T_t)."""
    return _min_power(rdec.k ** 100, rdec.subtree_weight[t])


def _orient(path: Sequence[int], start: int) -> Tuple[int, ...]:
    return tuple(path) if path[0] == start else tuple(reversed(path))


def _base_path(rdec: RootedDecomposition, t: int, trace: List[str]) -> Tuple[int, ...]:
    h = rdec.dec.torsos[t]
    x, xp = rdec.X[t]
    if is_cycle_graph(h):
        cyc = _cycle_order(h)
        path = _walk_from(cyc, x, xp, {xp})
        trace.append(f"node {t}: base case on the torso cycle, torso path {len(path) - 1}")
        return path
    c = long_cycle_3connected(h)
    cyc = c.vertices
    res = menger_paths(h, {x, xp}, set(cyc), 2, strict=True)
    if not isinstance(res, DisjointPaths):
        raise CritCycError(f"torso at {t} lacks two paths from X_t to its long cycle")
    p, q = res.paths
    if p[0] != x:
        p, q = q, p
    w1, w2 = p[-1], q[-1]
    n = len(cyc)
    i, j = cyc.index(w1), cyc.index(w2)
    fwd = tuple(cyc[(i + s) % n] for s in range((j - i) % n + 1))
    bwd = tuple(cyc[(i - s) % n] for s in range((i - j) % n + 1))
    arc = fwd if len(fwd) >= len(bwd) else bwd
    path = p + arc[1:] + tuple(reversed(q))[1:]
    trace.append(f"node {t}: base case, torso cycle {c.length}, torso path {len(path) - 1}")
    return path


def _torso_linkage(rdec: RootedDecomposition, t: int, child: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """Two disjoint torso paths from X_t to X_child, the first starting at min X_t."""
    h = rdec.dec.torsos[t]
    X, Y = rdec.X[t], rdec.X[child]
    if is_cycle_graph(h):
        cyc = _cycle_order(h)
        return _walk_from(cyc, X[0], X[1], set(Y)), _walk_from(cyc, X[1], X[0], set(Y))
    lk = find_linkage(h, X, Y, longest_path_exact(h))
    return lk.P1, lk.P2


def key_path(g: Graph, rdec: RootedDecomposition, t: int,
             trace: Optional[List[str]] = None) -> PathWitness:
    """A path of G_t joining the two vertices of X_t, claimed >= log w(T_t)/(100 log k)."""
    trace = [] if trace is None else trace
    x, xp = rdec.X[t]
    w_t, w_T = rdec.w[t], rdec.subtree_weight[t]
    kids = rdec.children[t]
    if 5 * w_t >= w_T or not kids:
        torso_path = _base_path(rdec, t, trace)
        out = expand_virtual_path(g, rdec, t, torso_path)
    else:
        groups: Dict[int, List[int]] = {0: [], 1: [], 2: []}
        for c in kids:
            meet = rdec.dec.adhesion(t, c) & {x, xp}
            groups[0 if not meet else (1 if meet == {x} else 2)].append(c)
            if len(meet) == 2:
                raise CritCycError(f"child {c} repeats the adhesion X_{t}")
        weight = lambda cs: sum(rdec.subtree_weight[c] for c in cs)
        if 4 * weight(groups[0]) >= 3 * (w_T - w_t):
            child = min(groups[0], key=lambda c: (-rdec.subtree_weight[c], c))
            p1, p2 = _torso_linkage(rdec, t, child)
            trace.append(f"node {t}: linkage through the torso to child {child}, "
                         f"{len(p1) + len(p2) - 2} torso edges")
            inner = key_path(g, rdec, child, trace).vertices
            e1 = expand_virtual_path(g, rdec, t, p1).vertices
            e2 = expand_virtual_path(g, rdec, t, p2).vertices
            out_seq = e1 + _orient(inner, e1[-1])[1:-1] + tuple(reversed(e2))
            out = PathWitness(out_seq, rdec.graph_of(t))
        else:
            if weight(groups[2]) > weight(groups[1]):
                x, xp = xp, x
                groups[1], groups[2] = groups[2], groups[1]
            if t == rdec.root:
                raise CritCycError("the root cannot have children meeting X_r")
            phi = {}
            for c in groups[1]:
                (v,) = rdec.dec.adhesion(t, c) - {x}
                phi[v] = rdec.subtree_weight[c]
            tree = bounded_spanning_tree(g, rdec, t, x)
            v, depth = heavy_vertex(tree, xp, phi, rdec.k)
            child = rdec.child_at(t, (x, v))
            tail = tree.path_to_root(v)                      # v ... x'
            trace.append(f"node {t}: tree walk of length {depth} from {xp} to {v}, into child {child}")
            inner = _orient(key_path(g, rdec, child, trace).vertices, x)
            out = PathWitness(inner + tuple(tail[1:]), rdec.graph_of(t))
    out.validate()
    if set(out.ends) != set(rdec.X[t]):
        raise AssertionError(f"key path ends {out.ends} differ from X_{t} = {rdec.X[t]}")
    out.claimed_length = _bound_claim(rdec, t)
    out.trace = trace
    return out.validate()


def long_cycle_critical(g: Graph, k: int, verify: bool = True,
                        rdec: Optional[RootedDecomposition] = None,
                        budget: int = COLORING_BUDGET) -> CycleWitness:
    """A cycle of length >= log n/(100 log k) in a k-critical graph, from the root key path."""
    if verify:
        rep = is_k_critical(g, k, budget)
        if not rep.is_critical:
            raise NotCritical(f"input is not {k}-critical: {rep.reason}")
    if rdec is None:
        rdec = rooted_decomposition(g, k)
    total = rdec.subtree_weight[rdec.root]
    if not total >= g.m >= g.n:
        raise AssertionError(f"w(T) = {total}, |E| = {g.m}, n = {g.n} out of order")
    trace = [f"root {rdec.root}, X_r = {rdec.X[rdec.root]}, w(T) = {total}"]
    path = key_path(g, rdec, rdec.root, trace)
    a, b = path.ends
    if not g.has_edge(a, b) or path.length < 2:
        raise AssertionError("root key path does not close into a cycle")
    need = _min_power(k ** 100, g.n)
    trace.append(f"closed with edge {a}{b}; k^(100*{need}) >= n = {g.n}")
    return CycleWitness(path.vertices, g, need, trace).validate()
