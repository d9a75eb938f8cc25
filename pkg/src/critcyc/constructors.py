"""Generators: Hajós sums, Gallai's tree construction, the linkage counterexample."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Mapping, Optional, Tuple

from .errors import BadSelection, DegreeTooHigh, EdgeNotPresent, OverlappingVertexSets, UnsupportedOrder
from .graph_core import Graph, complete_graph, cycle_graph, join, norm_edge


def hajos_sum(K: Graph, k_edge: Tuple[int, int], L: Graph, l_edge: Tuple[int, int]) -> Graph:
    """Delete k1k2 and l1l2, identify l1 with k1, add k2l2.

    Vertex ids of K and L are kept, except l1 which becomes k1.
    """
    k1, k2 = k_edge
    l1, l2 = l_edge
    if set(K.vertices) & set(L.vertices):
        raise OverlappingVertexSets("K and L share vertices")
    if not K.has_edge(k1, k2):
        raise EdgeNotPresent(f"{k_edge} is not an edge of K")
    if not L.has_edge(l1, l2):
        raise EdgeNotPresent(f"{l_edge} is not an edge of L")
    kk, ll = norm_edge(k1, k2), norm_edge(l1, l2)
    edges = [e for e in K.edges if e != kk]
    for a, b in L.edges:
        if (a, b) == ll:
            continue
        edges.append((k1 if a == l1 else a, k1 if b == l1 else b))
    edges.append((k2, l2))
    labels = {**{v: s for v, s in L.labels.items() if v != l1}, **K.labels}
    labels[k1] = f"{K.label(k1)}={L.label(l1)}"
    vertices = list(K.vertices) + [v for v in L.vertices if v != l1]
    return Graph(vertices, edges, labels)


HJ7_NAMES = ("z", "p", "q", "k2", "r", "s", "l2")


def hj7() -> Graph:
    """Hajós sum of two K4's: z,p,q,k2 | z,r,s,l2 | edge k2-l2 (ids 0..6 in that order)."""
    K = complete_graph(4)                    # z=0, p=1, q=2, k2=3
    L = complete_graph(4, start=4)           # l1=4 (becomes z), r=5, s=6, l2=7
    g = hajos_sum(K, (0, 3), L, (4, 7))
    g = g.relabel({0: 0, 1: 1, 2: 2, 3: 3, 5: 4, 6: 5, 7: 6})
    return Graph(g.vertices, g.edges, dict(enumerate(HJ7_NAMES)))


@dataclass
class GallaiSpec:
    k: int
    tree: Graph
    family: Dict[int, Graph]
    hub: Dict[int, int]
    selection: Dict[Tuple[int, int], int]

    def validate(self) -> None:
        for t in self.tree.vertices:
            if self.tree.degree(t) >= self.k:
                raise DegreeTooHigh(f"tree node {t} has degree {self.tree.degree(t)} >= k={self.k}")
            h, x0 = self.family[t], self.hub[t]
            chosen = []
            for s in self.tree.neighbors(t):
                v = self.selection.get((t, s))
                if v is None or v == x0 or v not in h or not h.has_edge(x0, v):
                    raise BadSelection(f"v_({t},{s})={v} is not a neighbour of x_0 in H_{t}")
                chosen.append(v)
            if len(set(chosen)) != len(chosen):
                raise BadSelection(f"repeated selection at tree node {t}")


def gallai_graph(spec: GallaiSpec) -> Graph:
    """Glue the H_t at a common x_0 and reroute x_0 v_tt', x_0 v_t't through v_tt' v_t't.

    x_0 gets id 0; the other vertices follow tree node order and then H_t order.
    """
    spec.validate()
    new_id: Dict[Tuple[int, int], int] = {}
    labels = {0: "x_0"}
    nxt = 1
    for t in spec.tree.vertices:
        x0 = spec.hub[t]
        for v in spec.family[t].vertices:
            if v == x0:
                new_id[(t, v)] = 0
            else:
                new_id[(t, v)] = nxt
                labels[nxt] = f"h{t}.{v}"
                nxt += 1
    for (t, s), v in spec.selection.items():
        labels[new_id[(t, v)]] = f"v_{{{t},{s}}}"
    dropped = set()
    for (t, s), v in spec.selection.items():
        dropped.add((t, norm_edge(spec.hub[t], v)))
    edges = []
    for t in spec.tree.vertices:
        for a, b in spec.family[t].edges:
            if (t, (a, b)) not in dropped:
                edges.append((new_id[(t, a)], new_id[(t, b)]))
    for t, s in spec.tree.edges:
        edges.append((new_id[(t, spec.selection[(t, s)])], new_id[(s, spec.selection[(s, t)])]))
    return Graph(range(nxt), edges, labels)


def branching_tree(k: int, h: int) -> Graph:
    """Tree of height h where every internal node has degree k-1 (root included)."""
    edges = []
    level = [0]
    count = 1
    for depth in range(h):
        nxt = []
        for t in level:
            for _ in range(k - 1 if depth == 0 else k - 2):
                edges.append((t, count))
                nxt.append(count)
                count += 1
        level = nxt
    return Graph(range(count), edges)


def gallai_spec_for_tree(k: int, tree: Graph) -> GallaiSpec:
    """Every H_t = K_k with hub 0; each node hands out the lowest free neighbours of its hub."""
    family, hub, selection = {}, {}, {}
    for t in tree.vertices:
        family[t] = complete_graph(k)
        hub[t] = 0
        for i, s in enumerate(tree.neighbors(t)):
            selection[(t, s)] = i + 1
    return GallaiSpec(k, tree, family, hub, selection)


def gallai_regular(k: int, h: int) -> Graph:
    if k < 4 or h < 0:
        raise ValueError("need k >= 4 and h >= 0")
    return gallai_graph(gallai_spec_for_tree(k, branching_tree(k, h)))


def hammock_counterexample(t: int) -> Tuple[Graph, Tuple[int, int], Tuple[int, int]]:
    """Comb of t paths hanging off a spine of t vertices, plus three mutual apexes.

    Returns (G, X, Y) with X = (x, z) and Y = (y, z).
    """
    if t < 2:
        raise ValueError("t must be at least 2")
    edges = [(i, i + 1) for i in range(t - 1)]           # spine P_0 on 0..t-1
    labels = {}
    nxt = t
    for i in range(t):
        prev = i                                          # P_{i+1} starts at spine vertex i
        for _ in range(t - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    x, y, z = nxt, nxt + 1, nxt + 2
    for a in (x, y, z):
        for v in range(nxt):
            edges.append((a, v))
    edges += [(x, y), (x, z), (y, z)]
    labels.update({x: "x", y: "y", z: "z"})
    return Graph(range(nxt + 3), edges, labels), (x, z), (y, z)


def _odd_wheel(k: int, n: int) -> Graph:
    """C_{n-k+3} joined with K_{k-3}; k-critical when n-k is even and positive."""
    return join(cycle_graph(n - k + 3), complete_graph(k - 3))


def _seed_orders(k: int, n: int) -> List[int]:
    return [k] + list(range(k + 2, n + 1, 2))


@lru_cache(maxsize=None)
def _plan(k: int, n: int) -> Optional[Tuple[int, int]]:
    """How to reach order n: (n, 0) for a seed, (a, b) for a Hajós sum, None if unreachable."""
    if n in _seed_orders(k, n):
        return (n, 0)
    for a in _seed_orders(k, n):
        b = n + 1 - a
        if b >= k and _plan(k, b) is not None:
            return (a, b)
    return None


def k_critical_of_order(k: int, n: int) -> Graph:
    """A k-critical graph on n vertices built from K_k and odd wheels by Hajós sums."""
    if k < 4 or n < k:
        raise ValueError("need k >= 4 and n >= k")
    plan = _plan(k, n)
    if n == k + 1 or plan is None:
        raise UnsupportedOrder(f"no construction for k={k}, n={n} from the seed set")
    a, b = plan
    seed = complete_graph(k) if a == k else _odd_wheel(k, a)
    if b == 0:
        return seed
    other = k_critical_of_order(k, b)
    other = other.relabel({v: v + a for v in other.vertices})
    return hajos_sum(seed, seed.edges[0], other, other.edges[0]).compact()


def hajos_chain(k: int, length: int) -> Graph:
    """Hajós sum of ``length`` copies of K_k, each glued onto the last edge of the previous sum."""
    if k < 3 or length < 1:
        raise ValueError("need k >= 3 and length >= 1")
    g = complete_graph(k)
    for _ in range(length - 1):
        h = complete_graph(k, start=max(g.vertices) + 1)
        g = hajos_sum(g, g.edges[-1], h, h.edges[0]).compact()
    return g
