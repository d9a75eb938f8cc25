"""Standard tree-decompositions: 2-cut splitting, torsos, virtual edges, nuclei."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Tuple

from .coloring import CriticalityReport, TwoCutSplit, is_k_critical, split_two_cut
from .errors import NotTwoConnected
from .graph_core import Edge, Graph, RootedTree, dfs_spanning_tree, is_three_connected, is_two_connected, norm_edge
from .oracles import longest_path_exact

ADDITIVE = "additive"
CONTRACTIVE = "contractive"


@dataclass(frozen=True)
class VirtualEdge:
    node: int
    u: int
    v: int
    neighbor: int
    classification: Optional[str] = None


@dataclass
class StandardDecomposition:
    tree: Graph                                  # undirected, on node ids 0..N-1
    bags: Dict[int, FrozenSet[int]]
    adhesions: Dict[Edge, FrozenSet[int]]        # keyed by (a, b) with a < b
    torsos: Dict[int, Graph]
    virtual_edges: Dict[int, List[VirtualEdge]]
    kinds: Dict[int, str]                        # "rigid" or "cycle"
    parallel_chained: bool = False

    @property
    def nodes(self) -> Tuple[int, ...]:
        return self.tree.vertices

    def adhesion(self, a: int, b: int) -> FrozenSet[int]:
        return self.adhesions[norm_edge(a, b)]

    def torso(self, t: int) -> Graph:
        return self.torsos[t]

    def rooted(self, root: int) -> RootedTree:
        return dfs_spanning_tree(self.tree, root)

    def node_with_bag(self, bag) -> Optional[int]:
        bag = frozenset(bag)
        for t in self.nodes:
            if self.bags[t] == bag:
                return t
        return None

    def to_json(self) -> dict:
        return {
            "nodes": [
                {"id": t, "bag": sorted(self.bags[t]), "kind": self.kinds[t],
                 "torso_edges": [list(e) for e in self.torsos[t].edges],
                 "virtual_edges": [{"u": ve.u, "v": ve.v, "neighbor": ve.neighbor,
                                    "classification": ve.classification}
                                   for ve in self.virtual_edges[t]]}
                for t in self.nodes],
            "tree_edges": [{"nodes": list(e), "adhesion": sorted(self.adhesions[e])}
                           for e in self.tree.edges],
            "parallel_chained": self.parallel_chained,
        }


# splitting ---------------------------------------------------------------------

@dataclass
class _Piece:
    vertices: set
    real: set
    virt: Dict[int, Edge]            # virtual id -> pair
    kind: str = ""                   # "rigid", "cycle" or "bond"

    def pairs(self):
        return set(self.real) | set(self.virt.values())

    def components(self, removed):
        adj = {v: set() for v in self.vertices if v not in removed}
        for a, b in self.pairs():
            if a in adj and b in adj:
                adj[a].add(b)
                adj[b].add(a)
        comps, seen = [], set()
        for s in sorted(adj):
            if s in seen:
                continue
            comp, stack = {s}, [s]
            seen.add(s)
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        stack.append(y)
            comps.append(comp)
        return comps

    def first_two_cut(self):
        if len(self.vertices) < 4:
            return None
        for u, v in combinations(sorted(self.vertices), 2):
            if len(self.components((u, v))) > 1:
                return u, v
        return None


def _split(g: Graph) -> List[_Piece]:
    counter = [0]

    def fresh():
        counter[0] += 1
        return counter[0]

    work = [_Piece(set(g.vertices), set(g.edges), {})]
    done: List[_Piece] = []
    while work:
        p = work.pop()
        cut = p.first_two_cut()
        if cut is None:
            p.kind = "cycle" if len(p.vertices) == 3 else "rigid"
            done.append(p)
            continue
        u, v = cut
        uv = norm_edge(u, v)
        comps = p.components(cut)
        old_virtual = [i for i, e in p.virt.items() if e == uv]
        has_real = uv in p.real
        ids = [fresh() for _ in comps]
        if len(comps) == 2 and not old_virtual and not has_real:
            ids = [ids[0], ids[0]]
        for comp, i in zip(comps, ids):
            vs = comp | {u, v}
            real = {e for e in p.real if e[0] in vs and e[1] in vs and e != uv}
            virt = {j: e for j, e in p.virt.items() if e[0] in vs and e[1] in vs and e != uv}
            virt[i] = uv
            work.append(_Piece(vs, real, virt))
        if ids[0] != ids[-1] or len(ids) > 2:
            bond_virt = {i: uv for i in ids}
            bond_virt.update({j: uv for j in old_virtual})
            done.append(_Piece({u, v}, {uv} if has_real else set(), bond_virt, "bond"))
    return done


def _links(pieces) -> Dict[int, List[int]]:
    links: Dict[int, List[int]] = {}
    for idx, p in enumerate(pieces):
        for i in p.virt:
            links.setdefault(i, []).append(idx)
    return links


def _merge_same_kind(pieces: List[_Piece], kind: str) -> List[_Piece]:
    """Merge neighbouring pieces of one kind (polygons into polygons, bonds into bonds)."""
    while True:
        links = _links(pieces)
        pair = None
        for i, (a, b) in sorted(links.items()):
            if pieces[a].kind == kind and pieces[b].kind == kind:
                pair = (i, a, b)
                break
        if pair is None:
            return pieces
        i, a, b = pair
        pa, pb = pieces[a], pieces[b]
        merged = _Piece(pa.vertices | pb.vertices, pa.real | pb.real,
                        {j: e for j, e in {**pa.virt, **pb.virt}.items() if j != i}, kind)
        pieces = [p for idx, p in enumerate(pieces) if idx not in (a, b)] + [merged]


def standard_tree_decomposition(g: Graph) -> StandardDecomposition:
    """Split along 2-cuts, merge polygon fragments into cycles.

    Parallel classes (a pair with three or more bridges) are not expected in
    critical graphs; when one occurs its neighbours are chained in a path and
    ``parallel_chained`` is set, since the validator then flags the repeated
    adhesion.
    """
    if g.n < 3 or not is_two_connected(g):
        raise NotTwoConnected("standard tree-decomposition needs a 2-connected graph on >= 3 vertices")
    pieces = _merge_same_kind(_merge_same_kind(_split(g), "cycle"), "bond")
    keep = [p for p in pieces if p.kind != "bond"]
    order = sorted(range(len(keep)), key=lambda i: tuple(sorted(keep[i].vertices)))
    node_of = {old: new for new, old in enumerate(order)}
    bags = {node_of[i]: frozenset(keep[i].vertices) for i in order}
    kinds = {node_of[i]: keep[i].kind for i in order}

    piece_node = {}
    idx_keep = 0
    for idx, p in enumerate(pieces):
        if p.kind != "bond":
            piece_node[idx] = node_of[idx_keep]
            idx_keep += 1
    tree_edges = set()
    chained = False
    links = _links(pieces)
    for i, (a, b) in links.items():
        if pieces[a].kind != "bond" and pieces[b].kind != "bond":
            tree_edges.add(norm_edge(piece_node[a], piece_node[b]))
    for idx, p in enumerate(pieces):
        if p.kind != "bond":
            continue
        around = sorted(piece_node[other] for i in p.virt for other in links[i] if other != idx)
        if len(around) > 2 or p.real:
            chained = True
        for a, b in zip(around, around[1:]):
            tree_edges.add(norm_edge(a, b))

    tree = Graph(range(len(keep)), tree_edges)
    adhesions = {e: bags[e[0]] & bags[e[1]] for e in tree.edges}
    torsos = {}
    virtual = {}
    for t in tree.vertices:
        extra = [tuple(sorted(adhesions[norm_edge(t, s)])) for s in tree.neighbors(t)]
        torsos[t] = Graph(sorted(bags[t]),
                          [e for e in g.subgraph(bags[t]).edges] + [e for e in extra if len(e) == 2],
                          g.labels)
        virtual[t] = []
        for s in tree.neighbors(t):
            pair = sorted(adhesions[norm_edge(t, s)])
            if len(pair) == 2 and not g.has_edge(*pair):
                virtual[t].append(VirtualEdge(t, pair[0], pair[1], s))
    return StandardDecomposition(tree, bags, adhesions, torsos, virtual, kinds, chained)


def torso(dec: StandardDecomposition, t: int) -> Graph:
    return dec.torsos[t]


def is_cycle_graph(h: Graph) -> bool:
    return h.n >= 3 and h.is_connected() and all(h.degree(v) == 2 for v in h.vertices)


# classification and nuclei ------------------------------------------------------------

def classify_virtual_edges(g: Graph, dec: StandardDecomposition, k: int,
                           splits: Optional[Dict[Edge, TwoCutSplit]] = None) -> StandardDecomposition:
    """Fill in additive/contractive: additive iff the bag sits in the type-one side."""
    splits = {} if splits is None else splits
    new_virtual = {}
    for t, ves in dec.virtual_edges.items():
        out = []
        for ve in ves:
            key = norm_edge(ve.u, ve.v)
            if key not in splits:
                splits[key] = split_two_cut(g, ve.u, ve.v, k)
            sp = splits[key]
            in1 = dec.bags[t] <= set(sp.G1.vertices)
            in2 = dec.bags[t] <= set(sp.G2.vertices)
            if in1 == in2:
                raise AssertionError(f"bag of node {t} is not inside exactly one side of {key}")
            out.append(replace(ve, classification=ADDITIVE if in1 else CONTRACTIVE))
        new_virtual[t] = out
    return replace(dec, virtual_edges=new_virtual)


@dataclass
class NucleusResult:
    graph: Graph
    contraction_map: Dict[int, int]
    degenerate: bool
    forest: bool = True
    report: Optional[CriticalityReport] = None
    note: str = ""

    @property
    def critical(self) -> bool:
        return not self.degenerate and self.report is not None and self.report.is_critical


def nucleus(g: Graph, dec: StandardDecomposition, t: int, k: int,
            verify: bool = True) -> NucleusResult:
    """Torso with additive virtual edges kept and contractive ones contracted."""
    h = dec.torsos[t]
    ves = dec.virtual_edges[t]
    if any(ve.classification is None for ve in ves):
        raise ValueError("classify_virtual_edges must run first")
    contractive = {norm_edge(ve.u, ve.v) for ve in ves if ve.classification == CONTRACTIVE}
    parent = {v: v for v in h.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    forest = True
    for a, b in sorted(contractive):
        ra, rb = find(a), find(b)
        if ra == rb:
            forest = False
            continue
        lo, hi = min(ra, rb), max(ra, rb)
        parent[hi] = lo
    cmap = {v: find(v) for v in h.vertices}
    loop = False
    edges = set()
    for a, b in h.edges:
        if (a, b) in contractive:
            continue
        ca, cb = cmap[a], cmap[b]
        if ca == cb:
            loop = True
        else:
            edges.add(norm_edge(ca, cb))
    n_graph = Graph(sorted(set(cmap.values())), edges, h.labels)
    if not forest:
        return NucleusResult(n_graph, cmap, True, False, note="contractive virtual edges contain a cycle")
    if loop or n_graph.n < 4:
        why = "contraction creates a loop" if loop else f"nucleus has only {n_graph.n} vertices"
        return NucleusResult(n_graph, cmap, True, forest, note=why)
    report = is_k_critical(n_graph, k) if verify else None
    return NucleusResult(n_graph, cmap, False, forest, report)


# validation ----------------------------------------------------------------------

CHECKS = ("adhesion_nonadjacent", "adhesion_distinct", "torso_3connected", "contractive_forest",
          "nucleus_critical", "torso_edges_vs_nucleus", "tree_degree_vs_nucleus",
          "nucleus_vs_bag_edges", "torso_long_path")


@dataclass
class ValidationReport:
    checks: Dict[int, Dict[str, bool]]
    notes: Dict[int, Dict[str, str]]
    bags: Dict[int, FrozenSet[int]]

    @property
    def all_pass(self) -> bool:
        return all(all(c.values()) for c in self.checks.values())

    def failures(self) -> List[Tuple[int, str]]:
        return [(t, name) for t in sorted(self.checks) for name in CHECKS if not self.checks[t][name]]

    def failing_nodes(self, name: str) -> List[int]:
        return [t for t in sorted(self.checks) if not self.checks[t][name]]

    def to_json(self) -> dict:
        return {str(t): {"bag": sorted(self.bags[t]), "checks": self.checks[t], "notes": self.notes[t]}
                for t in sorted(self.checks)}


def validate_decomposition(g: Graph, dec: StandardDecomposition, k: int,
                           nuclei: Optional[Dict[int, NucleusResult]] = None) -> ValidationReport:
    """Per-node pass/fail for the structural claims about standard decompositions of critical graphs."""
    if nuclei is None:
        nuclei = {t: nucleus(g, dec, t, k) for t in dec.nodes}
    checks, notes = {}, {}
    for t in dec.nodes:
        c, note = {}, {}
        pairs = [dec.adhesion(t, s) for s in dec.tree.neighbors(t)]
        adjacent = [sorted(p) for p in pairs if g.has_edge(*sorted(p))]
        c["adhesion_nonadjacent"] = not adjacent
        if adjacent:
            note["adhesion_nonadjacent"] = f"adjacent adhesion pairs {adjacent}"
        c["adhesion_distinct"] = len(set(pairs)) == len(pairs)
        h = dec.torsos[t]
        c["torso_3connected"] = is_three_connected(h)
        if not c["torso_3connected"]:
            note["torso_3connected"] = f"torso on {sorted(h.vertices)} is {'a cycle' if is_cycle_graph(h) else 'not 3-connected'}"
        nu = nuclei[t]
        c["contractive_forest"] = nu.forest
        c["nucleus_critical"] = nu.critical
        if not nu.critical:
            note["nucleus_critical"] = nu.note or "nucleus is not k-critical"
        en = nu.graph.m
        c["torso_edges_vs_nucleus"] = h.m <= 3 * en
        c["tree_degree_vs_nucleus"] = dec.tree.degree(t) <= 3 * en
        c["nucleus_vs_bag_edges"] = en >= g.subgraph(dec.bags[t]).m
        # path of length L with L >= log|E(N)| / (2 log k), i.e. k^(2L) >= |E(N)|
        L = longest_path_exact(h).length
        c["torso_long_path"] = k ** (2 * L) >= en
        note["torso_long_path"] = f"longest torso path {L}, |E(N)| = {en}"
        checks[t], notes[t] = c, note
    return ValidationReport(checks, notes, dict(dec.bags))
