"""Simple undirected graphs, DFS trees, connectivity and witness types."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import BadFirstEdge, DisconnectedInput, InvalidWitness

Edge = Tuple[int, int]


def norm_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    """Immutable simple graph on integer vertex ids.

    Every "modifying" method returns a new graph.  ``labels`` is an optional
    map vertex -> string used by constructors to record provenance.
    """

    __slots__ = ("_adj", "labels", "_cache")

    def __init__(self, vertices: Iterable[int] = (), edges: Iterable[Sequence[int]] = (),
                 labels: Optional[Mapping[int, str]] = None):
        adj: Dict[int, set] = {int(v): set() for v in vertices}
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        for v in adj:
            if v < 0:
                raise ValueError("vertex ids must be non-negative")
        self._adj: Dict[int, FrozenSet[int]] = {v: frozenset(adj[v]) for v in sorted(adj)}
        self.labels: Dict[int, str] = {v: s for v, s in (labels or {}).items() if v in self._adj}
        self._cache: dict = {}

    # basic queries -------------------------------------------------------
    @property
    def vertices(self) -> Tuple[int, ...]:
        if "V" not in self._cache:
            self._cache["V"] = tuple(self._adj)
        return self._cache["V"]

    @property
    def edges(self) -> Tuple[Edge, ...]:
        if "E" not in self._cache:
            self._cache["E"] = tuple(sorted((u, v) for u in self._adj for v in self._adj[u] if u < v))
        return self._cache["E"]

    @property
    def n(self) -> int:
        return len(self._adj)

    @property
    def m(self) -> int:
        return len(self.edges)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        key = ("N", v)
        if key not in self._cache:
            self._cache[key] = tuple(sorted(self._adj[v]))
        return self._cache[key]

    def neighbor_set(self, v: int) -> FrozenSet[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def label(self, v: int) -> str:
        return self.labels.get(v, str(v))

    # derived graphs --------------------------------------------------------
    def subgraph(self, vertices: Iterable[int]) -> "Graph":
        keep = set(vertices)
        return Graph(sorted(keep), [e for e in self.edges if e[0] in keep and e[1] in keep], self.labels)

    def remove_vertices(self, vertices: Iterable[int]) -> "Graph":
        drop = set(vertices)
        return self.subgraph(v for v in self._adj if v not in drop)

    def remove_edge(self, u: int, v: int) -> "Graph":
        e = norm_edge(u, v)
        return Graph(self.vertices, [f for f in self.edges if f != e], self.labels)

    def add_edge(self, u: int, v: int) -> "Graph":
        """``G + uv``: unchanged when u, v are already adjacent."""
        return Graph(self.vertices, list(self.edges) + [(u, v)], self.labels)

    def contract(self, u: int, v: int) -> Tuple["Graph", int]:
        """``G / uv``: identify u and v, dropping the edge and parallel copies.

        Returns the new graph and the id of the merged vertex (``min(u, v)``).
        """
        z, gone = min(u, v), max(u, v)
        edges = []
        for a, b in self.edges:
            a = z if a == gone else a
            b = z if b == gone else b
            if a != b:
                edges.append((a, b))
        labels = dict(self.labels)
        labels[z] = f"{self.label(u)}/{self.label(v)}"
        labels.pop(gone, None)
        return Graph([w for w in self.vertices if w != gone], edges, labels), z

    def relabel(self, mapping: Mapping[int, int]) -> "Graph":
        labels = {mapping[v]: s for v, s in self.labels.items()}
        return Graph((mapping[v] for v in self.vertices),
                     ((mapping[a], mapping[b]) for a, b in self.edges), labels)

    def compact(self) -> "Graph":
        return self.relabel({v: i for i, v in enumerate(self.vertices)})

    def with_labels(self, labels: Mapping[int, str]) -> "Graph":
        return Graph(self.vertices, self.edges, {**self.labels, **labels})

    # connectivity helpers ------------------------------------------------------
    def components(self, removed: Iterable[int] = ()) -> List[FrozenSet[int]]:
        """Connected components of ``G - removed`` ordered by smallest vertex."""
        gone = set(removed)
        seen = set(gone)
        comps = []
        for s in self._adj:
            if s in seen:
                continue
            comp = {s}
            seen.add(s)
            queue = [s]
            while queue:
                x = queue.pop()
                for y in self._adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        queue.append(y)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def bfs_path(self, sources: Iterable[int], targets: Iterable[int],
                 avoid: Iterable[int] = ()) -> Optional[List[int]]:
        """Shortest path from a source to a target whose interior avoids ``avoid``
        and every other source/target; ascending tie-breaks."""
        src, tgt, bad = set(sources), set(targets), set(avoid)
        for s in sorted(src):
            if s in tgt and s not in bad:
                return [s]
        prev = {s: None for s in sorted(src) if s not in bad}
        queue = deque(prev)
        while queue:
            x = queue.popleft()
            for y in self.neighbors(x):
                if y in prev or y in bad:
                    continue
                if y in tgt:
                    path = [y, x]
                    while prev[path[-1]] is not None:
                        path.append(prev[path[-1]])
                    return path[::-1]
                if y in src:
                    continue
                prev[y] = x
                queue.append(y)
        return None


def complete_graph(k: int, start: int = 0) -> Graph:
    vs = range(start, start + k)
    return Graph(vs, combinations(vs, 2))


def cycle_graph(n: int, start: int = 0) -> Graph:
    vs = list(range(start, start + n))
    return Graph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph(range(n), [(i, i + 1) for i in range(n - 1)])


def join(a: Graph, b: Graph) -> Graph:
    """Disjoint union of ``a`` and ``b`` (b shifted past a) plus all a-b edges."""
    shift = max(a.vertices) + 1 - min(b.vertices)
    bv = [v + shift for v in b.vertices]
    edges = list(a.edges) + [(u + shift, v + shift) for u, v in b.edges]
    edges += [(u, v) for u in a.vertices for v in bv]
    return Graph(list(a.vertices) + bv, edges)


def wheel_graph(rim: int) -> Graph:
    """Cycle on ``rim`` vertices 0..rim-1 plus apex ``rim``."""
    return join(cycle_graph(rim), Graph([0]))


def prism_graph(p: int) -> Graph:
    outer = [(i, (i + 1) % p) for i in range(p)]
    inner = [(p + i, p + (i + 1) % p) for i in range(p)]
    spokes = [(i, p + i) for i in range(p)]
    return Graph(range(2 * p), outer + inner + spokes)


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(range(10), outer + inner + spokes)


# rooted trees -----------------------------------------------------------------

@dataclass(frozen=True)
class RootedTree:
    root: int
    parent: Dict[int, int]  # root maps to itself
    depth: Dict[int, int]

    @property
    def vertices(self) -> Tuple[int, ...]:
        return tuple(sorted(self.parent))

    def edges(self) -> List[Edge]:
        return sorted(norm_edge(v, p) for v, p in self.parent.items() if v != p)

    def is_ancestor(self, a: int, b: int) -> bool:
        """True when ``a`` lies on the root path of ``b`` (a vertex is its own ancestor)."""
        if self.depth[a] > self.depth[b]:
            return False
        while self.depth[b] > self.depth[a]:
            b = self.parent[b]
        return a == b

    def path_to_root(self, v: int) -> List[int]:
        out = [v]
        while out[-1] != self.root:
            out.append(self.parent[out[-1]])
        return out

    def level_counts(self) -> List[int]:
        counts = [0] * (max(self.depth.values()) + 1)
        for d in self.depth.values():
            counts[d] += 1
        return counts

    def is_dfs_tree_of(self, g: Graph) -> bool:
        if set(self.parent) != set(g.vertices):
            return False
        for v, p in self.parent.items():
            if v != p and not g.has_edge(v, p):
                return False
            if v != p and self.depth[v] != self.depth[p] + 1:
                return False
        if self.depth[self.root] != 0:
            return False
        return all(self.is_ancestor(a, b) or self.is_ancestor(b, a) for a, b in g.edges)


def dfs_spanning_tree(g: Graph, root: int, first_edge: Optional[Sequence[int]] = None) -> RootedTree:
    """DFS spanning tree with ascending neighbour order.

    With ``first_edge`` the search leaves the root along that edge first and
    the edge must end up as the only tree edge at the root.
    """
    if root not in g:
        raise ValueError(f"root {root} not in graph")
    if not g.is_connected():
        raise DisconnectedInput("graph is not connected")
    first = None
    if first_edge is not None:
        a, b = first_edge
        if root not in (a, b) or not g.has_edge(a, b):
            raise BadFirstEdge(f"{tuple(first_edge)} is not an edge at the root {root}")
        first = b if a == root else a
    parent = {root: root}
    depth = {root: 0}
    root_nbrs = list(g.neighbors(root))
    if first is not None:
        root_nbrs.remove(first)
        root_nbrs.insert(0, first)
    stack = [(root, iter(root_nbrs))]
    while stack:
        x, it = stack[-1]
        for y in it:
            if y not in parent:
                if x == root and first is not None and y != first:
                    raise BadFirstEdge("first edge does not reach every vertex")
                parent[y] = x
                depth[y] = depth[x] + 1
                stack.append((y, iter(g.neighbors(y))))
                break
        else:
            stack.pop()
    return RootedTree(root, parent, depth)


# connectivity -------------------------------------------------------------------

def connectivity(g: Graph) -> Tuple[int, Optional[FrozenSet[int]]]:
    """Largest t <= 3 with g t-connected, plus a separator of size t when one exists."""
    n = g.n
    if n < 2 or not g.is_connected():
        return 0, (frozenset() if n >= 2 else None)
    for t in (1, 2):
        if n < t + 2:
            return t, None
        for cut in combinations(g.vertices, t):
            if len(g.components(cut)) > 1:
                return t, frozenset(cut)
    if n < 4:
        return 2, None
    return 3, None


def is_two_connected(g: Graph) -> bool:
    return connectivity(g)[0] >= 2


def is_three_connected(g: Graph) -> bool:
    return connectivity(g)[0] >= 3


def two_cuts(g: Graph) -> List[Tuple[int, int]]:
    return [c for c in combinations(g.vertices, 2) if len(g.components(c)) > 1]


def is_bipartite(g: Graph) -> bool:
    side: Dict[int, int] = {}
    for s in g.vertices:
        if s in side:
            continue
        side[s] = 0
        queue = [s]
        while queue:
            x = queue.pop()
            for y in g.neighbors(x):
                if y not in side:
                    side[y] = 1 - side[x]
                    queue.append(y)
                elif side[y] == side[x]:
                    return False
    return True


# witnesses ----------------------------------------------------------------------

@dataclass
class PathWitness:
    vertices: Tuple[int, ...]
    host: Graph = field(repr=False)
    claimed_length: int = 0
    trace: List[str] = field(default_factory=list)

    def __post_init__(self):
        self.vertices = tuple(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def ends(self) -> Tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    def validate(self) -> "PathWitness":
        check_path(self.host, self.vertices)
        if self.length < self.claimed_length:
            raise InvalidWitness(f"path length {self.length} below claim {self.claimed_length}")
        return self

    def to_json(self) -> dict:
        return {"kind": "path", "vertices": list(self.vertices), "length": self.length,
                "claimed_length": self.claimed_length, "trace": list(self.trace)}


@dataclass
class CycleWitness:
    vertices: Tuple[int, ...]
    host: Graph = field(repr=False)
    claimed_length: int = 0
    trace: List[str] = field(default_factory=list)

    def __post_init__(self):
        self.vertices = tuple(self.vertices)

    @property
    def length(self) -> int:
        return len(self.vertices)

    def validate(self) -> "CycleWitness":
        check_cycle(self.host, self.vertices)
        if self.length < self.claimed_length:
            raise InvalidWitness(f"cycle length {self.length} below claim {self.claimed_length}")
        return self

    def to_json(self) -> dict:
        return {"kind": "cycle", "vertices": list(self.vertices), "length": self.length,
                "claimed_length": self.claimed_length, "trace": list(self.trace)}


def check_path(g: Graph, seq: Sequence[int]) -> None:
    """Independent structural checker; raises InvalidWitness."""
    if not seq:
        raise InvalidWitness("empty path")
    if len(set(seq)) != len(seq):
        raise InvalidWitness(f"repeated vertex in path {list(seq)}")
    for v in seq:
        if v not in g:
            raise InvalidWitness(f"vertex {v} not in host")
    for a, b in zip(seq, seq[1:]):
        if not g.has_edge(a, b):
            raise InvalidWitness(f"{a}-{b} is not an edge")


def check_cycle(g: Graph, seq: Sequence[int]) -> None:
    if len(seq) < 3:
        raise InvalidWitness("a cycle needs at least three vertices")
    check_path(g, seq)
    if not g.has_edge(seq[-1], seq[0]):
        raise InvalidWitness(f"{seq[-1]}-{seq[0]} closing edge missing")


def canonical_cycle(seq: Sequence[int]) -> Tuple[int, ...]:
    """Rotate to the smallest vertex, orient so the second entry is below the last."""
    i = seq.index(min(seq))
    rot = list(seq[i:]) + list(seq[:i])
    if len(rot) > 2 and rot[1] > rot[-1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def canonical_path(seq: Sequence[int]) -> Tuple[int, ...]:
    return tuple(seq) if seq[0] <= seq[-1] else tuple(reversed(seq))


# DIMACS-like text format ---------------------------------------------------------

def to_dimacs(g: Graph, comment: Optional[str] = None) -> str:
    index = {v: i + 1 for i, v in enumerate(g.vertices)}
    lines = []
    if comment:
        lines += [f"c {line}" for line in comment.splitlines()]
    lines.append(f"p edge {g.n} {g.m}")
    lines += [f"e {index[u]} {index[v]}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def from_dimacs(text: str) -> Graph:
    """Parse ``p edge n m`` / ``e u v`` text (1-based) into vertices 0..n-1."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if parts[0] == "p":
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ValueError(f"line {lineno}: bad problem line {raw!r}")
            n = int(parts[2])
        elif parts[0] == "e":
            if n is None:
                raise ValueError(f"line {lineno}: edge before problem line")
            u, v = int(parts[1]) - 1, int(parts[2]) - 1
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"line {lineno}: vertex out of range")
            if u == v:
                raise ValueError(f"line {lineno}: loop")
            edges.append((u, v))
        else:
            raise ValueError(f"line {lineno}: unknown record {parts[0]!r}")
    if n is None:
        raise ValueError("missing problem line")
    return Graph(range(n), edges)


def read_dimacs(path) -> Graph:
    with open(path) as fh:
        return from_dimacs(fh.read())


def write_dimacs(g: Graph, path, comment: Optional[str] = None) -> None:
    with open(path, "w") as fh:
        fh.write(to_dimacs(g, comment))
