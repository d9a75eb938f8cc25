"""Vertex-disjoint S-T paths via unit vertex-capacity max flow."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from .errors import NotSufficientlyConnected
from .graph_core import Graph, check_path

SOURCE = ("source",)
SINK = ("sink",)
_INF = 1 << 30


@dataclass(frozen=True)
class DisjointPaths:
    paths: Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class Separator:
    vertices: FrozenSet[int]


class _Network:
    """Split-vertex flow network; ``strict`` keeps S and T vertices as path ends only."""

    def __init__(self, g: Graph, S: Iterable[int], T: Iterable[int], strict: bool,
                 fan: bool = False):
        self.S, self.T = frozenset(S), frozenset(T)
        shared = (self.S | self.T) - (self.S & self.T) if fan else frozenset()
        self.cap: Dict[tuple, int] = {}
        self.out: Dict[tuple, List[tuple]] = {SOURCE: [], SINK: []}
        for v in g.vertices:
            self.out[(v, 0)] = []
            self.out[(v, 1)] = []
        for v in g.vertices:
            self._arc((v, 0), (v, 1), _INF if v in shared else 1)
        for u, v in g.edges:
            for a, b in ((u, v), (v, u)):
                if strict and (b in self.S or a in self.T):
                    continue
                self._arc((a, 1), (b, 0), _INF)
        for s in sorted(self.S):
            self._arc(SOURCE, (s, 0), _INF)
        for t in sorted(self.T):
            self._arc((t, 1), SINK, _INF)
        self.flow: Dict[tuple, int] = {}

    def _arc(self, a, b, c):
        if (a, b) not in self.cap:
            self.out[a].append(b)
            self.out[b].append(a)
            self.cap.setdefault((b, a), 0)
        self.cap[(a, b)] = self.cap.get((a, b), 0) + c

    def residual(self, a, b) -> int:
        return self.cap.get((a, b), 0) - self.flow.get((a, b), 0)

    def push(self, a, b, amount=1):
        self.flow[(a, b)] = self.flow.get((a, b), 0) + amount
        self.flow[(b, a)] = self.flow.get((b, a), 0) - amount

    def load_path(self, path: Sequence[int]):
        nodes = [SOURCE]
        for v in path:
            nodes += [(v, 0), (v, 1)]
        nodes.append(SINK)
        for a, b in zip(nodes, nodes[1:]):
            if self.residual(a, b) <= 0:
                raise ValueError(f"given path {list(path)} is not feasible in the network")
            self.push(a, b)

    def augment(self) -> bool:
        prev = {SOURCE: None}
        queue = deque([SOURCE])
        while queue:
            a = queue.popleft()
            if a == SINK:
                break
            for b in self.out[a]:
                if b not in prev and self.residual(a, b) > 0:
                    prev[b] = a
                    queue.append(b)
        if SINK not in prev:
            return False
        b = SINK
        while prev[b] is not None:
            self.push(prev[b], b)
            b = prev[b]
        return True

    def reachable(self) -> set:
        seen = {SOURCE}
        queue = [SOURCE]
        while queue:
            a = queue.pop()
            for b in self.out[a]:
                if b not in seen and self.residual(a, b) > 0:
                    seen.add(b)
                    queue.append(b)
        return seen

    def paths(self) -> List[Tuple[int, ...]]:
        left = {arc: f for arc, f in self.flow.items() if f > 0}
        out = []
        while any(left.get((SOURCE, b), 0) > 0 for b in self.out[SOURCE]):
            node, path = SOURCE, []
            while node != SINK:
                nxt = sorted(b for b in self.out[node] if left.get((node, b), 0) > 0)
                b = SINK if SINK in nxt else nxt[0]
                left[(node, b)] -= 1
                node = b
                if node != SINK and node[1] == 0:
                    path.append(node[0])
            out.append(_drop_loops(path))
        return sorted(out)


def _drop_loops(path: List[int]) -> Tuple[int, ...]:
    out: List[int] = []
    for v in path:
        if v in out:
            del out[out.index(v) + 1:]
        else:
            out.append(v)
    return tuple(out)


def _max_flow(net: _Network, r: int) -> int:
    value = 0
    while value < r and net.augment():
        value += 1
    return value


def _cut(net: _Network, g: Graph) -> FrozenSet[int]:
    seen = net.reachable()
    return frozenset(v for v in g.vertices if (v, 0) in seen and (v, 1) not in seen)


def menger_paths(g: Graph, S: Iterable[int], T: Iterable[int], r: int,
                 strict: bool = False, fan: bool = False) -> Union[DisjointPaths, Separator]:
    """Either ``r`` vertex-disjoint S-T paths or a separator of size < r.

    A vertex in both S and T is a path of length zero.  With ``strict`` the
    paths have no interior vertex in S or T.  With ``fan`` the paths only need
    to be internally disjoint, so a lone terminal may be shared.  Separators
    avoid terminals whenever a small enough one exists.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    S, T = frozenset(S), frozenset(T)
    loose = _Network(g, S, T, strict, fan=True)
    if _max_flow(loose, r) < r:
        return Separator(_cut(loose, g))
    if fan:
        return DisjointPaths(tuple(loose.paths()))
    net = _Network(g, S, T, strict)
    if _max_flow(net, r) >= r:
        return DisjointPaths(tuple(net.paths()))
    return Separator(_cut(net, g))


def augment_paths(g: Graph, S: Iterable[int], T: Iterable[int],
                  given: Sequence[Sequence[int]], strict: bool = False) -> List[Tuple[int, ...]]:
    """Extend r-1 disjoint S-T paths to r of them by one augmenting path.

    Augmentation never releases a used source or sink arc, so all but one of
    the new paths start among the given starts and all but one end among the
    given ends.
    """
    S, T = frozenset(S), frozenset(T)
    seen = set()
    for p in given:
        check_path(g, p)
        if p[0] not in S or p[-1] not in T:
            raise ValueError(f"given path {list(p)} does not run from S to T")
        if seen & set(p):
            raise ValueError("given paths are not disjoint")
        seen |= set(p)
    net = _Network(g, S, T, strict)
    for p in given:
        net.load_path(p)
    if not net.augment():
        raise NotSufficientlyConnected(f"no augmenting path beyond {len(given)} paths")
    paths = net.paths()
    starts = {p[0] for p in given}
    ends = {p[-1] for p in given}
    assert sum(p[0] not in starts for p in paths) == 1
    assert sum(p[-1] not in ends for p in paths) == 1
    return paths
