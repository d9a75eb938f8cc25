"""Exact longest path / cycle search used as ground truth.

Branch and bound over simple paths, vertices as bit positions in ascending id
order.  The bound at a search node looks at the block-cut tree of the unused
vertices: a cycle must return to its start through the blocks on one
block-cut path, and a path can only continue through the blocks on some
block-cut path leaving its current end.  Among optimal witnesses the
lexicographically least canonical one is returned.
"""

from __future__ import annotations

import sys
from typing import List, Optional, Tuple

from .errors import Acyclic, BipartiteInput, BudgetExceeded
from .graph_core import CycleWitness, Graph, PathWitness, is_bipartite

DEFAULT_BUDGET = 10 ** 8

sys.setrecursionlimit(max(sys.getrecursionlimit(), 10000))


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class _Searcher:
    def __init__(self, g: Graph, budget: int):
        self.order = list(g.vertices)
        index = {v: i for i, v in enumerate(self.order)}
        self.n = len(self.order)
        self.adj = [0] * self.n
        for v in self.order:
            for w in g.neighbors(v):
                self.adj[index[v]] |= 1 << index[w]
        self.budget = budget
        self.expanded = 0

    def tick(self):
        self.expanded += 1
        if self.expanded > self.budget:
            raise BudgetExceeded(self.budget, "exact path/cycle search")

    # block structure ------------------------------------------------------------
    def blocks(self, allowed: int, root: int):
        """Biconnected blocks of the component of ``root`` in G[allowed].

        Returns (blocks, tops, blk) where ``blk[v]`` is the block holding the
        DFS tree edge into v and ``tops[b]`` the vertex the block hangs from.
        Blocks come out deepest first.
        """
        adj = self.adj
        disc = {root: 0}
        low = {root: 0}
        parent = {root: -1}
        stack: List[int] = []
        blocks: List[int] = []
        tops: List[int] = []
        blk = {}
        counter = [1]

        def visit(u):
            for w in _bits(adj[u] & allowed):
                if w not in disc:
                    disc[w] = low[w] = counter[0]
                    counter[0] += 1
                    parent[w] = u
                    stack.append(w)
                    visit(w)
                    if low[w] < low[u]:
                        low[u] = low[w]
                    if low[w] >= disc[u]:
                        members = 1 << u
                        b = len(blocks)
                        while True:
                            x = stack.pop()
                            members |= 1 << x
                            blk[x] = b
                            if x == w:
                                break
                        blocks.append(members)
                        tops.append(u)
                elif w != parent[u] and disc[w] < low[u]:
                    low[u] = disc[w]

        visit(root)
        return blocks, tops, blk

    def cycle_room(self, allowed: int, s: int, e: int) -> int:
        """Vertices lying on some e-s path inside ``allowed`` (0 if none)."""
        blocks, tops, blk = self.blocks(allowed, s)
        if e not in blk:
            return 0
        b = blk[e]
        union = blocks[b]
        v = tops[b]
        while v != s:
            b = blk[v]
            union |= blocks[b]
            v = tops[b]
        return bin(union).count("1")

    def path_room(self, allowed: int, e: int) -> int:
        """Upper bound on the number of further vertices a path from e can visit."""
        blocks, tops, _ = self.blocks(allowed, e)
        best = {}
        for b, members in enumerate(blocks):
            top = tops[b]
            inner = max((best.get(u, 0) for u in _bits(members & ~(1 << top))), default=0)
            val = bin(members).count("1") - 1 + inner
            if val > best.get(top, 0):
                best[top] = val
        return best.get(e, 0)

    # cycles ---------------------------------------------------------------------
    def longest_cycle(self, parity: Optional[int] = None) -> Optional[Tuple[int, ...]]:
        best = [2]
        for s in range(self.n):
            if self.n - s <= best[0]:
                break
            self._cycle_from(s, best, parity, None)
        if best[0] < 3:
            return None
        target = best[0]
        for s in range(self.n):
            found = self._cycle_from(s, [target - 1], parity, target)
            if found:
                return tuple(self.order[i] for i in found)
        raise AssertionError("optimal cycle vanished in second pass")

    def _cycle_from(self, s, best, parity, exact):
        allowed = ((1 << self.n) - 1) & ~((1 << s) - 1)
        adj = self.adj
        path = [s]

        def ok_len(L):
            return parity is None or L % 2 == parity

        def extend(e, visited):
            self.tick()
            plen = len(path)
            if plen >= 3 and adj[e] >> s & 1 and ok_len(plen):
                if exact is None:
                    if plen > best[0]:
                        best[0] = plen
                elif plen == exact and path[1] < e:
                    return list(path)
            if plen == 1:
                room = bin(allowed).count("1") + 1
            else:
                room = self.cycle_room((allowed & ~visited) | (1 << e) | (1 << s), s, e)
                if room == 0:
                    return None
            bound = plen + room - 2
            if exact is None and bound <= best[0]:
                return None
            if exact is not None and bound < exact:
                return None
            for w in _bits(adj[e] & allowed & ~visited):
                path.append(w)
                res = extend(w, visited | (1 << w))
                path.pop()
                if res:
                    return res
            return None

        return extend(s, 1 << s)

    # paths ------------------------------------------------------------------------
    def longest_path(self) -> Tuple[int, ...]:
        full = (1 << self.n) - 1
        best = [0]
        for s in range(self.n):
            if best[0] == self.n - 1:
                break
            self._path_from(s, full, best, None)
        target = best[0]
        if target == 0:
            return (self.order[0],)
        for s in range(self.n):
            found = self._path_from(s, full, [target - 1], target)
            if found:
                return tuple(self.order[i] for i in found)
        raise AssertionError("optimal path vanished in second pass")

    def _path_from(self, s, allowed, best, exact):
        adj = self.adj
        path = [s]

        def extend(e, visited):
            self.tick()
            length = len(path) - 1
            if e > s:
                if exact is None:
                    if length > best[0]:
                        best[0] = length
                elif length == exact:
                    return list(path)
            room = self.path_room((allowed & ~visited) | (1 << e), e)
            bound = length + room
            if exact is None and bound <= best[0]:
                return None
            if exact is not None and bound < exact:
                return None
            for w in _bits(adj[e] & allowed & ~visited):
                path.append(w)
                res = extend(w, visited | (1 << w))
                path.pop()
                if res:
                    return res
            return None

        return extend(s, 1 << s)


def longest_cycle_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> CycleWitness:
    """Longest cycle, canonical (smallest vertex first, second below last)."""
    found = _Searcher(g, budget).longest_cycle()
    if found is None:
        raise Acyclic("graph has no cycle")
    return CycleWitness(found, g, len(found), ["exact branch-and-bound cycle oracle"]).validate()


def longest_path_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> PathWitness:
    """Longest path, canonical (first end below last end)."""
    if g.n == 0:
        raise ValueError("empty graph")
    found = _Searcher(g, budget).longest_path()
    return PathWitness(found, g, len(found) - 1, ["exact branch-and-bound path oracle"]).validate()


def longest_odd_cycle_exact(g: Graph, budget: int = DEFAULT_BUDGET) -> CycleWitness:
    found = _Searcher(g, budget).longest_cycle(parity=1)
    if found is None:
        raise BipartiteInput("graph has no odd cycle")
    return CycleWitness(found, g, len(found), ["exact odd-cycle oracle"]).validate()


def circumference(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    return longest_cycle_exact(g, budget).length


def find_long_odd_cycle(g: Graph, c: CycleWitness, budget: int = DEFAULT_BUDGET) -> CycleWitness:
    """An odd cycle of length at least ceil(|C|/2), by exhaustive odd-cycle search."""
    if is_bipartite(g):
        raise BipartiteInput("graph is bipartite")
    odd = longest_odd_cycle_exact(g, budget)
    need = -(-c.length // 2)
    if odd.length < need:
        raise AssertionError(f"odd cycle {odd.length} below ceil(|C|/2) = {need}")
    odd.claimed_length = need
    odd.trace = [f"longest odd cycle >= ceil({c.length}/2) = {need}"]
    return odd.validate()


# linkages ---------------------------------------------------------------------------

def _longest_st(adj, allowed: int, s: int, t: int, tick) -> Optional[List[int]]:
    """Longest s-t path inside ``allowed`` by plain DFS, or None."""
    best: List[Optional[List[int]]] = [None]
    path = [s]

    def reach(visited):
        seen, stack = 1 << path[-1], [path[-1]]
        while stack:
            x = stack.pop()
            for w in _bits(adj[x] & allowed & ~visited & ~seen):
                seen |= 1 << w
                stack.append(w)
        return seen

    def go(e, visited):
        tick()
        if e == t:
            if best[0] is None or len(path) > len(best[0]):
                best[0] = list(path)
            return
        r = reach(visited)
        if not r >> t & 1:
            return
        if best[0] is not None and len(path) + bin(r).count("1") - 1 <= len(best[0]):
            return
        for w in _bits(adj[e] & allowed & ~visited):
            path.append(w)
            go(w, visited | (1 << w))
            path.pop()

    if s == t:
        return [s]
    go(s, 1 << s)
    return best[0]


def max_linkage_bruteforce(g: Graph, X, Y, budget: int = DEFAULT_BUDGET):
    """Longest linkage from X to Y by exhaustive search: (length, P1, P2) or None.

    Every simple path from one X vertex to one Y vertex is tried as P1, with
    the longest path between the other two in the rest of the graph as P2.
    """
    s = _Searcher(g, budget)
    index = {v: i for i, v in enumerate(s.order)}
    x1, x2 = (index[v] for v in X)
    y1, y2 = (index[v] for v in Y)
    full = (1 << s.n) - 1
    best = [None]

    def outer(a, b, c, d):
        path = [a]

        def go(e, visited):
            s.tick()
            if e == b:
                rest = full & ~visited
                if not (rest >> c & 1 and rest >> d & 1):
                    return
                if best[0] is not None and len(path) - 1 + bin(rest).count("1") - 1 <= best[0][0]:
                    return
                q = _longest_st(s.adj, rest, c, d, s.tick)
                if q is not None:
                    total = len(path) - 1 + len(q) - 1
                    if best[0] is None or total > best[0][0]:
                        best[0] = (total, [s.order[i] for i in path], [s.order[i] for i in q])
                return
            if best[0] is not None and bin(full & ~visited).count("1") + len(path) - 2 <= best[0][0]:
                return
            for w in _bits(s.adj[e] & full & ~visited & ~(1 << c) & ~(1 << d)):
                path.append(w)
                go(w, visited | (1 << w))
                path.pop()

        go(a, 1 << a)

    outer(x1, y1, x2, y2)
    outer(x1, y2, x2, y1)
    if best[0] is None:
        return None
    total, p, q = best[0]
    return total, tuple(p), tuple(q)
