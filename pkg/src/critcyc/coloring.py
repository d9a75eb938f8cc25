"""Exact colorability decisions, criticality checks and 2-cut splitting."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Mapping, Optional, Tuple

from .errors import (AdjacentCutPair, BudgetExceeded, InfeasiblePin, NotACut, NotCritical,
                     NotExactlyTwoComponents, TypeClassificationFailed)
from .graph_core import Edge, Graph

DEFAULT_BUDGET = 10 ** 7


@dataclass
class Coloring:
    assignment: Dict[int, int]
    palette_size: int

    def is_proper_for(self, g: Graph) -> bool:
        return is_proper(g, self.assignment, self.palette_size)

    def to_json(self) -> dict:
        return {str(v): c for v, c in sorted(self.assignment.items())}


def is_proper(g: Graph, assignment: Mapping[int, int], c: int) -> bool:
    """Plain checker kept separate from the search."""
    if set(assignment) != set(g.vertices):
        return False
    if any(not 1 <= col <= c for col in assignment.values()):
        return False
    return all(assignment[u] != assignment[v] for u, v in g.edges)


def find_coloring(g: Graph, c: int, pins: Optional[Mapping[int, int]] = None,
                  budget: int = DEFAULT_BUDGET) -> Optional[Coloring]:
    """A proper coloring with colors 1..c extending ``pins``, or None if none exists.

    DSATUR order: fewest remaining colors, then most uncolored neighbours, then
    lowest id.  Colors not used so far are interchangeable, so only the
    smallest of them is tried.  Once the uncolored vertices fall apart into
    several components each is solved on its own, and a component without a
    coloring fails the whole node at once.
    """
    if c < 1:
        raise ValueError("c must be at least 1")
    pins = dict(pins or {})
    for v, col in pins.items():
        if v not in g or not 1 <= col <= c:
            raise InfeasiblePin(f"pin {v}->{col} outside graph or palette")
    for u, v in g.edges:
        if u in pins and v in pins and pins[u] == pins[v]:
            raise InfeasiblePin(f"pinned vertices {u},{v} are adjacent and share color {pins[u]}")

    full = (1 << c) - 1
    domain = {v: full for v in g.vertices}
    color: Dict[int, int] = {}
    used = [0] * c
    for v, col in pins.items():
        color[v] = col - 1
        domain[v] = 1 << (col - 1)
        used[col - 1] += 1
    for v, col in pins.items():
        for w in g.neighbors(v):
            if w not in color:
                domain[w] &= ~(1 << (col - 1))
                if not domain[w]:
                    return None
    count = [0]
    trail: list = []                     # undo log: (vertex, None) for a color, (vertex, bit) for a domain

    def undo(mark):
        while len(trail) > mark:
            v, bit = trail.pop()
            if bit is None:
                used[color.pop(v)] -= 1
            else:
                domain[v] |= bit

    def pick(part):
        best, key = None, None
        for v in part:
            k = (bin(domain[v]).count("1"), -sum(w not in color for w in g.neighbors(v)), v)
            if key is None or k < key:
                best, key = v, k
        return best

    def split(part):
        comps, seen = [], set()
        for s0 in sorted(part):
            if s0 in seen:
                continue
            comp, stack = [s0], [s0]
            seen.add(s0)
            while stack:
                x = stack.pop()
                for y in g.neighbors(x):
                    if y in part and y not in seen:
                        seen.add(y)
                        comp.append(y)
                        stack.append(y)
            comps.append(comp)
        return sorted(comps, key=len)

    def solve(part):
        # parts with no edge between them fail or succeed independently
        if not part:
            return True
        mark = len(trail)
        for comp in split(part):
            if not branch(set(comp)):
                undo(mark)
                return False
        return True

    def branch(part):
        count[0] += 1
        if count[0] > budget:
            raise BudgetExceeded(budget, "coloring search")
        v = pick(part)
        rest = part - {v}
        fresh_tried = False
        d = domain[v]
        for col in range(c):
            if not d >> col & 1:
                continue
            if not used[col]:
                if fresh_tried:
                    continue
                fresh_tried = True
            bit = 1 << col
            mark = len(trail)
            ok = True
            for w in g.neighbors(v):
                if w in rest and domain[w] & bit:
                    domain[w] &= ~bit
                    trail.append((w, bit))
                    if not domain[w]:
                        ok = False
                        break
            if ok:
                color[v] = col
                used[col] += 1
                trail.append((v, None))
                if solve(rest):
                    return True
            undo(mark)
        return False

    if not solve({v for v in g.vertices if v not in color}):
        return None
    result = Coloring({v: col + 1 for v, col in color.items()}, c)
    assert result.is_proper_for(g), "solver returned an improper coloring"
    for v, col in pins.items():
        assert result.assignment[v] == col
    return result


def chromatic_number(g: Graph, budget: int = DEFAULT_BUDGET) -> int:
    if g.n == 0:
        return 0
    c = 1
    while find_coloring(g, c, budget=budget) is None:
        c += 1
    return c


@dataclass
class CriticalityReport:
    k: int
    is_critical: bool
    chromatic_witness: Optional[Coloring]
    per_edge: Dict[Edge, Coloring] = field(default_factory=dict)
    reason: str = ""

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "is_critical": self.is_critical,
            "reason": self.reason,
            "chromatic_witness": self.chromatic_witness.to_json() if self.chromatic_witness else None,
            "per_edge": [{"edge": list(e), "coloring": col.to_json()}
                         for e, col in sorted(self.per_edge.items())],
        }


def is_k_critical(g: Graph, k: int, budget: int = DEFAULT_BUDGET) -> CriticalityReport:
    """Check that G needs k colors and loses that property with any edge deleted."""
    if k < 2:
        raise ValueError("k must be at least 2")
    witness = find_coloring(g, k, budget=budget)
    if witness is None:
        return CriticalityReport(k, False, None, reason=f"not {k}-colorable")
    if find_coloring(g, k - 1, budget=budget) is not None:
        return CriticalityReport(k, False, witness, reason=f"{k - 1}-colorable")
    if any(g.degree(v) == 0 for v in g.vertices):
        return CriticalityReport(k, False, witness, reason="isolated vertex")
    per_edge = {}
    for u, v in g.edges:
        h = g.remove_edge(u, v)
        # u and v must share a color in any (k-1)-coloring of G-uv, so pin both to 1
        col = find_coloring(h, k - 1, pins={u: 1, v: 1}, budget=budget)
        if col is None:
            return CriticalityReport(k, False, witness, reason=f"G-{u}{v} not {k - 1}-colorable")
        per_edge[(u, v)] = col
    return CriticalityReport(k, True, witness, per_edge)


def two_cut_type(gi: Graph, u: int, v: int, c: int,
                 budget: int = DEFAULT_BUDGET) -> Tuple[bool, bool]:
    """(u,v equal in some c-coloring, u,v distinct in some c-coloring)."""
    if u == v or u not in gi or v not in gi:
        raise ValueError("u and v must be distinct vertices of the graph")
    try:
        same = find_coloring(gi, c, pins={u: 1, v: 1}, budget=budget) is not None
    except InfeasiblePin:
        same = False
    distinct = c >= 2 and find_coloring(gi, c, pins={u: 1, v: 2}, budget=budget) is not None
    return same, distinct


@dataclass
class TwoCutSplit:
    u: int
    v: int
    G1: Graph
    G2: Graph
    G1_plus: Graph
    G2_contract: Graph
    merged_vertex: int
    type_one_flags: Tuple[bool, bool] = (True, False)
    type_two_flags: Tuple[bool, bool] = (False, True)

    def glue(self) -> Graph:
        """Reassemble G from the two sides."""
        vs = set(self.G1.vertices) | set(self.G2.vertices)
        labels = {**self.G2.labels, **self.G1.labels}
        return Graph(vs, list(self.G1.edges) + list(self.G2.edges), labels)


def split_two_cut(g: Graph, u: int, v: int, k: int,
                  budget: int = DEFAULT_BUDGET) -> TwoCutSplit:
    """Split a k-critical graph at a 2-cut into its type-one and type-two sides."""
    if u == v or u not in g or v not in g:
        raise ValueError("u and v must be distinct vertices of the graph")
    comps = g.components(removed=(u, v))
    if len(comps) < 2:
        raise NotACut(f"{{{u},{v}}} does not separate the graph")
    if g.has_edge(u, v):
        raise AdjacentCutPair(f"cut vertices {u},{v} are adjacent")
    if len(comps) > 2:
        raise NotExactlyTwoComponents(f"G-{{{u},{v}}} has {len(comps)} components")
    sides = [g.subgraph(set(comp) | {u, v}) for comp in comps]
    flags = [two_cut_type(s, u, v, k - 1, budget) for s in sides]
    if flags[0] == (True, False) and flags[1] == (False, True):
        g1, g2 = sides
    elif flags[1] == (True, False) and flags[0] == (False, True):
        g2, g1 = sides
    else:
        raise TypeClassificationFailed(f"side types {flags} are not one exclusive type each")
    g1_plus = g1.add_edge(u, v)
    g2_contract, z = g2.contract(u, v)
    for name, h in (("G1+uv", g1_plus), ("G2/uv", g2_contract)):
        if not is_k_critical(h, k, budget).is_critical:
            raise NotCritical(f"{name} is not {k}-critical")
    if g2.neighbor_set(u) & g2.neighbor_set(v):
        raise TypeClassificationFailed("u and v have a common neighbour in the type-two side")
    return TwoCutSplit(u, v, g1, g2, g1_plus, g2_contract, z)
